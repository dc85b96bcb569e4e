#pragma once

#include <span>
#include <string>
#include <vector>

#include "rrsim/metrics.hpp"
#include "rrsim/workloads.hpp"

namespace rrsim {

enum class CellOutcome { Match, Mismatch, KnownErratum };

std::string_view to_string(CellOutcome outcome);

struct ReproductionCell {
  std::string table;   // "case-I".."case-VI", "totals-zero", "totals-nonzero", "grand"
  std::string row;     // algorithm display name
  std::string column;  // e.g. "quanta", "avg_waiting", "waiting:III", "turnaround_gain_pct"
  std::string expected;
  std::string actual;
  CellOutcome outcome = CellOutcome::Match;
  std::string erratum_ids;  // "E1", "E1+E2" for known errata
  std::string derived;      // rule-derived value for erratum cells
};

struct ReproductionReport {
  std::vector<ReproductionCell> cells;

  std::size_t count(CellOutcome outcome) const;
  /// 0 when no cell mismatches; known errata do not fail the report.
  int exit_status() const { return count(CellOutcome::Mismatch) == 0 ? 0 : 1; }
};

struct PaperRun {
  ExecutionTrace trace;
  RunMetrics metrics;
};

/// Runs one policy, with the paper's parameters, on a fixture.
PaperRun run_paper_case(CaseId id, PolicyName algorithm);

/// Zero-arrival, staggered-arrival and grand comparisons (labels "zero",
/// "nonzero", "grand") over all seven policies against RR.
std::vector<ComparisonReport> paper_comparisons();

/// Compares every table cell of the selected cases; the aggregate and gain
/// tables are included only when all six cases are selected.
ReproductionReport reproduce_paper(std::span<const CaseId> cases);

std::string report_to_text(const ReproductionReport& report, bool verbose);
std::string report_to_json(const ReproductionReport& report);

}  // namespace rrsim
