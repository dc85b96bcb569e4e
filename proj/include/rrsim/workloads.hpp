#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rrsim/metrics.hpp"
#include "rrsim/model.hpp"

namespace rrsim {

/// The six evaluation cases plus the DABRR walkthrough workload.
enum class CaseId { I, II, III, IV, V, VI, Illustration };

inline constexpr std::array<CaseId, 6> kPaperCases = {CaseId::I, CaseId::II, CaseId::III,
                                                      CaseId::IV, CaseId::V, CaseId::VI};
inline constexpr std::array<CaseId, 3> kZeroArrivalCases = {CaseId::I, CaseId::II, CaseId::III};
inline constexpr std::array<CaseId, 3> kStaggeredArrivalCases = {CaseId::IV, CaseId::V, CaseId::VI};

/// "I".."VI", "ILL".
std::string_view case_label(CaseId id);
std::optional<CaseId> parse_case_id(std::string_view text);

Workload paper_case(CaseId id);

struct CaseValues {
  std::vector<Millis> quanta;
  std::int64_t context_switches = 0;
  Rational avg_waiting;
  Rational avg_turnaround;
};

struct Erratum {
  std::string id;  // "E1", "E2"
  std::string explanation;
  CaseValues derived;
  std::vector<Millis> derived_completions;  // submission order
};

struct ExpectedRow {
  CaseId case_id = CaseId::I;
  PolicyDescriptor algorithm;
  CaseValues paper;
  std::optional<Erratum> erratum;

  /// Values the simulator is expected to produce: the paper's cells, or the
  /// rule-derived block for erratum rows.
  const CaseValues& simulated() const { return erratum ? erratum->derived : paper; }
};

/// Per-case table cell values for one of the six cases. Throws
/// std::out_of_range for the illustration fixture.
ExpectedRow expected_row(CaseId id, PolicyName algorithm);

/// One row of the zero-arrival or staggered-arrival aggregate table.
struct ExpectedAggregateRow {
  PolicyName algorithm = PolicyName::RR;
  std::array<std::int64_t, 3> context_switches{};
  std::int64_t context_switch_total = 0;
  std::array<Rational, 3> waiting{};
  Rational waiting_total;
  std::array<Rational, 3> turnaround{};
  Rational turnaround_total;
};

enum class CaseGroup { ZeroArrival, StaggeredArrival };

std::span<const CaseId> cases_in(CaseGroup group);
std::string_view group_label(CaseGroup group);

/// Paper aggregate tables, transcribed verbatim.
ExpectedAggregateRow expected_aggregate(CaseGroup group, PolicyName algorithm);

struct ExpectedGrandRow {
  PolicyName algorithm = PolicyName::RR;
  Rational waiting_total;
  Rational waiting_gain_pct;
  Rational turnaround_total;
  Rational turnaround_gain_pct;
};

/// Grand totals and percentage gains over RR, transcribed verbatim.
ExpectedGrandRow expected_grand(PolicyName algorithm);

/// Erratum ids whose rows feed an aggregate cell of `algorithm` over `cases`.
std::vector<std::string> errata_affecting(PolicyName algorithm, std::span<const CaseId> cases);

/// Illustration fixture expectations (DABRR only).
struct IllustrationExpectation {
  std::vector<Millis> quanta;
  std::vector<Millis> turnaround;
  std::vector<Millis> waiting;
  Rational avg_turnaround;
  Rational avg_waiting;
};
IllustrationExpectation illustration_expectation();

enum class BurstOrder { Ascending, Descending, Random };

struct GeneratorSpec {
  std::size_t n = 5;
  Millis burst_min = 1;
  Millis burst_max = 100;
  BurstOrder order = BurstOrder::Random;
  /// nullopt: all arrivals at 0; otherwise cumulative gaps drawn from [0, max_gap].
  std::optional<Millis> max_gap;
  std::uint64_t seed = 0;
};

/// Deterministic in (spec, seed). Throws std::invalid_argument on a bad spec.
Workload generate_workload(const GeneratorSpec& spec);

}  // namespace rrsim
