#include "rrsim/reproduce.hpp"

#include <algorithm>
#include <json.hpp>
#include <map>

#include "rrsim/policies.hpp"

namespace rrsim {

namespace {

std::string join(const std::vector<Millis>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + std::to_string(values[i]);
  return out;
}

std::string join(const std::vector<std::string>& ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) out += (i ? "+" : "") + ids[i];
  return out;
}

class CellSink {
 public:
  explicit CellSink(ReproductionReport& report) : report_(report) {}

  /// `derived` is what the stated rules produce for this cell; it differs
  /// from `expected` only where an erratum feeds the cell.
  void add(std::string table, std::string row, std::string column, std::string expected, std::string derived,
           std::string actual, const std::vector<std::string>& errata) {
    ReproductionCell cell{std::move(table), std::move(row), std::move(column), std::move(expected), std::move(actual),
                          CellOutcome::Match, {}, {}};
    if (derived == cell.expected) {
      cell.outcome = cell.actual == cell.expected ? CellOutcome::Match : CellOutcome::Mismatch;
    } else {
      cell.outcome = cell.actual == derived ? CellOutcome::KnownErratum : CellOutcome::Mismatch;
      cell.erratum_ids = join(errata);
      cell.derived = std::move(derived);
    }
    report_.cells.push_back(std::move(cell));
  }

 private:
  ReproductionReport& report_;
};

/// Sum of the values the stated rules give over `cases`, taken from the
/// expected-results registry rather than from the simulator.
struct DerivedTotals {
  std::int64_t context_switches = 0;
  Rational waiting;
  Rational turnaround;
};

DerivedTotals derived_totals(PolicyName algorithm, std::span<const CaseId> cases) {
  DerivedTotals t;
  for (CaseId id : cases) {
    const auto row = expected_row(id, algorithm);
    t.context_switches += row.simulated().context_switches;
    t.waiting += row.simulated().avg_waiting;
    t.turnaround += row.simulated().avg_turnaround;
  }
  return t;
}

void add_case_cells(CellSink& sink, CaseId id) {
  const std::string table = "case-" + std::string(case_label(id));
  for (PolicyName name : kAllPolicies) {
    const auto expected = expected_row(id, name);
    const auto& paper = expected.paper;
    const auto& derived = expected.simulated();
    const auto actual = run_paper_case(id, name).metrics;
    std::vector<std::string> errata;
    if (expected.erratum) errata.push_back(expected.erratum->id);
    const std::string row{display_name(name)};

    sink.add(table, row, "quanta", join(paper.quanta), join(derived.quanta), join(actual.quanta()), errata);
    sink.add(table, row, "context_switches", std::to_string(paper.context_switches),
             std::to_string(derived.context_switches), std::to_string(actual.context_switches), errata);
    sink.add(table, row, "avg_waiting", to_fixed(paper.avg_waiting, 1), to_fixed(derived.avg_waiting, 1),
             to_fixed(actual.avg_waiting, 1), errata);
    sink.add(table, row, "avg_turnaround", to_fixed(paper.avg_turnaround, 1), to_fixed(derived.avg_turnaround, 1),
             to_fixed(actual.avg_turnaround, 1), errata);
  }
}

void add_group_cells(CellSink& sink, CaseGroup group, const ComparisonReport& report) {
  const std::string table = "totals-" + std::string(group_label(group));
  const auto cases = cases_in(group);
  for (PolicyName name : kAllPolicies) {
    const auto paper = expected_aggregate(group, name);
    const auto& actual = *report.find(name);
    const std::string row{display_name(name)};

    for (std::size_t k = 0; k < cases.size(); ++k) {
      const std::string label{case_label(cases[k])};
      const auto one = cases.subspan(k, 1);
      const auto derived = derived_totals(name, one);
      const auto errata = errata_affecting(name, one);
      const auto& metrics = actual.cases[k].metrics;
      sink.add(table, row, "cs:" + label, std::to_string(paper.context_switches[k]),
               std::to_string(derived.context_switches), std::to_string(metrics.context_switches), errata);
      sink.add(table, row, "waiting:" + label, to_fixed(paper.waiting[k], 2), to_fixed(derived.waiting, 2),
               to_fixed(metrics.avg_waiting, 2), errata);
      sink.add(table, row, "turnaround:" + label, to_fixed(paper.turnaround[k], 2), to_fixed(derived.turnaround, 2),
               to_fixed(metrics.avg_turnaround, 2), errata);
    }
    const auto derived = derived_totals(name, cases);
    const auto errata = errata_affecting(name, cases);
    sink.add(table, row, "cs:total", std::to_string(paper.context_switch_total), std::to_string(derived.context_switches),
             std::to_string(actual.context_switch_total), errata);
    sink.add(table, row, "waiting:total", to_fixed(paper.waiting_total, 2), to_fixed(derived.waiting, 2),
             to_fixed(actual.waiting_total, 2), errata);
    sink.add(table, row, "turnaround:total", to_fixed(paper.turnaround_total, 2), to_fixed(derived.turnaround, 2),
             to_fixed(actual.turnaround_total, 2), errata);
  }
}

void add_grand_cells(CellSink& sink, const ComparisonReport& report) {
  const auto baseline = derived_totals(PolicyName::RR, kPaperCases);
  for (PolicyName name : kAllPolicies) {
    const auto paper = expected_grand(name);
    const auto& actual = *report.find(name);
    const auto derived = derived_totals(name, kPaperCases);
    auto errata = errata_affecting(name, kPaperCases);
    const std::string row{display_name(name)};

    sink.add("grand", row, "waiting_total", to_fixed(paper.waiting_total, 2), to_fixed(derived.waiting, 2),
             to_fixed(actual.waiting_total, 2), errata);
    sink.add("grand", row, "waiting_gain_pct", to_fixed(paper.waiting_gain_pct, 2),
             to_fixed(percentage_gain(baseline.waiting, derived.waiting), 2), to_fixed(actual.waiting_gain_pct, 2),
             errata);
    sink.add("grand", row, "turnaround_total", to_fixed(paper.turnaround_total, 2), to_fixed(derived.turnaround, 2),
             to_fixed(actual.turnaround_total, 2), errata);
    sink.add("grand", row, "turnaround_gain_pct", to_fixed(paper.turnaround_gain_pct, 2),
             to_fixed(percentage_gain(baseline.turnaround, derived.turnaround), 2),
             to_fixed(actual.turnaround_gain_pct, 2), errata);
  }
}

ComparisonReport compare_cases(std::string label, std::span<const CaseId> cases) {
  std::vector<AlgorithmRuns> runs;
  for (PolicyName name : kAllPolicies) {
    AlgorithmRuns r{paper_descriptor(name), {}};
    for (CaseId id : cases) r.cases.push_back({std::string(case_label(id)), run_paper_case(id, name).metrics});
    runs.push_back(std::move(r));
  }
  return compare_runs(std::move(label), runs, paper_descriptor(PolicyName::RR));
}

}  // namespace

std::string_view to_string(CellOutcome outcome) {
  switch (outcome) {
    case CellOutcome::Match: return "match";
    case CellOutcome::Mismatch: return "mismatch";
    case CellOutcome::KnownErratum: return "known_erratum";
  }
  return "?";
}

std::size_t ReproductionReport::count(CellOutcome outcome) const {
  return static_cast<std::size_t>(
      std::count_if(cells.begin(), cells.end(), [&](const ReproductionCell& c) { return c.outcome == outcome; }));
}

PaperRun run_paper_case(CaseId id, PolicyName algorithm) {
  const auto workload = paper_case(id);
  auto trace = simulate(workload, make_policy(paper_descriptor(algorithm)));
  auto metrics = compute_metrics(trace, workload);
  return {std::move(trace), std::move(metrics)};
}

std::vector<ComparisonReport> paper_comparisons() {
  return {compare_cases("zero", kZeroArrivalCases), compare_cases("nonzero", kStaggeredArrivalCases),
          compare_cases("grand", kPaperCases)};
}

ReproductionReport reproduce_paper(std::span<const CaseId> cases) {
  ReproductionReport report;
  CellSink sink(report);
  std::vector<CaseId> selected;
  for (CaseId id : kPaperCases) {
    if (std::find(cases.begin(), cases.end(), id) != cases.end()) selected.push_back(id);
  }
  for (CaseId id : selected) add_case_cells(sink, id);
  if (selected.size() == kPaperCases.size()) {
    const auto comparisons = paper_comparisons();
    add_group_cells(sink, CaseGroup::ZeroArrival, comparisons[0]);
    add_group_cells(sink, CaseGroup::StaggeredArrival, comparisons[1]);
    add_grand_cells(sink, comparisons[2]);
  }
  return report;
}

std::string report_to_text(const ReproductionReport& report, bool verbose) {
  std::string out;
  std::map<std::string, std::array<std::size_t, 3>> per_table;
  std::vector<std::string> table_order;
  for (const auto& c : report.cells) {
    if (!per_table.count(c.table)) table_order.push_back(c.table);
    ++per_table[c.table][static_cast<std::size_t>(c.outcome)];
    if (verbose || c.outcome != CellOutcome::Match) {
      out += c.table + "  " + c.row + "  " + c.column + "  paper=" + c.expected + "  actual=" + c.actual + "  " +
             std::string(to_string(c.outcome));
      if (c.outcome == CellOutcome::KnownErratum) out += " " + c.erratum_ids + " (rule-derived " + c.derived + ")";
      out += "\n";
    }
  }
  if (!out.empty()) out += "\n";
  for (const auto& t : table_order) {
    const auto& n = per_table[t];
    out += t + ": " + std::to_string(n[0]) + " match, " + std::to_string(n[1]) + " mismatch, " + std::to_string(n[2]) +
           " known erratum\n";
  }
  out += "total: " + std::to_string(report.count(CellOutcome::Match)) + " match, " +
         std::to_string(report.count(CellOutcome::Mismatch)) + " mismatch, " +
         std::to_string(report.count(CellOutcome::KnownErratum)) + " known erratum\n";
  return out;
}

std::string report_to_json(const ReproductionReport& report) {
  nlohmann::json doc;
  doc["cells"] = nlohmann::json::array();
  for (const auto& c : report.cells) {
    nlohmann::json cell = {{"table", c.table},       {"row", c.row},       {"column", c.column},
                           {"expected", c.expected}, {"actual", c.actual}, {"outcome", to_string(c.outcome)}};
    if (c.outcome == CellOutcome::KnownErratum) {
      cell["erratum"] = c.erratum_ids;
      cell["derived"] = c.derived;
    }
    doc["cells"].push_back(std::move(cell));
  }
  doc["summary"] = {{"match", report.count(CellOutcome::Match)},
                    {"mismatch", report.count(CellOutcome::Mismatch)},
                    {"known_erratum", report.count(CellOutcome::KnownErratum)}};
  doc["exit_status"] = report.exit_status();
  return doc.dump(2) + "\n";
}

}  // namespace rrsim
