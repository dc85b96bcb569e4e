#include "rrsim/metrics.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace rrsim {

std::string to_fixed(const Rational& value, int places) {
  std::int64_t scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  const bool negative = value < 0;
  const Rational magnitude = negative ? -value : value;
  const Rational scaled = magnitude * scale;
  std::int64_t units = boost::rational_cast<std::int64_t>(scaled);  // truncates
  if (scaled - units >= Rational(1, 2)) ++units;

  std::string digits = std::to_string(units / scale);
  if (places > 0) {
    std::string frac = std::to_string(units % scale);
    frac.insert(0, static_cast<std::size_t>(places) - frac.size(), '0');
    digits += "." + frac;
  }
  return (negative && units != 0 ? "-" : "") + digits;
}

std::vector<Millis> RunMetrics::quanta() const {
  std::vector<Millis> out;
  for (const auto& q : quantum_log) out.push_back(q.quantum);
  return out;
}

std::int64_t context_switches(const ExecutionTrace& trace) {
  return trace.slices.empty() ? 0 : static_cast<std::int64_t>(trace.slices.size()) - 1;
}

RunMetrics compute_metrics(const ExecutionTrace& trace, const Workload& workload) {
  if (const auto check = replay_check(trace, workload); !check) {
    throw InconsistentTrace("trace does not replay against workload: " + check.violations.front());
  }

  RunMetrics m;
  m.descriptor = trace.algorithm;
  m.quantum_log = trace.quantum_log;
  m.context_switches = context_switches(trace);

  std::vector<Millis> first_start(workload.size(), -1);
  std::vector<Millis> completion(workload.size(), 0);
  for (const auto& s : trace.slices) {
    const std::size_t i = *workload.index_of(s.pid);
    if (first_start[i] < 0) first_start[i] = s.start;
    completion[i] = std::max(completion[i], s.end);
  }

  std::int64_t waiting_sum = 0, turnaround_sum = 0, response_sum = 0;
  Millis last_end = 0;
  for (std::size_t i = 0; i < workload.size(); ++i) {
    const auto& p = workload[i];
    ProcessMetrics pm{p.pid, completion[i], completion[i] - p.arrival, 0, first_start[i] - p.arrival};
    pm.waiting = pm.turnaround - p.burst;
    waiting_sum += pm.waiting;
    turnaround_sum += pm.turnaround;
    response_sum += pm.response;
    last_end = std::max(last_end, pm.completion);
    m.per_process.push_back(std::move(pm));
  }

  const auto n = static_cast<std::int64_t>(workload.size());
  m.avg_waiting = Rational(waiting_sum, n);
  m.avg_turnaround = Rational(turnaround_sum, n);
  m.avg_response = Rational(response_sum, n);
  m.makespan = last_end - workload.min_arrival();
  m.throughput = Rational(n, m.makespan);
  m.cpu_utilization = Rational(workload.total_burst() * 100, m.makespan);
  return m;
}

const AlgorithmTotals* ComparisonReport::find(PolicyName name) const {
  auto it = std::find_if(rows.begin(), rows.end(), [&](const AlgorithmTotals& r) { return r.algorithm.name == name; });
  return it == rows.end() ? nullptr : &*it;
}

Rational percentage_gain(const Rational& baseline, const Rational& value) {
  if (baseline.numerator() == 0) return Rational(0);
  return (baseline - value) / baseline * 100;
}

ComparisonReport compare_runs(std::string group_label, std::span<const AlgorithmRuns> runs,
                              const PolicyDescriptor& baseline) {
  auto base_it = std::find_if(runs.begin(), runs.end(), [&](const AlgorithmRuns& r) { return r.algorithm == baseline; });
  if (base_it == runs.end()) throw MismatchedCaseSets("baseline " + baseline.to_spec() + " has no runs");

  auto labels_of = [](const AlgorithmRuns& r) {
    std::set<std::string> labels;
    for (const auto& c : r.cases) labels.insert(c.case_label);
    return labels;
  };
  const auto expected = labels_of(*base_it);

  ComparisonReport report;
  report.group_label = std::move(group_label);
  report.baseline = baseline;
  for (const auto& c : base_it->cases) report.case_labels.push_back(c.case_label);

  for (const auto& r : runs) {
    if (labels_of(r) != expected || r.cases.size() != expected.size()) {
      throw MismatchedCaseSets(r.algorithm.to_spec() + " does not cover the baseline's case set");
    }
    AlgorithmTotals t;
    t.algorithm = r.algorithm;
    // Keep cases in the baseline's order.
    for (const auto& label : report.case_labels) {
      const auto& c = *std::find_if(r.cases.begin(), r.cases.end(),
                                    [&](const CaseRun& cr) { return cr.case_label == label; });
      t.context_switch_total += c.metrics.context_switches;
      t.waiting_total += c.metrics.avg_waiting;
      t.turnaround_total += c.metrics.avg_turnaround;
      t.cases.push_back(c);
    }
    report.rows.push_back(std::move(t));
  }

  const auto& base = *std::find_if(report.rows.begin(), report.rows.end(),
                                   [&](const AlgorithmTotals& t) { return t.algorithm == baseline; });
  const Rational base_wait = base.waiting_total;
  const Rational base_tat = base.turnaround_total;
  for (auto& t : report.rows) {
    t.waiting_gain_pct = percentage_gain(base_wait, t.waiting_total);
    t.turnaround_gain_pct = percentage_gain(base_tat, t.turnaround_total);
  }
  return report;
}

}  // namespace rrsim
