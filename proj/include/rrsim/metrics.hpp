#pragma once

#include <boost/rational.hpp>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rrsim/engine.hpp"

namespace rrsim {

using Rational = boost::rational<std::int64_t>;

/// Decimal rendering rounded half away from zero, e.g. to_fixed(1307/5, 1) == "261.4".
std::string to_fixed(const Rational& value, int places);

struct ProcessMetrics {
  std::string pid;
  Millis completion = 0;
  Millis turnaround = 0;
  Millis waiting = 0;
  Millis response = 0;

  friend bool operator==(const ProcessMetrics&, const ProcessMetrics&) = default;
};

struct RunMetrics {
  PolicyDescriptor descriptor;
  std::vector<ProcessMetrics> per_process;  // submission order
  Rational avg_waiting;
  Rational avg_turnaround;
  Rational avg_response;
  std::int64_t context_switches = 0;
  Millis makespan = 0;
  Rational throughput;       // processes per ms
  Rational cpu_utilization;  // percent
  std::vector<QuantumRecord> quantum_log;

  std::vector<Millis> quanta() const;
};

class InconsistentTrace : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Boundaries between consecutive slices (slices - 1). Same-process quantum
/// expiries count; idle gaps do not.
std::int64_t context_switches(const ExecutionTrace& trace);

/// Throws InconsistentTrace when replay_check fails.
RunMetrics compute_metrics(const ExecutionTrace& trace, const Workload& workload);

struct CaseRun {
  std::string case_label;
  RunMetrics metrics;
};

struct AlgorithmRuns {
  PolicyDescriptor algorithm;
  std::vector<CaseRun> cases;
};

struct AlgorithmTotals {
  PolicyDescriptor algorithm;
  std::vector<CaseRun> cases;
  std::int64_t context_switch_total = 0;
  Rational waiting_total;
  Rational turnaround_total;
  Rational waiting_gain_pct;
  Rational turnaround_gain_pct;
};

struct ComparisonReport {
  std::string group_label;
  PolicyDescriptor baseline;
  std::vector<std::string> case_labels;
  std::vector<AlgorithmTotals> rows;

  const AlgorithmTotals* find(PolicyName name) const;
};

class MismatchedCaseSets : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Sums per-case averages for every algorithm and expresses each total as a
/// percentage reduction relative to the baseline's total.
ComparisonReport compare_runs(std::string group_label, std::span<const AlgorithmRuns> runs,
                              const PolicyDescriptor& baseline);

/// Percentage reduction of `value` relative to `baseline`; 0 when baseline is 0.
Rational percentage_gain(const Rational& baseline, const Rational& value);

}  // namespace rrsim
