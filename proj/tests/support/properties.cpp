#include "properties.hpp"

#include <algorithm>

#include "reference_executor.hpp"
#include "rrsim/metrics.hpp"
#include "rrsim/policies.hpp"

namespace rrsim::testing {

namespace {

std::string tag(const PolicyBehavior& p) { return p.descriptor.to_spec() + ": "; }

}  // namespace

std::vector<std::string> check_invariants(const Workload& w) {
  std::vector<std::string> out;
  for (PolicyName name : kAllPolicies) {
    const auto policy = make_policy(paper_descriptor(name));
    const auto trace = simulate(w, policy);
    for (const auto& v : replay_check(trace, w).violations) out.push_back(tag(policy) + v);
    if (!(simulate(w, policy) == trace)) out.push_back(tag(policy) + "non-deterministic trace");
    if (trace.quantum_log.empty()) out.push_back(tag(policy) + "empty quantum log");
    for (const auto& q : trace.quantum_log) {
      if (q.quantum < 1) out.push_back(tag(policy) + "quantum < 1");
    }
    if (name == PolicyName::IRRVQ && trace.quantum_log.size() > w.size()) {
      out.push_back(tag(policy) + "more cycles than processes");
    }
    if (name != PolicyName::RR) {
      const auto& log = trace.quantum_log;
      const bool consistent = std::all_of(trace.slices.begin(), trace.slices.end(), [&](const Slice& s) {
        const auto k = static_cast<std::size_t>(s.cycle);
        return k >= 1 && k <= log.size() && log[k - 1].quantum == s.quantum;
      });
      if (!consistent) out.push_back(tag(policy) + "slice quantum differs from its cycle's logged quantum");
    }

    const auto m = compute_metrics(trace, w);
    if (m.context_switches + 1 != static_cast<std::int64_t>(trace.slices.size())) {
      out.push_back(tag(policy) + "context switches != slices - 1");
    }
    std::int64_t waiting = 0, turnaround = 0, identity = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const auto& p = m.per_process[i];
      if (p.turnaround != p.completion - w[i].arrival) out.push_back(tag(policy) + p.pid + " turnaround");
      if (p.waiting != p.turnaround - w[i].burst || p.waiting < 0) out.push_back(tag(policy) + p.pid + " waiting");
      if (p.response < 0 || p.response > p.waiting) out.push_back(tag(policy) + p.pid + " response");
      waiting += p.waiting;
      turnaround += p.turnaround;
      identity += p.completion - w[i].arrival - w[i].burst;
    }
    const auto n = static_cast<std::int64_t>(w.size());
    if (waiting != identity || m.avg_waiting != Rational(waiting, n) || m.avg_turnaround != Rational(turnaround, n)) {
      out.push_back(tag(policy) + "averages drift from per-process rows");
    }
    if (m.cpu_utilization > Rational(100)) out.push_back(tag(policy) + "utilization above 100%");
    if (trace.idles.empty() && m.cpu_utilization != Rational(100)) out.push_back(tag(policy) + "no idle but utilization < 100%");
  }
  return out;
}

std::vector<std::string> check_single_process(const Workload& w) {
  std::vector<std::string> out;
  for (PolicyName name : kAllPolicies) {
    const auto policy = make_policy(paper_descriptor(name));
    const auto trace = simulate(w, policy);
    if (trace.slices.empty() || trace.slices.back().end != w[0].arrival + w[0].burst) {
      out.push_back(tag(policy) + "single process completes late");
    }
  }
  return out;
}

std::vector<std::string> check_fcfs_reduction(const Workload& w) {
  std::vector<std::string> out;
  Millis longest = 0;
  for (const auto& p : w.processes()) longest = std::max(longest, p.burst);
  const auto trace = simulate(w, make_round_robin(longest + static_cast<Millis>(w.size() % 3)));
  if (trace.slices.size() != w.size()) return {"rr: " + std::to_string(trace.slices.size()) + " slices, expected one per process"};
  Millis t = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const auto& s = trace.slices[i];
    if (s.pid != w[i].pid || s.start != t || s.end != t + w[i].burst) out.push_back("rr: slice " + std::to_string(i) + " is not FCFS");
    t += w[i].burst;
  }
  return out;
}

std::vector<std::string> check_against_reference(const Workload& w) {
  std::vector<std::string> out;
  for (PolicyName name : kAllPolicies) {
    const auto descriptor = paper_descriptor(name);
    const auto trace = simulate(w, make_policy(descriptor));
    std::vector<Millis> completion(w.size(), -1);
    for (const auto& s : trace.slices) completion[*w.index_of(s.pid)] = s.end;
    const auto knob = descriptor.parameters.empty() ? Millis{25} : descriptor.parameters.begin()->second;
    const auto ref = reference_run(w, name, knob);
    if (ref.completion != completion) out.push_back(descriptor.to_spec() + ": completions differ from reference");
    if (name != PolicyName::RR && ref.quanta != trace.quanta()) out.push_back(descriptor.to_spec() + ": quanta differ from reference");
    if (ref.slices != trace.slices.size()) out.push_back(descriptor.to_spec() + ": slice count differs from reference");
  }
  return out;
}

}  // namespace rrsim::testing
