#include "rrsim/engine.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_map>

namespace rrsim {

namespace {

/// Mutable per-run state shared by both queue disciplines.
class Run {
 public:
  Run(const Workload& workload, const PolicyBehavior& policy)
      : workload_(workload), policy_(policy), remaining_(workload.size()), dispatched_(workload.size(), false) {
    trace_.algorithm = policy.descriptor;
    for (std::size_t i = 0; i < workload.size(); ++i) {
      remaining_[i] = workload[i].burst;
      index_by_pid_.emplace(workload[i].pid, i);
    }
    arrivals_.resize(workload.size());
    std::iota(arrivals_.begin(), arrivals_.end(), std::size_t{0});
    std::stable_sort(arrivals_.begin(), arrivals_.end(),
                     [&](std::size_t a, std::size_t b) { return workload[a].arrival < workload[b].arrival; });
    now_ = workload.min_arrival();
  }

  ExecutionTrace take() && { return std::move(trace_); }

  void run_fifo() {
    admit();
    Millis quantum = 0;
    int cycle = 1;
    std::size_t pass_left = queue_.size();
    while (completed_ < workload_.size()) {
      if (queue_.empty()) {
        idle_until_next_arrival();
        pass_left = queue_.size();
        continue;
      }
      if (quantum == 0) quantum = plan(cycle).quantum;
      const std::size_t i = queue_.front();
      queue_.pop_front();
      dispatch(i, quantum, cycle);
      admit();
      if (remaining_[i] > 0) queue_.push_back(i);
      if (--pass_left == 0) {
        ++cycle;
        pass_left = queue_.size();
      }
    }
  }

  void run_cycles() {
    admit();
    int cycle = 0;
    const bool restart = policy_.arrival_mode == ArrivalMode::SliceBoundaryRestart;
    while (completed_ < workload_.size()) {
      if (queue_.empty()) {
        idle_until_next_arrival();
        continue;
      }
      ++cycle;
      const auto planned = plan(cycle);
      queue_.clear();
      for (std::size_t k = 0; k < planned.order.size(); ++k) {
        const std::size_t i = planned.order[k];
        dispatch(i, planned.quantum, cycle);
        if (remaining_[i] > 0) queue_.push_back(i);
        if (restart && arrival_pending()) {
          queue_.insert(queue_.end(), planned.order.begin() + static_cast<std::ptrdiff_t>(k + 1), planned.order.end());
          break;
        }
      }
      admit();
    }
  }

 private:
  struct ResolvedPlan {
    std::vector<std::size_t> order;
    Millis quantum;
  };

  bool arrival_pending() const {
    return next_arrival_ < arrivals_.size() && workload_[arrivals_[next_arrival_]].arrival <= now_;
  }

  void admit() {
    while (arrival_pending()) queue_.push_back(arrivals_[next_arrival_++]);
  }

  void idle_until_next_arrival() {
    const Millis next = workload_[arrivals_[next_arrival_]].arrival;
    trace_.idles.push_back({now_, next});
    now_ = next;
    admit();
  }

  ResolvedPlan plan(int cycle) {
    ReadySnapshot snapshot;
    snapshot.now = now_;
    snapshot.cycle_index = cycle;
    snapshot.entries.reserve(queue_.size());
    for (std::size_t i : queue_) {
      const auto& p = workload_[i];
      snapshot.entries.push_back({p.pid, remaining_[i], p.arrival, i, dispatched_[i]});
      snapshot.contains_new_arrivals = snapshot.contains_new_arrivals || !dispatched_[i];
    }

    const CyclePlan raw = policy_.plan(snapshot);
    if (raw.quantum < 1) {
      throw PolicyPlanInvalid(policy_.descriptor.to_spec() + ": quantum " + std::to_string(raw.quantum) + " < 1");
    }
    if (raw.order.size() != queue_.size()) {
      throw PolicyPlanInvalid(policy_.descriptor.to_spec() + ": plan is not a permutation of the ready queue");
    }
    ResolvedPlan resolved{{}, raw.quantum};
    resolved.order.reserve(raw.order.size());
    std::vector<bool> used(workload_.size(), false);
    std::vector<bool> ready(workload_.size(), false);
    for (std::size_t i : queue_) ready[i] = true;
    for (const auto& pid : raw.order) {
      auto it = index_by_pid_.find(pid);
      if (it == index_by_pid_.end() || !ready[it->second] || used[it->second]) {
        throw PolicyPlanInvalid(policy_.descriptor.to_spec() + ": plan is not a permutation of the ready queue");
      }
      used[it->second] = true;
      resolved.order.push_back(it->second);
    }
    trace_.quantum_log.push_back({cycle, raw.quantum});
    return resolved;
  }

  void dispatch(std::size_t i, Millis quantum, int cycle) {
    const Millis run = std::min(quantum, remaining_[i]);
    remaining_[i] -= run;
    dispatched_[i] = true;
    const bool done = remaining_[i] == 0;
    trace_.slices.push_back({workload_[i].pid, now_, now_ + run, cycle, quantum,
                             done ? Termination::Completed : Termination::QuantumExpired});
    now_ += run;
    if (done) ++completed_;
  }

  const Workload& workload_;
  const PolicyBehavior& policy_;
  std::vector<Millis> remaining_;
  std::vector<bool> dispatched_;
  std::unordered_map<std::string, std::size_t> index_by_pid_;
  std::vector<std::size_t> arrivals_;  // submission indices by (arrival, submission order)
  std::size_t next_arrival_ = 0;
  std::deque<std::size_t> queue_;
  std::size_t completed_ = 0;
  Millis now_ = 0;
  ExecutionTrace trace_;
};

}  // namespace

ExecutionTrace simulate(const Workload& workload, const PolicyBehavior& policy) {
  if (!policy.plan) throw PolicyPlanInvalid(policy.descriptor.to_spec() + ": policy has no planner");
  Run run(workload, policy);
  if (policy.discipline == QueueDiscipline::FifoTailRejoin) {
    run.run_fifo();
  } else {
    run.run_cycles();
  }
  return std::move(run).take();
}

ReplayResult replay_check(const ExecutionTrace& trace, const Workload& workload) {
  ReplayResult result;
  auto fail = [&](std::string msg) { result.violations.push_back(std::move(msg)); };

  std::vector<Millis> executed(workload.size(), 0);
  std::vector<Millis> completion(workload.size(), -1);
  std::vector<std::ptrdiff_t> last_slice(workload.size(), -1);

  for (std::size_t s = 0; s < trace.slices.size(); ++s) {
    const auto& slice = trace.slices[s];
    const auto where = "slice " + std::to_string(s) + " (" + slice.pid + ")";
    const auto idx = workload.index_of(slice.pid);
    if (!idx) {
      fail(where + ": unknown pid");
      continue;
    }
    if (slice.end <= slice.start) fail(where + ": empty or reversed interval");
    if (slice.quantum < 1) fail(where + ": quantum < 1");
    if (slice.duration() > slice.quantum) fail(where + ": longer than its quantum");
    if (slice.start < workload[*idx].arrival) fail(where + ": starts before arrival");
    executed[*idx] += slice.duration();
    completion[*idx] = std::max(completion[*idx], slice.end);
    last_slice[*idx] = static_cast<std::ptrdiff_t>(s);
  }

  for (std::size_t s = 0; s < trace.slices.size(); ++s) {
    const auto& slice = trace.slices[s];
    const auto idx = workload.index_of(slice.pid);
    if (!idx) continue;
    const bool is_last = last_slice[*idx] == static_cast<std::ptrdiff_t>(s);
    if (is_last != (slice.termination == Termination::Completed)) {
      fail("slice " + std::to_string(s) + " (" + slice.pid + "): termination flag disagrees with position");
    }
  }

  for (std::size_t i = 0; i < workload.size(); ++i) {
    if (executed[i] != workload[i].burst) {
      fail(workload[i].pid + ": executed " + std::to_string(executed[i]) + " ms of burst " +
           std::to_string(workload[i].burst));
    }
  }

  // Slices and idle gaps, merged by start time, must tile [min arrival, end).
  struct Interval {
    Millis start, end;
  };
  std::vector<Interval> timeline;
  for (const auto& s : trace.slices) timeline.push_back({s.start, s.end});
  for (const auto& g : trace.idles) {
    if (g.end <= g.start) fail("idle gap [" + std::to_string(g.start) + "," + std::to_string(g.end) + ") is empty");
    timeline.push_back({g.start, g.end});
  }
  std::stable_sort(timeline.begin(), timeline.end(), [](const Interval& a, const Interval& b) { return a.start < b.start; });
  Millis cursor = workload.min_arrival();
  for (const auto& iv : timeline) {
    if (iv.start < cursor) fail("overlap at " + std::to_string(iv.start));
    if (iv.start > cursor) fail("gap [" + std::to_string(cursor) + "," + std::to_string(iv.start) + ") not covered");
    cursor = std::max(cursor, iv.end);
  }
  for (std::size_t s = 1; s < trace.slices.size(); ++s) {
    if (trace.slices[s].start < trace.slices[s - 1].end) fail("slices out of chronological order at " + std::to_string(s));
  }

  for (const auto& g : trace.idles) {
    const auto procs = workload.processes();
    if (std::none_of(procs.begin(), procs.end(), [&](const ProcessSpec& p) { return p.arrival == g.end; })) {
      fail("idle gap [" + std::to_string(g.start) + "," + std::to_string(g.end) + ") does not end at an arrival");
    }
    for (std::size_t i = 0; i < workload.size(); ++i) {
      if (workload[i].arrival < g.end && completion[i] > g.start) {
        fail("idle gap [" + std::to_string(g.start) + "," + std::to_string(g.end) + ") while " + workload[i].pid +
             " had work");
      }
    }
  }

  if (trace.quantum_log.empty()) fail("empty quantum log");
  for (const auto& q : trace.quantum_log) {
    if (q.quantum < 1) fail("quantum log entry for cycle " + std::to_string(q.cycle) + " < 1");
  }
  return result;
}

}  // namespace rrsim
