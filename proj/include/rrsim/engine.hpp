#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rrsim/model.hpp"

namespace rrsim {

struct ReadyEntry {
  std::string pid;
  Millis remaining = 0;
  Millis arrival = 0;
  std::size_t submission_index = 0;
  bool dispatched_before = false;
};

/// Ready queue as seen at the start of a cycle, in current queue order.
struct ReadySnapshot {
  std::vector<ReadyEntry> entries;
  Millis now = 0;
  int cycle_index = 1;
  bool contains_new_arrivals = false;
};

struct CyclePlan {
  std::vector<std::string> order;
  Millis quantum = 1;
};

enum class ArrivalMode {
  /// Arrivals during a cycle wait for the cycle to finish.
  CycleBoundary,
  /// Arrivals are checked after every slice; any arrival abandons the rest of
  /// the cycle and a new one is planned over all admitted processes.
  SliceBoundaryRestart,
};

enum class QueueDiscipline {
  /// Classic round robin: one FIFO, preempted process rejoins at the tail.
  FifoTailRejoin,
  /// Plan a whole pass over the ready queue, then dispatch each process once.
  CyclePass,
};

struct PolicyBehavior {
  PolicyDescriptor descriptor;
  std::function<CyclePlan(const ReadySnapshot&)> plan;
  ArrivalMode arrival_mode = ArrivalMode::CycleBoundary;
  QueueDiscipline discipline = QueueDiscipline::CyclePass;
};

class PolicyPlanInvalid : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Runs the workload to completion under the policy. Context switches cost
/// zero time. Deterministic: identical inputs give identical traces.
ExecutionTrace simulate(const Workload& workload, const PolicyBehavior& policy);

struct ReplayResult {
  std::vector<std::string> violations;

  bool ok() const noexcept { return violations.empty(); }
  explicit operator bool() const noexcept { return ok(); }
};

/// Checks a trace against the workload: conservation, slice bounds, arrival
/// precedence, non-overlap, contiguity and work conservation.
ReplayResult replay_check(const ExecutionTrace& trace, const Workload& workload);

}  // namespace rrsim
