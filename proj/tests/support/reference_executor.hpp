#pragma once

// Unit-step reference scheduler used as a differential oracle. It advances
// the clock one millisecond at a time and re-derives every queue, ordering
// and quantum rule on its own; it shares nothing with the engine or the
// policy implementations beyond the workload types.

#include <vector>

#include "rrsim/model.hpp"

namespace rrsim::testing {

struct ReferenceResult {
  std::vector<Millis> completion;  // submission order
  std::vector<Millis> quanta;
  std::size_t slices = 0;
};

/// `knob` is the RR quantum, RP-5 base or MRR floor; ignored otherwise.
ReferenceResult reference_run(const Workload& workload, PolicyName policy, Millis knob = 25);

}  // namespace rrsim::testing
