#pragma once

// Trace and metric invariants shared by the property tests and the
// acceptance suite. Each check returns human-readable violations.

#include <string>
#include <vector>

#include "rrsim/model.hpp"

namespace rrsim::testing {

/// Conservation, contiguity, arrival respect, work conservation, determinism,
/// quantum log sanity, IRRVQ progress, switch counting and metric identities,
/// for every policy.
std::vector<std::string> check_invariants(const Workload& workload);

/// Completion = arrival + burst for every policy (workload must hold one process).
std::vector<std::string> check_single_process(const Workload& workload);

/// RR with a quantum >= every burst dispatches each process once, in
/// submission order (zero-arrival workloads only).
std::vector<std::string> check_fcfs_reduction(const Workload& workload);

/// Engine completions equal the unit-step reference for every policy.
std::vector<std::string> check_against_reference(const Workload& workload);

}  // namespace rrsim::testing
