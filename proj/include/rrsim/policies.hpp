#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rrsim/engine.hpp"

namespace rrsim {

// Quantum formulas. All take remaining bursts (order-insensitive), use floor
// division and never return less than 1.

/// floor(sum / count).
Millis mean_quantum(std::span<const Millis> remaining);

/// Middle element, or floor of the two middle elements' mean for even counts.
Millis median_quantum(std::span<const Millis> remaining);

/// max - min for two or more values, the sole value otherwise; never below
/// `floor`.
Millis range_quantum(std::span<const Millis> remaining, Millis floor);

/// Entries sorted ascending by (remaining, arrival, submission index).
std::vector<std::string> ascending_order(std::span<const ReadyEntry> entries);

/// Lowest, highest, second lowest, second highest, ... over the ascending
/// order; the middle element comes last.
std::vector<std::string> alternating_min_max_order(std::span<const ReadyEntry> entries);

PolicyBehavior make_round_robin(Millis quantum);
PolicyBehavior make_dabrr();
PolicyBehavior make_sarr();
PolicyBehavior make_dqrrr();
PolicyBehavior make_irrvq();
PolicyBehavior make_rp5(Millis base);
PolicyBehavior make_mrr(Millis floor);

inline constexpr Millis kPaperStaticQuantum = 25;

/// Builds a policy from its descriptor; missing knobs default to 25.
PolicyBehavior make_policy(const PolicyDescriptor& descriptor);

/// The descriptor each policy is run with in the paper's experiments.
PolicyDescriptor paper_descriptor(PolicyName name);

class PolicySpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses "rr:q=25", "dabrr", "rp5:base=25", "mrr:floor=25", ... Unknown
/// names or parameters throw PolicySpecError.
PolicyDescriptor parse_policy_spec(std::string_view spec);

}  // namespace rrsim
