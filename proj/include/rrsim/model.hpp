#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rrsim {

/// All times are integer milliseconds.
using Millis = std::int64_t;

struct ProcessSpec {
  std::string pid;
  Millis arrival = 0;
  Millis burst = 0;

  friend bool operator==(const ProcessSpec&, const ProcessSpec&) = default;
};

enum class WorkloadErrorKind { DuplicatePid, NonPositiveBurst, NegativeArrival, EmptyWorkload, EmptyPid };

class WorkloadError : public std::runtime_error {
 public:
  WorkloadError(WorkloadErrorKind kind, std::string pid, std::size_t index);

  WorkloadErrorKind kind() const noexcept { return kind_; }
  /// Offending pid; empty for EmptyWorkload.
  const std::string& pid() const noexcept { return pid_; }
  /// Zero-based position of the offending record.
  std::size_t index() const noexcept { return index_; }

 private:
  WorkloadErrorKind kind_;
  std::string pid_;
  std::size_t index_;
};

std::string_view to_string(WorkloadErrorKind kind);

/// Validated, immutable set of processes in submission order. Submission
/// order is the tie-breaker for every arrival and ordering rule, so it is
/// never re-sorted.
class Workload {
 public:
  std::span<const ProcessSpec> processes() const noexcept { return processes_; }
  const ProcessSpec& operator[](std::size_t i) const { return processes_[i]; }
  std::size_t size() const noexcept { return processes_.size(); }
  const std::string& label() const noexcept { return label_; }

  std::optional<std::size_t> index_of(std::string_view pid) const;
  Millis min_arrival() const;
  Millis total_burst() const;

  friend bool operator==(const Workload&, const Workload&) = default;

 private:
  friend Workload validate_workload(std::vector<ProcessSpec>, std::string);
  Workload(std::vector<ProcessSpec> processes, std::string label)
      : processes_(std::move(processes)), label_(std::move(label)) {}

  std::vector<ProcessSpec> processes_;
  std::string label_;
};

/// Throws WorkloadError naming the first offending record.
Workload validate_workload(std::vector<ProcessSpec> records, std::string label = {});

enum class PolicyName { RR, DQRRR, IRRVQ, SARR, RP5, MRR, DABRR };

inline constexpr PolicyName kAllPolicies[] = {PolicyName::RR,  PolicyName::DQRRR, PolicyName::IRRVQ,
                                              PolicyName::SARR, PolicyName::RP5,  PolicyName::MRR,
                                              PolicyName::DABRR};

/// Upper-case display name: "RR", "DQRRR", ..., "RP5".
std::string_view display_name(PolicyName name);

struct PolicyDescriptor {
  PolicyName name = PolicyName::RR;
  std::map<std::string, std::int64_t> parameters;

  /// CLI form, e.g. "rr:q=25", "dabrr", "mrr:floor=25".
  std::string to_spec() const;

  friend bool operator==(const PolicyDescriptor&, const PolicyDescriptor&) = default;
};

enum class Termination { Completed, QuantumExpired };

struct Slice {
  std::string pid;
  Millis start = 0;
  Millis end = 0;
  int cycle = 1;
  Millis quantum = 1;
  Termination termination = Termination::QuantumExpired;

  Millis duration() const noexcept { return end - start; }
  friend bool operator==(const Slice&, const Slice&) = default;
};

struct IdleGap {
  Millis start = 0;
  Millis end = 0;
  friend bool operator==(const IdleGap&, const IdleGap&) = default;
};

struct QuantumRecord {
  int cycle = 1;
  Millis quantum = 1;
  friend bool operator==(const QuantumRecord&, const QuantumRecord&) = default;
};

struct ExecutionTrace {
  PolicyDescriptor algorithm;
  std::vector<Slice> slices;
  std::vector<IdleGap> idles;
  std::vector<QuantumRecord> quantum_log;

  std::vector<Millis> quanta() const;
  friend bool operator==(const ExecutionTrace&, const ExecutionTrace&) = default;
};

}  // namespace rrsim
