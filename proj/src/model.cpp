#include "rrsim/model.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <unordered_set>

namespace rrsim {

namespace {

std::string describe(WorkloadErrorKind kind, const std::string& pid, std::size_t index) {
  std::string msg{to_string(kind)};
  if (kind == WorkloadErrorKind::EmptyWorkload) return msg + ": workload has no processes";
  msg += "(" + pid + ") at record " + std::to_string(index + 1);
  return msg;
}

}  // namespace

WorkloadError::WorkloadError(WorkloadErrorKind kind, std::string pid, std::size_t index)
    : std::runtime_error(describe(kind, pid, index)), kind_(kind), pid_(std::move(pid)), index_(index) {}

std::string_view to_string(WorkloadErrorKind kind) {
  switch (kind) {
    case WorkloadErrorKind::DuplicatePid: return "DuplicatePid";
    case WorkloadErrorKind::NonPositiveBurst: return "NonPositiveBurst";
    case WorkloadErrorKind::NegativeArrival: return "NegativeArrival";
    case WorkloadErrorKind::EmptyWorkload: return "EmptyWorkload";
    case WorkloadErrorKind::EmptyPid: return "EmptyPid";
  }
  return "WorkloadError";
}

std::optional<std::size_t> Workload::index_of(std::string_view pid) const {
  auto it = std::find_if(processes_.begin(), processes_.end(), [&](const ProcessSpec& p) { return p.pid == pid; });
  if (it == processes_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - processes_.begin());
}

Millis Workload::min_arrival() const {
  return std::min_element(processes_.begin(), processes_.end(),
                          [](const ProcessSpec& a, const ProcessSpec& b) { return a.arrival < b.arrival; })
      ->arrival;
}

Millis Workload::total_burst() const {
  return std::accumulate(processes_.begin(), processes_.end(), Millis{0},
                         [](Millis acc, const ProcessSpec& p) { return acc + p.burst; });
}

Workload validate_workload(std::vector<ProcessSpec> records, std::string label) {
  if (records.empty()) throw WorkloadError(WorkloadErrorKind::EmptyWorkload, {}, 0);
  std::unordered_set<std::string_view> seen;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& p = records[i];
    if (p.pid.empty()) throw WorkloadError(WorkloadErrorKind::EmptyPid, p.pid, i);
    if (!seen.insert(p.pid).second) throw WorkloadError(WorkloadErrorKind::DuplicatePid, p.pid, i);
    if (p.burst < 1) throw WorkloadError(WorkloadErrorKind::NonPositiveBurst, p.pid, i);
    if (p.arrival < 0) throw WorkloadError(WorkloadErrorKind::NegativeArrival, p.pid, i);
  }
  return Workload(std::move(records), std::move(label));
}

std::string_view display_name(PolicyName name) {
  switch (name) {
    case PolicyName::RR: return "RR";
    case PolicyName::DQRRR: return "DQRRR";
    case PolicyName::IRRVQ: return "IRRVQ";
    case PolicyName::SARR: return "SARR";
    case PolicyName::RP5: return "RP5";
    case PolicyName::MRR: return "MRR";
    case PolicyName::DABRR: return "DABRR";
  }
  return "?";
}

std::string PolicyDescriptor::to_spec() const {
  std::string out{display_name(name)};
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  for (const auto& [key, value] : parameters) out += ":" + key + "=" + std::to_string(value);
  return out;
}

std::vector<Millis> ExecutionTrace::quanta() const {
  std::vector<Millis> out;
  out.reserve(quantum_log.size());
  for (const auto& q : quantum_log) out.push_back(q.quantum);
  return out;
}

}  // namespace rrsim
