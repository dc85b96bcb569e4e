#include "rrsim/policies.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

namespace rrsim {

namespace {

std::vector<Millis> remaining_of(const ReadySnapshot& snapshot) {
  std::vector<Millis> out;
  out.reserve(snapshot.entries.size());
  for (const auto& e : snapshot.entries) out.push_back(e.remaining);
  return out;
}

std::vector<std::string> queue_order(const ReadySnapshot& snapshot) {
  std::vector<std::string> out;
  out.reserve(snapshot.entries.size());
  for (const auto& e : snapshot.entries) out.push_back(e.pid);
  return out;
}

std::vector<ReadyEntry> sorted_ascending(std::span<const ReadyEntry> entries) {
  std::vector<ReadyEntry> sorted(entries.begin(), entries.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const ReadyEntry& a, const ReadyEntry& b) {
    return std::tie(a.remaining, a.arrival, a.submission_index) < std::tie(b.remaining, b.arrival, b.submission_index);
  });
  return sorted;
}

Millis at_least_one(Millis q) { return std::max<Millis>(q, 1); }

Millis param_or(const PolicyDescriptor& d, const std::string& key, Millis fallback) {
  auto it = d.parameters.find(key);
  return it == d.parameters.end() ? fallback : it->second;
}

PolicyDescriptor descriptor(PolicyName name, std::string key = {}, Millis value = 0) {
  PolicyDescriptor d{name, {}};
  if (!key.empty()) d.parameters.emplace(std::move(key), value);
  return d;
}

void require_positive(std::string_view what, Millis value) {
  if (value < 1) throw PolicySpecError(std::string(what) + " must be >= 1");
}

}  // namespace

Millis mean_quantum(std::span<const Millis> remaining) {
  if (remaining.empty()) throw std::invalid_argument("mean_quantum: empty input");
  const Millis total = std::accumulate(remaining.begin(), remaining.end(), Millis{0});
  return at_least_one(total / static_cast<Millis>(remaining.size()));
}

Millis median_quantum(std::span<const Millis> remaining) {
  if (remaining.empty()) throw std::invalid_argument("median_quantum: empty input");
  std::vector<Millis> sorted(remaining.begin(), remaining.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t mid = sorted.size() / 2;
  if (sorted.size() % 2 == 1) return at_least_one(sorted[mid]);
  return at_least_one((sorted[mid - 1] + sorted[mid]) / 2);
}

Millis range_quantum(std::span<const Millis> remaining, Millis floor) {
  if (remaining.empty()) throw std::invalid_argument("range_quantum: empty input");
  const auto [lo, hi] = std::minmax_element(remaining.begin(), remaining.end());
  const Millis raw = remaining.size() == 1 ? *lo : *hi - *lo;
  return at_least_one(std::max(raw, floor));
}

std::vector<std::string> ascending_order(std::span<const ReadyEntry> entries) {
  std::vector<std::string> out;
  for (auto& e : sorted_ascending(entries)) out.push_back(std::move(e.pid));
  return out;
}

std::vector<std::string> alternating_min_max_order(std::span<const ReadyEntry> entries) {
  const auto sorted = sorted_ascending(entries);
  std::vector<std::string> out;
  out.reserve(sorted.size());
  std::size_t lo = 0;
  std::size_t hi = sorted.size();
  bool take_low = true;
  while (lo < hi) {
    out.push_back(take_low ? sorted[lo++].pid : sorted[--hi].pid);
    take_low = !take_low;
  }
  return out;
}

PolicyBehavior make_round_robin(Millis quantum) {
  require_positive("rr quantum", quantum);
  return {descriptor(PolicyName::RR, "q", quantum),
          [quantum](const ReadySnapshot& s) { return CyclePlan{queue_order(s), quantum}; },
          ArrivalMode::SliceBoundaryRestart, QueueDiscipline::FifoTailRejoin};
}

PolicyBehavior make_dabrr() {
  return {descriptor(PolicyName::DABRR),
          [](const ReadySnapshot& s) {
            return CyclePlan{ascending_order(s.entries), mean_quantum(remaining_of(s))};
          },
          ArrivalMode::SliceBoundaryRestart, QueueDiscipline::CyclePass};
}

PolicyBehavior make_sarr() {
  return {descriptor(PolicyName::SARR),
          [](const ReadySnapshot& s) { return CyclePlan{queue_order(s), median_quantum(remaining_of(s))}; },
          ArrivalMode::CycleBoundary, QueueDiscipline::CyclePass};
}

PolicyBehavior make_dqrrr() {
  return {descriptor(PolicyName::DQRRR),
          [](const ReadySnapshot& s) {
            auto order = s.contains_new_arrivals ? alternating_min_max_order(s.entries) : queue_order(s);
            return CyclePlan{std::move(order), median_quantum(remaining_of(s))};
          },
          ArrivalMode::CycleBoundary, QueueDiscipline::CyclePass};
}

PolicyBehavior make_irrvq() {
  return {descriptor(PolicyName::IRRVQ),
          [](const ReadySnapshot& s) {
            const auto rem = remaining_of(s);
            return CyclePlan{ascending_order(s.entries), at_least_one(*std::min_element(rem.begin(), rem.end()))};
          },
          ArrivalMode::CycleBoundary, QueueDiscipline::CyclePass};
}

PolicyBehavior make_rp5(Millis base) {
  require_positive("rp5 base", base);
  return {descriptor(PolicyName::RP5, "base", base),
          [base](const ReadySnapshot& s) {
            // Saturate instead of overflowing on very long runs.
            Millis q = base;
            for (int k = 1; k < s.cycle_index && q < (Millis{1} << 52); ++k) q *= 2;
            return CyclePlan{queue_order(s), q};
          },
          ArrivalMode::CycleBoundary, QueueDiscipline::CyclePass};
}

PolicyBehavior make_mrr(Millis floor) {
  require_positive("mrr floor", floor);
  return {descriptor(PolicyName::MRR, "floor", floor),
          [floor](const ReadySnapshot& s) {
            return CyclePlan{ascending_order(s.entries), range_quantum(remaining_of(s), floor)};
          },
          ArrivalMode::CycleBoundary, QueueDiscipline::CyclePass};
}

PolicyBehavior make_policy(const PolicyDescriptor& d) {
  switch (d.name) {
    case PolicyName::RR: return make_round_robin(param_or(d, "q", kPaperStaticQuantum));
    case PolicyName::DQRRR: return make_dqrrr();
    case PolicyName::IRRVQ: return make_irrvq();
    case PolicyName::SARR: return make_sarr();
    case PolicyName::RP5: return make_rp5(param_or(d, "base", kPaperStaticQuantum));
    case PolicyName::MRR: return make_mrr(param_or(d, "floor", kPaperStaticQuantum));
    case PolicyName::DABRR: return make_dabrr();
  }
  throw PolicySpecError("unknown policy");
}

PolicyDescriptor paper_descriptor(PolicyName name) { return make_policy(PolicyDescriptor{name, {}}).descriptor; }

PolicyDescriptor parse_policy_spec(std::string_view spec) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto colon = spec.find(':', start);
    parts.push_back(spec.substr(start, colon == std::string_view::npos ? std::string_view::npos : colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }

  std::string name(parts.front());
  std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) { return std::tolower(c); });
  PolicyDescriptor d;
  std::string knob;
  if (name == "rr") {
    d.name = PolicyName::RR, knob = "q";
  } else if (name == "dqrrr") {
    d.name = PolicyName::DQRRR;
  } else if (name == "irrvq") {
    d.name = PolicyName::IRRVQ;
  } else if (name == "sarr") {
    d.name = PolicyName::SARR;
  } else if (name == "rp5" || name == "rp-5") {
    d.name = PolicyName::RP5, knob = "base";
  } else if (name == "mrr") {
    d.name = PolicyName::MRR, knob = "floor";
  } else if (name == "dabrr") {
    d.name = PolicyName::DABRR;
  } else {
    throw PolicySpecError("unknown policy '" + name + "'");
  }

  for (std::size_t i = 1; i < parts.size(); ++i) {
    const auto eq = parts[i].find('=');
    if (eq == std::string_view::npos) throw PolicySpecError("expected key=value in '" + std::string(parts[i]) + "'");
    const std::string key(parts[i].substr(0, eq));
    const auto text = parts[i].substr(eq + 1);
    Millis value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
      throw PolicySpecError("parameter '" + key + "' is not an integer");
    }
    if (key != knob) throw PolicySpecError(name + " has no parameter '" + key + "'");
    require_positive(key, value);
    d.parameters[key] = value;
  }
  // Fill in the default knob so descriptors compare equal regardless of spelling.
  return make_policy(d).descriptor;
}

}  // namespace rrsim
