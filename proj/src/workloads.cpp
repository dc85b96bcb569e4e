#include "rrsim/workloads.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <stdexcept>

#include "rrsim/policies.hpp"

namespace rrsim {

namespace {

/// Exact decimal literal, e.g. "261.4" -> 1307/5.
Rational dec(std::string_view text) {
  const auto dot = text.find('.');
  std::int64_t whole = 0;
  std::from_chars(text.data(), text.data() + std::min(dot, text.size()), whole);
  Rational value(whole);
  if (dot != std::string_view::npos) {
    std::int64_t scale = 1;
    std::int64_t frac = 0;
    for (char c : text.substr(dot + 1)) {
      frac = frac * 10 + (c - '0');
      scale *= 10;
    }
    value += Rational(frac, scale);
  }
  return value;
}

struct CellRow {
  PolicyName algorithm;
  std::vector<Millis> quanta;
  std::int64_t cs;
  const char* waiting;
  const char* turnaround;
};

using P = PolicyName;

// Per-case comparison tables, one block per case.
const std::vector<CellRow>& table_for(CaseId id) {
  static const std::vector<CellRow> case_i = {
      {P::RR, {25}, 16, "192", "261.4"},
      {P::DQRRR, {60, 36, 6}, 7, "162.2", "231.6"},
      {P::IRRVQ, {40, 15, 5, 30, 12}, 14, "165", "234.4"},
      {P::SARR, {60, 36, 6}, 7, "119", "188.4"},
      {P::RP5, {25, 50, 100}, 11, "167", "236.4"},
      {P::MRR, {62, 25, 25}, 8, "124.4", "193.8"},
      {P::DABRR, {69, 27, 6}, 7, "120.8", "190.2"},
  };
  static const std::vector<CellRow> case_ii = {
      {P::RR, {25}, 15, "209.4", "274"},
      {P::DQRRR, {55, 40, 10}, 7, "144.8", "209.4"},
      {P::IRRVQ, {35, 8, 12, 30, 20}, 14, "142", "206.6"},
      {P::SARR, {55, 40, 10}, 7, "185.8", "250.4"},
      {P::RP5, {25, 50, 100}, 11, "224.8", "289.4"},
      {P::MRR, {70, 25, 25}, 7, "106.8", "171.4"},
      {P::DABRR, {64, 31, 10}, 7, "105.6", "170.2"},
  };
  static const std::vector<CellRow> case_iii = {
      {P::RR, {25}, 17, "245.4", "327"},
      {P::DQRRR, {75, 37, 8}, 7, "192.8", "274.4"},
      {P::IRRVQ, {48, 12, 15, 30, 15}, 14, "193.2", "274.8"},
      {P::SARR, {120}, 4, "177.6", "259.2"},
      {P::RP5, {25, 50, 100}, 11, "237.8", "319.4"},
      {P::MRR, {72, 45, 25}, 8, "168.6", "250.2"},
      {P::DABRR, {81, 31, 8}, 7, "141.6", "223.2"},
  };
  static const std::vector<CellRow> case_iv = {
      {P::RR, {25}, 15, "144.4", "205.6"},
      {P::DQRRR, {27, 68, 28, 14}, 7, "107.2", "168.4"},
      {P::IRRVQ, {27, 32, 23, 27, 28}, 10, "98.2", "159.4"},
      {P::SARR, {27, 68, 28, 14}, 7, "88", "149.2"},
      {P::RP5, {25, 50, 100}, 8, "104.4", "165.6"},
      {P::MRR, {27, 78, 28, 25}, 7, "90", "151.2"},
      {P::DABRR, {27, 69, 27, 14}, 7, "88.2", "149.4"},
  };
  static const std::vector<CellRow> case_v = {
      {P::RR, {25}, 13, "191", "250.8"},
      {P::DQRRR, {95, 51, 16, 8}, 7, "138.4", "198.2"},
      {P::IRRVQ, {95, 26, 17, 17, 15}, 10, "133.8", "193.6"},
      {P::SARR, {95, 51, 16, 8}, 7, "172.4", "232.2"},
      {P::RP5, {25, 50, 100}, 8, "197", "256.8"},
      {P::MRR, {95, 49, 25, 25}, 7, "124.6", "184.4"},
      {P::DABRR, {95, 51, 16, 8}, 7, "125", "184.8"},
  };
  static const std::vector<CellRow> case_vi = {
      {P::RR, {25}, 13, "173.2", "232.8"},
      {P::DQRRR, {45, 62, 18, 10}, 7, "113.6", "173.2"},
      {P::IRRVQ, {45, 38, 17, 15, 20}, 10, "111.4", "171"},
      {P::SARR, {45, 54, 16, 20}, 8, "148.6", "208.2"},
      {P::RP5, {25, 50, 100}, 8, "149.2", "208.8"},
      {P::MRR, {45, 52, 35, 25}, 8, "116.4", "176"},
      {P::DABRR, {45, 63, 17, 10}, 7, "97.8", "157.4"},
  };
  switch (id) {
    case CaseId::I: return case_i;
    case CaseId::II: return case_ii;
    case CaseId::III: return case_iii;
    case CaseId::IV: return case_iv;
    case CaseId::V: return case_v;
    case CaseId::VI: return case_vi;
    case CaseId::Illustration: break;
  }
  throw std::out_of_range("no comparison table for the illustration workload");
}

// Median-rule values for the SARR cells that contradict the median rule.
// Frozen from the unit-step reference executor (tests/support).
Erratum erratum_e1() {
  return {"E1",
          "SARR case III: the table reports a single quantum of 120 with 4 context switches, which no stated "
          "rule produces; the median rule gives 75, 37, 8.",
          {{75, 37, 8}, 7, dec("217.8"), dec("299.4")},
          {363, 135, 408, 258, 333}};
}

Erratum erratum_e2() {
  return {"E2",
          "SARR case VI: the table reports quanta 45, 54, 16, 20 with 8 context switches; the median of the "
          "second cycle's bursts (38, 55, 70, 90) is 62, giving 45, 62, 18, 10.",
          {{45, 62, 18, 10}, 7, dec("150.8"), dec("210.4")},
          {45, 298, 288, 207, 262}};
}

struct AggregateText {
  PolicyName algorithm;
  std::array<std::int64_t, 4> cs;
  std::array<const char*, 4> waiting;
  std::array<const char*, 4> turnaround;
};

const std::vector<AggregateText>& aggregate_table(CaseGroup group) {
  static const std::vector<AggregateText> zero = {
      {P::RR, {16, 15, 17, 48}, {"192.00", "209.40", "245.40", "646.80"}, {"261.40", "274.00", "327.00", "862.40"}},
      {P::DQRRR, {7, 7, 7, 21}, {"162.20", "144.80", "192.80", "499.80"}, {"231.60", "209.40", "274.40", "715.40"}},
      {P::IRRVQ, {14, 14, 14, 42}, {"165.00", "142.00", "193.20", "500.20"}, {"234.40", "206.60", "274.80", "715.80"}},
      {P::SARR, {7, 7, 4, 18}, {"119.00", "185.80", "177.60", "482.40"}, {"188.40", "250.40", "259.20", "698.00"}},
      {P::RP5, {11, 11, 11, 33}, {"167.00", "224.80", "237.80", "629.60"}, {"236.40", "289.40", "319.40", "845.20"}},
      {P::MRR, {8, 7, 8, 23}, {"124.40", "106.80", "168.60", "399.80"}, {"193.80", "171.40", "250.20", "615.40"}},
      {P::DABRR, {7, 7, 7, 21}, {"120.80", "105.60", "141.60", "368.00"}, {"190.20", "170.20", "223.20", "583.60"}},
  };
  static const std::vector<AggregateText> staggered = {
      {P::RR, {15, 13, 13, 41}, {"144.40", "191.00", "173.20", "508.60"}, {"205.60", "250.80", "232.80", "689.20"}},
      {P::DQRRR, {7, 7, 7, 21}, {"107.20", "138.40", "113.60", "359.20"}, {"168.40", "198.20", "173.20", "539.80"}},
      {P::IRRVQ, {10, 10, 10, 30}, {"98.20", "133.80", "111.40", "343.40"}, {"159.40", "193.60", "171.00", "524.00"}},
      {P::SARR, {7, 7, 8, 22}, {"88.00", "172.40", "148.60", "409.00"}, {"149.20", "232.20", "208.20", "589.60"}},
      {P::RP5, {8, 8, 8, 24}, {"104.40", "197.00", "149.20", "450.60"}, {"165.60", "256.80", "208.80", "631.20"}},
      {P::MRR, {7, 7, 8, 22}, {"90.00", "124.60", "116.40", "331.00"}, {"151.20", "184.40", "176.00", "511.60"}},
      {P::DABRR, {7, 7, 7, 21}, {"88.20", "125.00", "97.80", "311.00"}, {"149.40", "184.80", "157.40", "491.60"}},
  };
  return group == CaseGroup::ZeroArrival ? zero : staggered;
}

/// Uniform integer in [lo, hi] from the raw 64-bit engine output, rejecting
/// the biased tail so results do not depend on the standard library.
Millis draw(std::mt19937_64& rng, Millis lo, Millis hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = span == 0 ? 0 : (~std::uint64_t{0} / span) * span;
  std::uint64_t x = rng();
  while (limit != 0 && x >= limit) x = rng();
  return lo + static_cast<Millis>(span == 0 ? x : x % span);
}

}  // namespace

std::string_view case_label(CaseId id) {
  switch (id) {
    case CaseId::I: return "I";
    case CaseId::II: return "II";
    case CaseId::III: return "III";
    case CaseId::IV: return "IV";
    case CaseId::V: return "V";
    case CaseId::VI: return "VI";
    case CaseId::Illustration: return "ILL";
  }
  return "?";
}

std::optional<CaseId> parse_case_id(std::string_view text) {
  for (CaseId id : {CaseId::I, CaseId::II, CaseId::III, CaseId::IV, CaseId::V, CaseId::VI, CaseId::Illustration}) {
    if (case_label(id) == text) return id;
  }
  return std::nullopt;
}

Workload paper_case(CaseId id) {
  auto make = [](std::vector<std::pair<Millis, Millis>> rows, std::string label) {
    std::vector<ProcessSpec> specs;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      specs.push_back({"P" + std::to_string(i + 1), rows[i].first, rows[i].second});
    }
    return validate_workload(std::move(specs), std::move(label));
  };
  switch (id) {
    case CaseId::I: return make({{0, 40}, {0, 55}, {0, 60}, {0, 90}, {0, 102}}, "case I: zero arrival, ascending bursts");
    case CaseId::II: return make({{0, 105}, {0, 85}, {0, 55}, {0, 43}, {0, 35}}, "case II: zero arrival, descending bursts");
    case CaseId::III: return make({{0, 105}, {0, 60}, {0, 120}, {0, 48}, {0, 75}}, "case III: zero arrival, random bursts");
    case CaseId::IV: return make({{0, 27}, {3, 32}, {5, 55}, {7, 82}, {9, 110}}, "case IV: staggered arrival, ascending bursts");
    case CaseId::V: return make({{0, 95}, {2, 75}, {4, 60}, {8, 43}, {16, 26}}, "case V: staggered arrival, descending bursts");
    case CaseId::VI: return make({{0, 45}, {5, 90}, {8, 70}, {15, 38}, {20, 55}}, "case VI: staggered arrival, random bursts");
    case CaseId::Illustration: return make({{0, 15}, {0, 32}, {0, 102}, {0, 48}, {0, 29}}, "ILL: DABRR walkthrough");
  }
  throw std::out_of_range("unknown case");
}

ExpectedRow expected_row(CaseId id, PolicyName algorithm) {
  const auto& table = table_for(id);
  const auto& cell = *std::find_if(table.begin(), table.end(), [&](const CellRow& r) { return r.algorithm == algorithm; });
  ExpectedRow row{id, paper_descriptor(algorithm), {cell.quanta, cell.cs, dec(cell.waiting), dec(cell.turnaround)}, {}};
  if (algorithm == PolicyName::SARR && id == CaseId::III) row.erratum = erratum_e1();
  if (algorithm == PolicyName::SARR && id == CaseId::VI) row.erratum = erratum_e2();
  return row;
}

std::span<const CaseId> cases_in(CaseGroup group) {
  return group == CaseGroup::ZeroArrival ? std::span<const CaseId>(kZeroArrivalCases)
                                         : std::span<const CaseId>(kStaggeredArrivalCases);
}

std::string_view group_label(CaseGroup group) { return group == CaseGroup::ZeroArrival ? "zero" : "nonzero"; }

ExpectedAggregateRow expected_aggregate(CaseGroup group, PolicyName algorithm) {
  const auto& table = aggregate_table(group);
  const auto& t = *std::find_if(table.begin(), table.end(), [&](const AggregateText& r) { return r.algorithm == algorithm; });
  ExpectedAggregateRow row;
  row.algorithm = algorithm;
  for (std::size_t i = 0; i < 3; ++i) {
    row.context_switches[i] = t.cs[i];
    row.waiting[i] = dec(t.waiting[i]);
    row.turnaround[i] = dec(t.turnaround[i]);
  }
  row.context_switch_total = t.cs[3];
  row.waiting_total = dec(t.waiting[3]);
  row.turnaround_total = dec(t.turnaround[3]);
  return row;
}

ExpectedGrandRow expected_grand(PolicyName algorithm) {
  struct Text {
    PolicyName algorithm;
    const char *waiting, *waiting_gain, *turnaround, *turnaround_gain;
  };
  static const Text rows[] = {
      {P::RR, "1155.40", "0.00", "1551.60", "0.00"},       {P::DQRRR, "859.00", "25.65", "1255.20", "19.10"},
      {P::IRRVQ, "843.60", "26.99", "1239.80", "20.10"},   {P::SARR, "891.40", "22.85", "1287.60", "20.10"},
      {P::RP5, "1080.20", "6.51", "1476.40", "4.85"},      {P::MRR, "730.80", "36.75", "1127.00", "27.37"},
      {P::DABRR, "679.00", "41.23", "1075.20", "30.70"},
  };
  const auto& t = *std::find_if(std::begin(rows), std::end(rows), [&](const Text& r) { return r.algorithm == algorithm; });
  return {algorithm, dec(t.waiting), dec(t.waiting_gain), dec(t.turnaround), dec(t.turnaround_gain)};
}

std::vector<std::string> errata_affecting(PolicyName algorithm, std::span<const CaseId> cases) {
  std::vector<std::string> ids;
  for (CaseId id : cases) {
    if (id == CaseId::Illustration) continue;
    if (auto row = expected_row(id, algorithm); row.erratum) ids.push_back(row.erratum->id);
  }
  return ids;
}

IllustrationExpectation illustration_expectation() {
  return {{45, 30, 27}, {15, 76, 226, 169, 44}, {0, 44, 124, 121, 15}, Rational(106), dec("60.8")};
}

Workload generate_workload(const GeneratorSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("generator: n must be >= 1");
  if (spec.burst_min < 1 || spec.burst_max < spec.burst_min) {
    throw std::invalid_argument("generator: need 1 <= burst_min <= burst_max");
  }
  if (spec.max_gap && *spec.max_gap < 0) throw std::invalid_argument("generator: max_gap must be >= 0");

  std::mt19937_64 rng(spec.seed);
  std::vector<Millis> bursts(spec.n);
  for (auto& b : bursts) b = draw(rng, spec.burst_min, spec.burst_max);
  if (spec.order == BurstOrder::Ascending) std::sort(bursts.begin(), bursts.end());
  if (spec.order == BurstOrder::Descending) std::sort(bursts.begin(), bursts.end(), std::greater<>());

  std::vector<ProcessSpec> specs;
  specs.reserve(spec.n);
  Millis arrival = 0;
  for (std::size_t i = 0; i < spec.n; ++i) {
    if (spec.max_gap) arrival += draw(rng, 0, *spec.max_gap);
    specs.push_back({"P" + std::to_string(i + 1), arrival, bursts[i]});
  }
  return validate_workload(std::move(specs), "generated seed=" + std::to_string(spec.seed));
}

}  // namespace rrsim
