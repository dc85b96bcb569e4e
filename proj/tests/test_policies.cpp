#include <doctest.h>

#include <algorithm>
#include <random>

#include "rrsim/policies.hpp"

using namespace rrsim;

namespace {

std::vector<ReadyEntry> entries(std::vector<std::pair<std::string, Millis>> rows) {
  std::vector<ReadyEntry> out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    // Submission index follows the pid number so ties resolve as in the fixtures.
    const auto idx = static_cast<std::size_t>(std::stoi(rows[i].first.substr(1)) - 1);
    out.push_back({rows[i].first, rows[i].second, 0, idx, false});
  }
  return out;
}

std::vector<std::string> pids(std::initializer_list<const char*> names) { return {names.begin(), names.end()}; }

std::vector<std::string> expected_order_fifo(const ReadySnapshot& s) {
  std::vector<std::string> out;
  for (const auto& e : s.entries) out.push_back(e.pid);
  return out;
}

ReadySnapshot snapshot(std::vector<std::pair<std::string, Millis>> rows, bool fresh, int cycle = 1) {
  ReadySnapshot s;
  s.entries = entries(std::move(rows));
  for (auto& e : s.entries) e.dispatched_before = !fresh;
  s.contains_new_arrivals = fresh;
  s.cycle_index = cycle;
  return s;
}

}  // namespace

TEST_CASE("mean quantum floors the average") {
  CHECK(mean_quantum(std::vector<Millis>{40, 55, 60, 90, 102}) == 69);
  CHECK(mean_quantum(std::vector<Millis>{42}) == 42);
  CHECK(mean_quantum(std::vector<Millis>{32, 55, 82, 110}) == 69);
  CHECK_THROWS_AS(mean_quantum(std::vector<Millis>{}), std::invalid_argument);
}

TEST_CASE("median quantum") {
  CHECK(median_quantum(std::vector<Millis>{75, 60, 43, 26}) == 51);
  CHECK(median_quantum(std::vector<Millis>{24, 9}) == 16);
  CHECK(median_quantum(std::vector<Millis>{7}) == 7);
  CHECK(median_quantum(std::vector<Millis>{105, 60, 120, 48, 75}) == 75);
  CHECK(median_quantum(std::vector<Millis>{1, 1}) == 1);
}

TEST_CASE("range quantum with floor") {
  CHECK(range_quantum(std::vector<Millis>{105, 60, 120, 48, 75}, 25) == 72);
  CHECK(range_quantum(std::vector<Millis>{4}, 25) == 25);
  CHECK(range_quantum(std::vector<Millis>{45}, 25) == 45);
  CHECK(range_quantum(std::vector<Millis>{28, 40}, 25) == 25);
  CHECK(range_quantum(std::vector<Millis>{5, 5}, 1) == 1);
}

TEST_CASE("quantum formulas ignore input order") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Millis> v(1 + rng() % 9);
    for (auto& x : v) x = 1 + static_cast<Millis>(rng() % 300);
    const auto mean = mean_quantum(v), median = median_quantum(v), range = range_quantum(v, 25);
    std::shuffle(v.begin(), v.end(), rng);
    CHECK(mean_quantum(v) == mean);
    CHECK(median_quantum(v) == median);
    CHECK(range_quantum(v, 25) == range);
    CHECK(mean >= 1);
    CHECK(median >= 1);
  }
}

TEST_CASE("alternating min/max arrangement") {
  CHECK(alternating_min_max_order(entries({{"P4", 48}, {"P3", 120}, {"P2", 60}, {"P1", 105}, {"P5", 75}})) ==
        pids({"P4", "P3", "P2", "P1", "P5"}));
  CHECK(alternating_min_max_order(entries({{"P5", 26}, {"P2", 75}, {"P4", 43}, {"P3", 60}})) ==
        pids({"P5", "P2", "P4", "P3"}));
  CHECK(alternating_min_max_order(entries({{"P1", 10}})) == pids({"P1"}));
}

TEST_CASE("alternating order read back at even then reversed odd positions is ascending") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<ReadyEntry> e;
    const std::size_t n = 1 + rng() % 10;
    for (std::size_t i = 0; i < n; ++i) e.push_back({"P" + std::to_string(i + 1), 1 + static_cast<Millis>(rng() % 20), 0, i, false});
    const auto alt = alternating_min_max_order(e);
    std::vector<std::string> rebuilt;
    for (std::size_t k = 0; k < alt.size(); k += 2) rebuilt.push_back(alt[k]);
    std::vector<std::string> odd;
    for (std::size_t k = 1; k < alt.size(); k += 2) odd.push_back(alt[k]);
    rebuilt.insert(rebuilt.end(), odd.rbegin(), odd.rend());
    CHECK(rebuilt == ascending_order(e));
  }
}

TEST_CASE("ascending order breaks ties by arrival then submission index") {
  const std::vector<ReadyEntry> e = {{"c", 5, 3, 2, true}, {"a", 5, 1, 0, true}, {"b", 5, 1, 1, false}, {"d", 2, 9, 3, false}};
  CHECK(ascending_order(e) == pids({"d", "a", "b", "c"}));
}

TEST_CASE("policy plans return permutations with quantum >= 1") {
  std::mt19937_64 rng(2024);
  for (PolicyName name : kAllPolicies) {
    const auto policy = make_policy(paper_descriptor(name));
    for (int trial = 0; trial < 400; ++trial) {
      ReadySnapshot s;
      s.cycle_index = 1 + static_cast<int>(rng() % 6);
      const std::size_t n = 1 + rng() % 12;
      for (std::size_t i = 0; i < n; ++i) {
        s.entries.push_back({"P" + std::to_string(i + 1), 1 + static_cast<Millis>(rng() % 200),
                             static_cast<Millis>(rng() % 50), i, rng() % 2 == 0});
      }
      s.contains_new_arrivals = std::any_of(s.entries.begin(), s.entries.end(), [](const ReadyEntry& e) { return !e.dispatched_before; });
      const auto plan = policy.plan(s);
      CHECK(plan.quantum >= 1);
      auto sorted_plan = plan.order;
      std::vector<std::string> expected;
      for (const auto& e : s.entries) expected.push_back(e.pid);
      std::sort(sorted_plan.begin(), sorted_plan.end());
      std::sort(expected.begin(), expected.end());
      CHECK(sorted_plan == expected);

      // Quantum depends only on the multiset of remaining bursts (and cycle index).
      auto shuffled = s;
      std::shuffle(shuffled.entries.begin(), shuffled.entries.end(), rng);
      CHECK(policy.plan(shuffled).quantum == plan.quantum);

      if (name == PolicyName::DABRR || name == PolicyName::IRRVQ || name == PolicyName::MRR) {
        CHECK(plan.order == ascending_order(s.entries));
      }
      if (name == PolicyName::SARR || name == PolicyName::RP5) {
        CHECK(plan.order == expected_order_fifo(s));
      }
    }
  }
}

TEST_CASE("dqrrr rearranges only when new arrivals are present") {
  const auto policy = make_dqrrr();
  const auto fresh = policy.plan(snapshot({{"P1", 40}, {"P2", 55}, {"P3", 60}, {"P4", 90}, {"P5", 102}}, true));
  CHECK(fresh.order == pids({"P1", "P5", "P2", "P4", "P3"}));
  CHECK(fresh.quantum == 60);
  // Case I second cycle: survivors keep requeue order.
  const auto veterans = policy.plan(snapshot({{"P5", 42}, {"P4", 30}}, false, 2));
  CHECK(veterans.order == pids({"P5", "P4"}));
  CHECK(veterans.quantum == 36);
}

TEST_CASE("rp5 doubles the quantum every cycle") {
  const auto policy = make_rp5(25);
  CHECK(policy.plan(snapshot({{"P1", 300}}, true, 1)).quantum == 25);
  CHECK(policy.plan(snapshot({{"P1", 300}}, false, 2)).quantum == 50);
  CHECK(policy.plan(snapshot({{"P1", 300}}, false, 3)).quantum == 100);
  CHECK(make_rp5(3).plan(snapshot({{"P1", 300}}, false, 5)).quantum == 48);
}

TEST_CASE("factories set discipline, arrival mode and parameters") {
  const auto rr = make_round_robin(25);
  CHECK(rr.discipline == QueueDiscipline::FifoTailRejoin);
  CHECK(rr.descriptor.parameters.at("q") == 25);
  CHECK(make_dabrr().arrival_mode == ArrivalMode::SliceBoundaryRestart);
  for (auto factory : {make_sarr, make_dqrrr, make_irrvq}) {
    const auto p = factory();
    CHECK(p.discipline == QueueDiscipline::CyclePass);
    CHECK(p.arrival_mode == ArrivalMode::CycleBoundary);
    CHECK(p.descriptor.parameters.empty());
  }
  CHECK(make_mrr(25).descriptor.parameters.at("floor") == 25);
  CHECK(make_rp5(25).descriptor.parameters.at("base") == 25);
  CHECK_THROWS_AS(make_round_robin(0), PolicySpecError);
  CHECK_THROWS_AS(make_mrr(0), PolicySpecError);
}

TEST_CASE("policy spec parsing") {
  CHECK(parse_policy_spec("rr:q=25") == make_round_robin(25).descriptor);
  CHECK(parse_policy_spec("rr") == make_round_robin(25).descriptor);
  CHECK(parse_policy_spec("rr:q=7").parameters.at("q") == 7);
  CHECK(parse_policy_spec("dabrr").name == PolicyName::DABRR);
  CHECK(parse_policy_spec("SARR").name == PolicyName::SARR);
  CHECK(parse_policy_spec("dqrrr").name == PolicyName::DQRRR);
  CHECK(parse_policy_spec("irrvq").name == PolicyName::IRRVQ);
  CHECK(parse_policy_spec("rp5:base=10").parameters.at("base") == 10);
  CHECK(parse_policy_spec("mrr:floor=25") == make_mrr(25).descriptor);
  for (const auto& spec : {"rr:q=0", "rr:q=abc", "rr:floor=3", "dabrr:q=5", "fcfs", "rr:q", ""}) {
    CHECK_THROWS_AS(parse_policy_spec(spec), PolicySpecError);
  }
  for (PolicyName name : kAllPolicies) {
    const auto d = paper_descriptor(name);
    CHECK(parse_policy_spec(d.to_spec()) == d);
  }
}
