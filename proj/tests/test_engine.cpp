#include <doctest.h>

#include "rrsim/engine.hpp"
#include "rrsim/policies.hpp"
#include "rrsim/workloads.hpp"
#include "support/reference_executor.hpp"

using namespace rrsim;

namespace {

Millis completion_of(const ExecutionTrace& trace, const std::string& pid) {
  Millis end = -1;
  for (const auto& s : trace.slices) {
    if (s.pid == pid) end = s.end;
  }
  return end;
}

}  // namespace

TEST_CASE("dabrr on the ascending zero-arrival case") {
  const auto w = paper_case(CaseId::I);
  const auto trace = simulate(w, make_dabrr());
  CHECK(trace.quanta() == std::vector<Millis>{69, 27, 6});
  CHECK(trace.slices.size() == 8);
  CHECK(completion_of(trace, "P1") == 40);
  CHECK(completion_of(trace, "P2") == 95);
  CHECK(completion_of(trace, "P3") == 155);
  CHECK(completion_of(trace, "P4") == 314);
  CHECK(completion_of(trace, "P5") == 347);
  // P5 is dispatched back to back across cycles 2 and 3.
  CHECK(trace.slices[6].pid == "P5");
  CHECK(trace.slices[7].pid == "P5");
  CHECK(trace.slices[7].cycle == 3);
  CHECK(replay_check(trace, w));
}

TEST_CASE("single process runs in one slice with its burst as quantum") {
  const auto w = validate_workload({{"P1", 0, 42}});
  const auto trace = simulate(w, make_dabrr());
  REQUIRE(trace.slices.size() == 1);
  CHECK(trace.slices[0].start == 0);
  CHECK(trace.slices[0].end == 42);
  CHECK(trace.slices[0].termination == Termination::Completed);
  CHECK(trace.quanta() == std::vector<Millis>{42});
}

TEST_CASE("round robin idles until the next arrival") {
  const auto w = validate_workload({{"P1", 0, 10}, {"P2", 50, 10}});
  const auto trace = simulate(w, make_round_robin(25));
  REQUIRE(trace.slices.size() == 2);
  CHECK(trace.slices[0] == Slice{"P1", 0, 10, 1, 25, Termination::Completed});
  REQUIRE(trace.idles.size() == 1);
  CHECK(trace.idles[0] == IdleGap{10, 50});
  CHECK(trace.slices[1].start == 50);
  CHECK(trace.slices[1].end == 60);
  const auto ref = testing::reference_run(w, PolicyName::RR, 25);
  CHECK(ref.completion == std::vector<Millis>{10, 60});
  CHECK(replay_check(trace, w));
}

TEST_CASE("round robin splits a long burst at the quantum") {
  const auto trace = simulate(validate_workload({{"P1", 0, 30}}), make_round_robin(25));
  REQUIRE(trace.slices.size() == 2);
  CHECK(trace.slices[0].end == 25);
  CHECK(trace.slices[0].termination == Termination::QuantumExpired);
  CHECK(trace.slices[1].end == 30);
}

TEST_CASE("arrival at a preemption instant enqueues before the preempted process") {
  // P2 arrives exactly when P1's first quantum expires.
  const auto w = validate_workload({{"P1", 0, 50}, {"P2", 25, 10}});
  const auto trace = simulate(w, make_round_robin(25));
  REQUIRE(trace.slices.size() == 3);
  CHECK(trace.slices[1].pid == "P2");
  CHECK(trace.slices[2].pid == "P1");
}

TEST_CASE("cycle-boundary policies hold arrivals until the cycle ends") {
  // RP-5 on case V runs cycle 1 with P1 only although P2 arrives at 2.
  const auto trace = simulate(paper_case(CaseId::V), make_rp5(25));
  CHECK(trace.slices[0].pid == "P1");
  CHECK(trace.slices[0].end == 25);
  CHECK(trace.slices[1].pid == "P1");
  CHECK(trace.slices[1].cycle == 2);
  CHECK(trace.quanta() == std::vector<Millis>{25, 50, 100});
}

TEST_CASE("dabrr abandons the cycle when a process arrives mid-cycle") {
  // Cycle 1 plans P1,P2 at t=0 with quantum 30; P3 arrives during P1's slice,
  // so P2 never runs in cycle 1 and cycle 2 re-plans over P1,P2,P3.
  const auto w = validate_workload({{"P1", 0, 20}, {"P2", 0, 40}, {"P3", 5, 10}});
  const auto trace = simulate(w, make_dabrr());
  CHECK(trace.quanta() == std::vector<Millis>{30, 25, 15});
  REQUIRE(trace.slices.size() == 4);
  CHECK(trace.slices[0].pid == "P1");
  CHECK(trace.slices[1].pid == "P3");
  CHECK(trace.slices[1].cycle == 2);
  CHECK(trace.slices[2].pid == "P2");
  const auto ref = testing::reference_run(w, PolicyName::DABRR);
  CHECK(ref.quanta == trace.quanta());
  CHECK(ref.completion == std::vector<Millis>{20, 70, 30});
  CHECK(replay_check(trace, w));
}

TEST_CASE("a defective planner is rejected") {
  const auto w = validate_workload({{"P1", 0, 5}, {"P2", 0, 5}});
  PolicyBehavior zero_quantum = make_sarr();
  zero_quantum.plan = [](const ReadySnapshot& s) {
    CyclePlan p{{}, 0};
    for (const auto& e : s.entries) p.order.push_back(e.pid);
    return p;
  };
  CHECK_THROWS_AS(simulate(w, zero_quantum), PolicyPlanInvalid);

  PolicyBehavior dropping = make_sarr();
  dropping.plan = [](const ReadySnapshot& s) { return CyclePlan{{s.entries.front().pid}, 5}; };
  CHECK_THROWS_AS(simulate(w, dropping), PolicyPlanInvalid);

  PolicyBehavior duplicating = make_sarr();
  duplicating.plan = [](const ReadySnapshot& s) { return CyclePlan{{s.entries[0].pid, s.entries[0].pid}, 5}; };
  CHECK_THROWS_AS(simulate(w, duplicating), PolicyPlanInvalid);
}

TEST_CASE("replay check catches broken traces") {
  const auto w = paper_case(CaseId::I);
  const auto good = simulate(w, make_dabrr());
  CHECK(replay_check(good, w).violations.empty());

  auto early = simulate(paper_case(CaseId::IV), make_dabrr());
  std::swap(early.slices[0].pid, early.slices[1].pid);  // P2 now "runs" at t=0, before arriving at 3
  CHECK_FALSE(replay_check(early, paper_case(CaseId::IV)));

  auto short_run = good;
  short_run.slices.back().end -= 1;
  const auto result = replay_check(short_run, w);
  CHECK_FALSE(result);
  CHECK_FALSE(result.violations.empty());

  auto overlap = good;
  overlap.slices[1].start -= 5;
  overlap.slices[1].quantum += 5;
  CHECK_FALSE(replay_check(overlap, w));

  auto lazy = good;
  lazy.idles.push_back({347, 360});
  CHECK_FALSE(replay_check(lazy, w));

  auto bad_flag = good;
  bad_flag.slices[0].termination = Termination::QuantumExpired;
  CHECK_FALSE(replay_check(bad_flag, w));
}

TEST_CASE("simulation is deterministic") {
  for (CaseId id : kPaperCases) {
    for (PolicyName name : kAllPolicies) {
      const auto policy = make_policy(paper_descriptor(name));
      CHECK(simulate(paper_case(id), policy) == simulate(paper_case(id), policy));
    }
  }
}

TEST_CASE("round robin with a huge quantum is FCFS") {
  const auto w = paper_case(CaseId::III);
  const auto trace = simulate(w, make_round_robin(1000));
  REQUIRE(trace.slices.size() == w.size());
  for (std::size_t i = 0; i < w.size(); ++i) CHECK(trace.slices[i].pid == w[i].pid);
}

TEST_CASE("delayed first arrival starts the trace at that arrival") {
  const auto w = validate_workload({{"P1", 7, 3}, {"P2", 20, 4}});
  for (PolicyName name : kAllPolicies) {
    const auto trace = simulate(w, make_policy(paper_descriptor(name)));
    CHECK(trace.slices.front().start == 7);
    REQUIRE(trace.idles.size() == 1);
    CHECK(trace.idles[0] == IdleGap{10, 20});
    CHECK(replay_check(trace, w));
  }
}
