#include <doctest.h>

#include <stdexcept>

#include <set>

#include "qcc/planner.hpp"
#include "qcc/rng.hpp"
#include "qcc/validator.hpp"
#include "support.hpp"

using namespace qcc;
using namespace qcc::test;

namespace {

bool has_kind(const ValidationReport& r, ViolationKind k) {
    for (const auto& v : r.violations)
        if (v.kind == k) return true;
    return false;
}

}  // namespace

TEST_CASE("the worked single-goal sequence validates at makespan 8") {
    CompilationProblem prob = eq1_problem();
    TemporalPlan plan = eq1_plan(prob);
    ValidationReport rep = validate(plan, prob);
    CHECK(rep.valid);
    CHECK(rep.plan_makespan == Ratio(8));
    CHECK(rep.achieved.at(1).count(QPair(1, 3)) == 1);
    // swaps permute the initial assignment
    std::set<int> finals(rep.final_locations.begin(), rep.final_locations.end());
    CHECK(finals.size() == 4);
}

TEST_CASE("overlapping swaps on a shared qubit are a mutex violation") {
    CompilationProblem prob = eq1_problem();
    TemporalPlan plan;
    plan.actions = {act(prob, 0, GateKind::Swap, "n1", "n2", 0, 1),
                    act(prob, 1, GateKind::Swap, "n2", "n3", 1, 2),
                    act(prob, 4, GateKind::PS, "n2", "n3", 3, 1)};
    ValidationReport rep = validate(plan, prob);
    CHECK_FALSE(rep.valid);
    CHECK(has_kind(rep, ViolationKind::MutexOverlap));
}

TEST_CASE("empty plan for an empty goal set is valid with makespan 0") {
    CompilationProblem prob = make_problem({}, 2);
    ValidationReport rep = validate(TemporalPlan{}, prob);
    CHECK(rep.valid);
    CHECK(rep.plan_makespan == Ratio(0));
}

TEST_CASE("empty plan with goals reports GOAL_UNACHIEVED") {
    CompilationProblem prob = eq1_problem();
    ValidationReport rep = validate(TemporalPlan{}, prob);
    CHECK_FALSE(rep.valid);
    CHECK(has_kind(rep, ViolationKind::GoalUnachieved));
}

TEST_CASE("wrong edge and wrong duration are flagged") {
    CompilationProblem prob = eq1_problem();
    TemporalPlan plan;
    // n1-n3 carries no gate at all
    plan.actions = {act(prob, 0, GateKind::PS, "n1", "n3", 0, 2)};
    CHECK(has_kind(validate(plan, prob), ViolationKind::WrongEdge));

    // (n2,n3) is a duration-4 edge; claim 3
    TemporalPlan plan2;
    ScheduledAction a = act(prob, 0, GateKind::PS, "n2", "n3", 1, 2);
    a.duration = 3;
    plan2.actions = {a};
    CHECK(has_kind(validate(plan2, prob), ViolationKind::WrongDuration));
}

TEST_CASE("qstate location claims are re-derived, not trusted") {
    CompilationProblem prob = eq1_problem();
    TemporalPlan plan;
    plan.actions = {act(prob, 0, GateKind::PS, "n1", "n2", 3, 1)};  // q4 is on n4
    ValidationReport rep = validate(plan, prob);
    CHECK(has_kind(rep, ViolationKind::BadQstateLocation));
}

TEST_CASE("swaps through empty qubits are legal") {
    // q1..q4 occupy n1..n4; n5..n8 are empty
    CompilationProblem prob = eq1_problem();
    TemporalPlan plan;
    plan.actions = {
        act(prob, 0, GateKind::Swap, "n4", "n5", 3, ScheduledAction::kNone),
        act(prob, 2, GateKind::Swap, "n5", "n4", 3, ScheduledAction::kNone),
        act(prob, 4, GateKind::Swap, "n4", "n1", 3, 0),
        act(prob, 6, GateKind::PS, "n1", "n2", 3, 1),
    };
    ValidationReport rep = validate(plan, prob);
    CHECK(rep.valid);
    CHECK(rep.plan_makespan == Ratio(9));
}

TEST_CASE("level-2 gates need the level-1 goal and both mixes") {
    CompilationProblem prob = make_problem({QPair(0, 1)}, 2, 2);
    // q1,q2 sit on the n1-n2 edge (duration 3)
    TemporalPlan plan;
    plan.actions = {act(prob, 0, GateKind::PS, "n1", "n2", 0, 1, 1),
                    act(prob, 3, GateKind::Mix, "n1", "", 0, ScheduledAction::kNone, 1),
                    act(prob, 3, GateKind::Mix, "n2", "", 1, ScheduledAction::kNone, 1),
                    act(prob, 4, GateKind::PS, "n1", "n2", 0, 1, 2)};
    ValidationReport rep = validate(plan, prob);
    CHECK(rep.valid);
    CHECK(rep.plan_makespan == Ratio(7));

    // skip the mixes: the level-2 gate is premature and the mixes are missing
    TemporalPlan bad;
    bad.actions = {act(prob, 0, GateKind::PS, "n1", "n2", 0, 1, 1),
                   act(prob, 3, GateKind::PS, "n1", "n2", 0, 1, 2)};
    ValidationReport rep2 = validate(bad, prob);
    CHECK_FALSE(rep2.valid);
    CHECK(has_kind(rep2, ViolationKind::PrematurePS2));

    // mixing before the level-1 goal
    TemporalPlan bad3;
    bad3.actions = {act(prob, 0, GateKind::Mix, "n1", "", 0, ScheduledAction::kNone, 1),
                    act(prob, 1, GateKind::PS, "n1", "n2", 0, 1, 1)};
    CHECK(has_kind(validate(bad3, prob), ViolationKind::PrematureMix));

    // double mix
    TemporalPlan bad4;
    bad4.actions = {act(prob, 0, GateKind::PS, "n1", "n2", 0, 1, 1),
                    act(prob, 3, GateKind::Mix, "n1", "", 0, ScheduledAction::kNone, 1),
                    act(prob, 4, GateKind::Mix, "n1", "", 0, ScheduledAction::kNone, 1)};
    CHECK(has_kind(validate(bad4, prob), ViolationKind::DoubleMix));

    // the same pair twice at one level
    TemporalPlan bad5;
    bad5.actions = {act(prob, 0, GateKind::PS, "n1", "n2", 0, 1, 1),
                    act(prob, 3, GateKind::PS, "n1", "n2", 0, 1, 1)};
    CHECK(has_kind(validate(bad5, prob), ViolationKind::DuplicateGoal));
}

TEST_CASE("remove_superfluous strips junk and keeps the makespan") {
    CompilationProblem prob = eq1_problem();
    // lean plan: one swap then the duration-3 gate at (n1,n2)
    TemporalPlan lean;
    lean.actions = {act(prob, 0, GateKind::Swap, "n4", "n1", 3, 0),
                    act(prob, 2, GateKind::PS, "n1", "n2", 3, 1)};
    REQUIRE(validate(lean, prob).valid);

    // seed it with a goal-less mix and a cancelling swap pair, inside the span
    TemporalPlan junk = lean;
    junk.actions.push_back(act(prob, 0, GateKind::Mix, "n3", "", 2, ScheduledAction::kNone, 1));
    junk.actions.push_back(act(prob, 0, GateKind::Swap, "n5", "n6", ScheduledAction::kNone,
                               ScheduledAction::kNone));
    junk.actions.push_back(act(prob, 2, GateKind::Swap, "n5", "n6", ScheduledAction::kNone,
                               ScheduledAction::kNone));
    REQUIRE(validate(junk, prob).valid);
    CHECK(junk.makespan() == Ratio(5));

    TemporalPlan out = remove_superfluous(junk, prob);
    CHECK(out.actions.size() == 2);
    CHECK(validate(out, prob).valid);
    CHECK(out.makespan() == Ratio(5));

    // an already-minimal plan is untouched
    CHECK(remove_superfluous(lean, prob) == lean);
    // the worked 4-action sequence is minimal too
    TemporalPlan eq1 = eq1_plan(prob);
    CHECK(remove_superfluous(eq1, prob) == eq1);

    // invalid input is refused
    CHECK_THROWS_AS(remove_superfluous(TemporalPlan{}, prob), std::invalid_argument);
}

TEST_CASE("remove_superfluous is idempotent on random valid plans") {
    Rng rng(77);
    for (int round = 0; round < 60; ++round) {
        MaxCutInstance inst = generate_instance(8, round % 2 ? 0.9 : 1.0, round);
        CompilationProblem prob =
            build_problem(inst, preset("N8"), 1, AssignMode::Random, round);
        TemporalPlan plan = greedy_compile(prob, 0);
        TemporalPlan once = remove_superfluous(plan, prob);
        TemporalPlan twice = remove_superfluous(once, prob);
        CHECK(once == twice);
        CHECK(once.makespan() <= plan.makespan());
    }
}

TEST_CASE("start-time perturbation triggers only the predicted violations") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        MaxCutInstance inst = generate_instance(8, 1.0, seed);
        CompilationProblem prob =
            build_problem(inst, preset("N8"), 1, AssignMode::Random, seed);
        TemporalPlan plan = greedy_compile(prob, 0);
        Rng rng(seed);
        for (int trial = 0; trial < 5; ++trial) {
            std::size_t i = rng.below(plan.actions.size());
            if (!(Ratio(1) <= plan.actions[i].start)) continue;
            TemporalPlan shifted = plan;
            shifted.actions[i].start = shifted.actions[i].start - Ratio(1);
            ValidationReport rep = validate(shifted, prob);
            for (const auto& v : rep.violations) {
                const bool expected = v.kind == ViolationKind::MutexOverlap ||
                                      v.kind == ViolationKind::BadQstateLocation ||
                                      v.kind == ViolationKind::PrematureMix ||
                                      v.kind == ViolationKind::PrematurePS2;
                CHECK(expected);
            }
        }
    }
}

TEST_CASE("two parallel duration-3 gates make a makespan-3 plan") {
    // {q1,q2} on the (n1,n2) edge and {q4,q5} on the (n4,n5) edge, both 3
    CompilationProblem prob = make_problem({QPair(0, 1), QPair(3, 4)}, 5);
    TemporalPlan plan;
    plan.actions = {act(prob, 0, GateKind::PS, "n1", "n2", 0, 1),
                    act(prob, 0, GateKind::PS, "n4", "n5", 3, 4)};
    ValidationReport rep = validate(plan, prob);
    CHECK(rep.valid);
    CHECK(makespan(plan) == Ratio(3));
    CHECK(makespan(TemporalPlan{}) == Ratio(0));
}

TEST_CASE("valid plans leave a permutation of the initial assignment") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        MaxCutInstance inst = generate_instance(8, seed % 2 ? 0.9 : 1.0, seed);
        CompilationProblem prob =
            build_problem(inst, preset("N8"), 1, AssignMode::Random, seed);
        TemporalPlan plan = greedy_compile(prob, seed);
        ValidationReport rep = validate(plan, prob);
        REQUIRE(rep.valid);
        std::set<int> finals(rep.final_locations.begin(), rep.final_locations.end());
        CHECK(finals.size() == rep.final_locations.size());
        for (int q : rep.final_locations) {
            CHECK(q >= 0);
            CHECK(q < prob.hardware.num_qubits());
        }
    }
}

TEST_CASE("ipc_score formula") {
    CHECK(ipc_score(10, 10) == doctest::Approx(1.0));
    CHECK(ipc_score(8, 10) == doctest::Approx(0.8));
    CHECK_THROWS_AS(ipc_score(10, 8), std::invalid_argument);
    CHECK_THROWS_AS(ipc_score(0, 8), std::invalid_argument);
}

TEST_CASE("validation report JSON round trip") {
    CompilationProblem prob = eq1_problem();
    TemporalPlan plan;
    plan.actions = {act(prob, 0, GateKind::PS, "n1", "n2", 3, 1)};
    ValidationReport rep = validate(plan, prob);
    ValidationReport back = ValidationReport::from_json(rep.to_json());
    CHECK(back.valid == rep.valid);
    REQUIRE(back.violations.size() == rep.violations.size());
    for (std::size_t i = 0; i < rep.violations.size(); ++i) {
        CHECK(back.violations[i].kind == rep.violations[i].kind);
        CHECK(back.violations[i].action == rep.violations[i].action);
    }
    CHECK(back.plan_makespan == rep.plan_makespan);
}

TEST_CASE("fractional start times compare exactly") {
    CompilationProblem prob = make_problem({QPair(0, 1)}, 2);
    // two gates on one qubit separated by an epsilon gap: legal
    TemporalPlan plan;
    ScheduledAction ps = act(prob, 0, GateKind::PS, "n1", "n2", 0, 1);
    TemporalPlan base;
    base.actions = {ps};
    REQUIRE(validate(base, prob).valid);

    ScheduledAction swap1 = act(prob, 0, GateKind::Swap, "n1", "n2", 0, 1);
    ScheduledAction ps2 = ps;
    ps2.start = Ratio::from_decimal("2.0005");  // after the swap, off-grid
    TemporalPlan frac;
    frac.actions = {swap1, ps2};
    ValidationReport rep = validate(frac, prob);
    // swap flipped the occupants, so the claims no longer hold
    CHECK(has_kind(rep, ViolationKind::BadQstateLocation));

    ScheduledAction ps3 = ps2;
    ps3.qstates[0] = 1;
    ps3.qstates[1] = 0;
    TemporalPlan frac2;
    frac2.actions = {swap1, ps3};
    ValidationReport rep2 = validate(frac2, prob);
    CHECK(rep2.valid);
    CHECK(rep2.plan_makespan == Ratio::from_decimal("5.0005"));

    // a hair earlier and the gate overlaps the swap
    ScheduledAction ps4 = ps3;
    ps4.start = Ratio::from_decimal("1.9995");
    TemporalPlan frac3;
    frac3.actions = {swap1, ps4};
    CHECK(has_kind(validate(frac3, prob), ViolationKind::MutexOverlap));
}
