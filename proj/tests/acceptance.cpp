// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Budgets and tolerances are fixed here, not configurable.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "qcc/bench.hpp"
#include "qcc/pddl.hpp"
#include "qcc/planner.hpp"
#include "qcc/rng.hpp"
#include "qcc/validator.hpp"

using namespace qcc;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& what,
            const std::string& detail) {
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": "
              << what;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << std::endl;
    if (!pass) ++failures;
}

double secs(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::int64_t ms_int(const TemporalPlan& plan) {
    const Ratio m = plan.makespan();
    return m.num / m.den;
}

CompilationProblem identity_problem(std::vector<QPair> edges, int n_states, int p,
                                    const std::string& hw = "N8") {
    MaxCutInstance inst;
    inst.n_states = n_states;
    std::sort(edges.begin(), edges.end());
    inst.edges = std::move(edges);
    return build_problem(inst, preset(hw), p, AssignMode::Identity, 0);
}

ScheduledAction mk(const CompilationProblem& prob, std::int64_t start, GateKind kind,
                   const std::string& qa, const std::string& qb, int sa, int sb,
                   int level = 1) {
    ScheduledAction a;
    a.start = start;
    a.kind = kind;
    a.qubits[0] = prob.hardware.index_of(qa);
    a.qubits[1] = qb.empty() ? ScheduledAction::kNone : prob.hardware.index_of(qb);
    a.qstates[0] = sa;
    a.qstates[1] = sb;
    a.level = kind == GateKind::Swap ? 0 : level;
    if (kind == GateKind::Mix)
        a.duration = prob.hardware.mix_duration(a.qubits[0]);
    else
        a.duration = prob.hardware.find_gate(a.qubits[0], a.qubits[1], kind)->duration;
    a.canonicalize();
    return a;
}

// --------------------------------------------------------------------------

void criterion1_eq1_witness() {
    CompilationProblem prob = identity_problem({QPair(1, 3)}, 4, 1);  // {q2,q4}
    TemporalPlan plan;
    plan.actions = {mk(prob, 0, GateKind::Swap, "n4", "n1", 3, 0),
                    mk(prob, 0, GateKind::Swap, "n2", "n3", 1, 2),
                    mk(prob, 2, GateKind::Swap, "n1", "n2", 3, 2),
                    mk(prob, 4, GateKind::PS, "n2", "n3", 3, 1)};
    ValidationReport rep = validate(plan, prob);
    const bool pass = rep.valid && rep.plan_makespan == Ratio(8);
    report(1, pass, "hand-coded swap/swap/swap/gate sequence validates at 2*2+4 = 8",
           "valid=" + std::to_string(rep.valid) + " makespan=" +
               rep.plan_makespan.to_decimal());
}

CompilationProblem tradeoff_problem() {
    std::vector<std::tuple<std::string, std::string, GateKind, int>> gates;
    const char* ring[][2] = {{"n1", "n2"}, {"n2", "n3"}, {"n3", "n8"}, {"n8", "n7"},
                             {"n7", "n6"}, {"n6", "n5"}, {"n5", "n4"}, {"n4", "n1"}};
    for (const auto& e : ring) gates.emplace_back(e[0], e[1], GateKind::Swap, 2);
    gates.emplace_back("n1", "n2", GateKind::PS, 3);
    gates.emplace_back("n2", "n3", GateKind::PS, 4);
    HardwareGraph hw({"n1", "n2", "n3", "n4", "n5", "n6", "n7", "n8"}, gates, 1, {});
    MaxCutInstance inst;
    inst.n_states = 4;
    inst.edges = {QPair(0, 1), QPair(1, 3)};
    CompilationProblem prob = build_problem(inst, hw, 1, AssignMode::Identity, 0);
    prob.goal_durations = {3, 4};
    return prob;
}

void criterion2_tradeoff() {
    CompilationProblem prob = tradeoff_problem();

    OptimalResult best = optimal_compile(prob);
    const bool proved11 = best.proved_optimal && ms_int(best.plan) == 11;

    TemporalPlan serial;
    serial.actions = {mk(prob, 0, GateKind::PS, "n1", "n2", 0, 1),
                      mk(prob, 3, GateKind::Swap, "n4", "n1", 3, 0),
                      mk(prob, 3, GateKind::Swap, "n2", "n3", 1, 2),
                      mk(prob, 5, GateKind::Swap, "n1", "n2", 3, 2),
                      mk(prob, 7, GateKind::PS, "n2", "n3", 3, 1)};
    ValidationReport srep = validate(serial, prob);

    TemporalPlan parallel;
    parallel.actions = {mk(prob, 0, GateKind::PS, "n1", "n2", 0, 1),
                        mk(prob, 0, GateKind::Swap, "n4", "n5", 3, ScheduledAction::kNone),
                        mk(prob, 2, GateKind::Swap, "n5", "n6", 3, ScheduledAction::kNone),
                        mk(prob, 4, GateKind::Swap, "n6", "n7", 3, ScheduledAction::kNone),
                        mk(prob, 6, GateKind::Swap, "n7", "n8", 3, ScheduledAction::kNone),
                        mk(prob, 8, GateKind::Swap, "n8", "n3", 3, 2),
                        mk(prob, 10, GateKind::PS, "n2", "n3", 1, 3)};
    ValidationReport prep = validate(parallel, prob);

    const bool pass = proved11 && srep.valid && srep.plan_makespan == Ratio(11) &&
                      prep.valid && prep.plan_makespan == Ratio(14);
    report(2, pass, "waiting beats the five-swap detour: proved 11 vs 14",
           "proved=" + std::to_string(best.proved_optimal) + " optimal=" +
               std::to_string(ms_int(best.plan)) + " serial=" +
               srep.plan_makespan.to_decimal() + " parallel=" +
               prep.plan_makespan.to_decimal());
}

void criterion3_oracle_equivalence() {
    const int total = 200;
    int matched = 0, validated = 0, proved = 0;
    bool never_beat = true;
    for (int k = 0; k < total; ++k) {
        const std::uint64_t seed = 1000 + k;
        MaxCutInstance inst = generate_instance(8, k % 2 ? 0.9 : 1.0, seed);
        inst.edges.resize(1 + k % 3);  // 1..3 goals
        CompilationProblem prob =
            build_problem(inst, preset("N8"), 1, AssignMode::Random, seed);

        OptimalResult best = optimal_compile(prob);
        if (best.proved_optimal) ++proved;
        AnytimeResult any = anytime_compile(prob, seed, Budget::seconds(5));
        if (validate(any.plan, prob).valid) ++validated;
        if (best.proved_optimal) {
            if (ms_int(any.plan) < ms_int(best.plan)) never_beat = false;
            if (ms_int(any.plan) == ms_int(best.plan)) ++matched;
        }
    }
    const bool pass = proved == total && matched >= total * 95 / 100 &&
                      never_beat && validated == total;
    report(3, pass,
           "anytime (5 s) matches proved optima on >= 95% of 200 small instances",
           "proved=" + std::to_string(proved) + " matched=" + std::to_string(matched) +
               "/200 validated=" + std::to_string(validated) + "/200 never_beat=" +
               std::to_string(never_beat));
}

void criterion4_suite_shape() {
    bool shape_ok = true;
    std::string why;
    const int expect_states[2][3] = {{7, 18, 36}, {8, 21, 40}};
    const int sizes[3] = {8, 21, 40};
    for (int ui = 0; ui < 2; ++ui) {
        const double u = ui == 0 ? 0.9 : 1.0;
        for (int si = 0; si < 3; ++si) {
            for (std::uint64_t seed = 1; seed <= 50; ++seed) {
                MaxCutInstance inst = generate_instance(sizes[si], u, seed);
                if (inst.n_states != expect_states[ui][si] ||
                    static_cast<int>(inst.edges.size()) != sizes[si]) {
                    shape_ok = false;
                    why = "N" + std::to_string(sizes[si]) + " u=" + std::to_string(u);
                }
            }
        }
    }

    // end-to-end over the smallest size: 100 rows, all valid
    BenchConfig cfg;
    cfg.sizes = {8};
    cfg.utilizations = {0.9, 1.0};
    cfg.ps = {1};
    cfg.seeds_per_cell = 50;
    cfg.budget = Budget::iterations(20);
    auto rows = run_bench(cfg);
    bool bench_ok = rows.size() == 100;
    for (const auto& r : rows) bench_ok = bench_ok && r.valid;

    report(4, shape_ok && bench_ok,
           "bench reproduces the generation protocol (50+50 per size, N edges)",
           shape_ok ? "rows=" + std::to_string(rows.size()) : why);
}

void criterion5_replicate_bound() {
    const int total = 100;
    int ok_rr = 0, ok_bound = 0;
    const Budget budget = Budget::iterations(200);
    for (int k = 0; k < total; ++k) {
        const std::uint64_t seed = 2000 + k;
        MaxCutInstance inst = generate_instance(8, k % 2 ? 0.9 : 1.0, seed);
        CompilationProblem p2 =
            build_problem(inst, preset("N8"), 2, AssignMode::Random, seed);
        CompilationProblem p1 = p2;
        p1.p = 1;

        AnytimeResult a1 = anytime_compile(p1, seed, budget);
        const std::int64_t m1 = ms_int(a1.plan);
        TemporalPlan rr = replicate_reverse(a1.plan, p2);
        if (validate(rr, p2).valid && ms_int(rr) == 2 * m1 + 1) ++ok_rr;

        AnytimeResult a2 = anytime_compile(p2, seed, budget);
        if (ms_int(a2.plan) <= 2 * m1 + 1) ++ok_bound;
    }
    const bool pass = ok_rr == total && ok_bound == total;
    report(5, pass, "replicate-reverse validates at 2*M1+1 and direct p=2 never exceeds it",
           "rr_ok=" + std::to_string(ok_rr) + "/100 bound_ok=" +
               std::to_string(ok_bound) + "/100");
}

void criterion6_ipc_scoring() {
    bool pass = ipc_score(10, 10) == 1.0 && ipc_score(8, 10) == 0.8;

    // batch means over an ensemble stay in (0, 1]
    double sum = 0;
    int n = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        MaxCutInstance inst = generate_instance(8, 1.0, seed);
        CompilationProblem prob =
            build_problem(inst, preset("N8"), 1, AssignMode::Random, seed);
        const std::int64_t quick = ms_int(greedy_compile(prob, seed));
        const std::int64_t tuned =
            ms_int(anytime_compile(prob, seed, Budget::iterations(150)).plan);
        sum += ipc_score(static_cast<double>(std::min(quick, tuned)),
                         static_cast<double>(quick));
        ++n;
    }
    const double mean = sum / n;
    pass = pass && mean > 0.0 && mean <= 1.0;
    report(6, pass, "IPC score fixtures are exact and batch means lie in (0,1]",
           "mean=" + std::to_string(mean));
}

void criterion7_pddl_fidelity() {
    // the 6-vertex example instance on the 8-qubit chip, identity placement
    CompilationProblem prob = identity_problem(
        {QPair(0, 2), QPair(0, 3), QPair(0, 4), QPair(2, 6), QPair(3, 5), QPair(4, 5)},
        8, 2);
    const std::string dom = emit_domain(prob, PddlVariant::Negative);

    const char* golden[] = {
        "(:durative-action swap_1_2\n"
        "  :parameters (?q1 - qstate ?q2 - qstate)\n"
        "  :duration (= ?duration 2)\n"
        "  :condition (and (at start (located_at_1 ?q1))\n"
        "                  (at start (located_at_2 ?q2)))\n"
        "  :effect (and (at start (not (located_at_1 ?q1)))\n"
        "               (at start (not (located_at_2 ?q2)))\n"
        "               (at end (located_at_1 ?q2))\n"
        "               (at end (located_at_2 ?q1))))",
        "(:durative-action mix_q5_at_1\n"
        "  :parameters ()\n"
        "  :duration (= ?duration 1)\n"
        "  :condition (and (at start (located_at_1 q5))\n"
        "                  (at start (GOAL_PS1 q1 q5))\n"
        "                  (at start (GOAL_PS1 q5 q6))\n"
        "                  (over all (not (mixed q5))))",
        "(:durative-action P-S_1stPhaseSeparation_at_6-7\n"
        "  :parameters (?q1 - qstate ?q2 - qstate)\n"
        "  :duration (= ?duration 3)\n"
        "  :condition (and (at start (located_at_6 ?q1))\n"
        "                  (at start (located_at_7 ?q2))\n"
        "                  (at start (not (GOAL_PS1 ?q1 ?q2))))",
        "(:durative-action P-S_2ndPhaseSeparation_at_6-7\n"
        "  :parameters (?q1 - qstate ?q2 - qstate)\n"
        "  :duration (= ?duration 3)\n"
        "  :condition (and (at start (located_at_6 ?q1))\n"
        "                  (at start (located_at_7 ?q2))\n"
        "                  (at start (not (GOAL_PS2 ?q1 ?q2)))\n"
        "                  (at start (GOAL_PS1 ?q1 ?q2))\n"
        "                  (at start (mixed ?q1))\n"
        "                  (at start (mixed ?q2)))",
    };
    bool pass = true;
    std::string missing;
    for (const char* block : golden)
        if (dom.find(block) == std::string::npos) {
            pass = false;
            std::istringstream head(block);
            std::getline(head, missing);
        }
    report(7, pass, "emitted domain bit-matches the golden action blocks",
           pass ? "4 golden blocks found" : "missing " + missing);
}

void criterion8_superfluous() {
    // seeded pattern: goal-less mix plus a cancelling swap pair
    CompilationProblem prob = identity_problem({QPair(1, 3)}, 4, 1);
    TemporalPlan lean;
    lean.actions = {mk(prob, 0, GateKind::Swap, "n4", "n1", 3, 0),
                    mk(prob, 2, GateKind::PS, "n1", "n2", 3, 1)};
    TemporalPlan junk = lean;
    junk.actions.push_back(
        mk(prob, 0, GateKind::Mix, "n3", "", 2, ScheduledAction::kNone, 1));
    junk.actions.push_back(mk(prob, 0, GateKind::Swap, "n5", "n6",
                              ScheduledAction::kNone, ScheduledAction::kNone));
    junk.actions.push_back(mk(prob, 2, GateKind::Swap, "n5", "n6",
                              ScheduledAction::kNone, ScheduledAction::kNone));
    bool pass = validate(junk, prob).valid;
    TemporalPlan out = remove_superfluous(junk, prob);
    pass = pass && out.actions.size() == 2 && validate(out, prob).valid &&
           out.makespan() == junk.makespan();

    // idempotence over 1000 random valid plans (greedy output plus legal junk)
    int idempotent = 0;
    const int total = 1000;
    for (int k = 0; k < total; ++k) {
        const std::uint64_t seed = 3000 + k;
        MaxCutInstance inst = generate_instance(8, k % 2 ? 0.9 : 1.0, seed);
        if (k % 3 == 0) inst.edges.resize(4);  // leave some qstates goal-less
        CompilationProblem rp =
            build_problem(inst, preset("N8"), k % 4 == 0 ? 2 : 1, AssignMode::Random, seed);
        TemporalPlan plan = greedy_compile(rp, seed);
        // sprinkle junk where it stays legal: an unused-qstate mix at rest
        const auto used = rp.used_qstates();
        ValidationReport rep = validate(plan, rp);
        for (int s = 0; s < rp.instance.n_states; ++s) {
            if (used[s]) continue;
            TemporalPlan cand = plan;
            ScheduledAction m;
            m.start = 0;
            m.kind = GateKind::Mix;
            m.qubits[0] = rep.final_locations[s];
            m.qstates[0] = s;
            m.level = 1;
            m.duration = rp.hardware.mix_duration(m.qubits[0]);
            cand.actions.push_back(m);
            if (validate(cand, rp).valid && cand.makespan() == plan.makespan()) {
                plan = cand;
                break;
            }
        }
        TemporalPlan once = remove_superfluous(plan, rp);
        TemporalPlan twice = remove_superfluous(once, rp);
        if (once == twice && validate(once, rp).valid) ++idempotent;
    }
    pass = pass && idempotent == total;
    report(8, pass, "superfluous gates are removed; removal is idempotent",
           "seeded=" + std::to_string(out.actions.size()) + " actions left, idempotent=" +
               std::to_string(idempotent) + "/1000");
}

void criterion9_scale_smoke() {
    int valid = 0, within_time = 0;
    int amin = 1 << 30, amax = 0;
    long asum = 0;
    for (int k = 0; k < 100; ++k) {
        const std::uint64_t seed = 4000 + k;
        MaxCutInstance inst = generate_instance(40, k < 50 ? 0.9 : 1.0, seed);
        CompilationProblem prob =
            build_problem(inst, preset("N40"), 1, AssignMode::Random, seed);
        const auto t0 = Clock::now();
        TemporalPlan plan = greedy_compile(prob, seed);
        if (secs(t0) < 60.0) ++within_time;
        if (validate(plan, prob).valid) ++valid;
        const int n = static_cast<int>(plan.actions.size());
        amin = std::min(amin, n);
        amax = std::max(amax, n);
        asum += n;
    }
    const bool pass = valid == 100 && within_time == 100;
    report(9, pass, "greedy compiles all 100 N=40 p=1 instances under 60 s each",
           "valid=" + std::to_string(valid) + "/100 actions min/mean/max = " +
               std::to_string(amin) + "/" + std::to_string(asum / 100) + "/" +
               std::to_string(amax));
}

}  // namespace

int main() {
    const auto t0 = Clock::now();
    criterion1_eq1_witness();
    criterion2_tradeoff();
    criterion3_oracle_equivalence();
    criterion4_suite_shape();
    criterion5_replicate_bound();
    criterion6_ipc_scoring();
    criterion7_pddl_fidelity();
    criterion8_superfluous();
    criterion9_scale_smoke();
    std::cout << (failures == 0 ? "ALL CRITERIA PASSED"
                                : "FAILURES: " + std::to_string(failures))
              << " in " << secs(t0) << "s" << std::endl;
    return failures == 0 ? 0 : 1;
}
