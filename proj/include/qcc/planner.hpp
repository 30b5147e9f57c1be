#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qcc/plan.hpp"
#include "qcc/problem.hpp"

namespace qcc {

/// Deterministic one-shot compiler. Repeatedly picks the unachieved goal of
/// the current level whose qstate pair is closest in swap hops (ties: earliest
/// simulated finish, then lexicographic pair), routes both endpoints toward
/// the best PS edge, and schedules every action at the earliest time its
/// qubits are free and its preconditions hold. Mixes fire as soon as a
/// qstate's level goals complete. Always returns a valid plan.
TemporalPlan greedy_compile(const CompilationProblem& problem, std::uint64_t seed);

/// Budget for anytime search: iterations (deterministic) or wall-clock
/// seconds. Parsed from strings like "500", "500it", "5s".
struct Budget {
    enum class Kind { Iterations, Seconds } kind = Kind::Iterations;
    double amount = 1;
    static Budget iterations(std::uint64_t n);
    static Budget seconds(double s);
    static Budget parse(const std::string& text);
};

struct AnytimeResult {
    TemporalPlan plan;
    /// (elapsed seconds, makespan) at each improvement; makespans are
    /// non-increasing.
    std::vector<std::pair<double, std::int64_t>> history;
    std::uint64_t iterations = 0;
};

/// Seeded randomized restarts of the greedy compiler with perturbed goal
/// orders and routing choices, plus order-swap local search. For p >= 2 it
/// also maintains a p=1 sub-search and keeps the replicate-reverse of its
/// best plan as an incumbent, so the returned makespan never exceeds
/// 2 * M1 + tau_mix for the same seed and budget. Identical (problem, seed,
/// iteration budget) gives an identical plan.
AnytimeResult anytime_compile(const CompilationProblem& problem,
                              std::uint64_t seed, const Budget& budget);

struct SearchLimits {
    int max_actions = 64;
    std::int64_t max_makespan = 1'000'000;
    std::uint64_t node_budget = 50'000'000;
};

struct OptimalResult {
    TemporalPlan plan;
    bool proved_optimal = false;
    std::uint64_t nodes = 0;
};

/// Depth-first branch-and-bound over timed action sequences, for tiny
/// instances. Lower bound: per-goal routing time plus PS duration. Dominance
/// pruning on (goal-relevant placement, achieved goals, mixed set). If the
/// search exhausts within budget and no limit truncated it, the result is
/// proved makespan-minimal.
OptimalResult optimal_compile(const CompilationProblem& problem,
                              const SearchLimits& limits = {});

/// Builds a p=2 plan from a valid, mix-free p=1 plan: the plan, one MIX per
/// instance qstate at its final location, then the time-mirrored plan with PS
/// relabeled to level 2. Makespan is exactly 2 * M1 + tau_mix.
TemporalPlan replicate_reverse(const TemporalPlan& p1_plan,
                               const CompilationProblem& p2_problem);

}  // namespace qcc
