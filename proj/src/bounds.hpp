#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "qcc/problem.hpp"

namespace qcc::detail {

/// Admissible makespan lower bounds shared by the anytime early exit and the
/// branch-and-bound. All estimates strictly under-approximate: routing time
/// uses the cheapest swap duration per hop, gate time the cheapest conforming
/// PS edge.

struct BoundInput {
    const CompilationProblem* prob = nullptr;
    std::vector<int> location;                 // qstate -> qubit
    std::vector<std::int64_t> avail;           // qstate -> earliest free time
    std::vector<int> mix_count;                // qstate -> mixes done
    // achieved[(level-1) * edges + e] for instance edge e
    std::vector<bool> achieved;
};

inline int min_swap_duration(const HardwareGraph& hw) {
    int d = 1 << 30;
    for (const auto& e : hw.edges())
        if (e.kind == GateKind::Swap) d = std::min(d, e.duration);
    return d == 1 << 30 ? 1 : d;
}

inline int min_mix_duration(const HardwareGraph& hw) {
    int d = 1 << 30;
    for (int q = 0; q < hw.num_qubits(); ++q) d = std::min(d, hw.mix_duration(q));
    return d == 1 << 30 ? 1 : d;
}

/// Cheapest PS duration usable for a goal with the given requirement.
inline int min_ps_duration(const HardwareGraph& hw, int required) {
    int d = 1 << 30;
    for (const auto& e : hw.edges())
        if (e.kind == GateKind::PS && (required == 0 || e.duration == required))
            d = std::min(d, e.duration);
    return d == 1 << 30 ? 1 : d;
}

inline std::int64_t makespan_lower_bound(const BoundInput& in) {
    const auto& prob = *in.prob;
    const auto& hw = prob.hardware;
    const int m = static_cast<int>(prob.instance.edges.size());
    const int sw = min_swap_duration(hw);
    const int mx = min_mix_duration(hw);
    std::int64_t lb = 0;

    // per-goal chain bound: route once, then one PS (+ mix) per pending level
    for (int e = 0; e < m; ++e) {
        const QPair pair = prob.instance.edges[e];
        const int want = prob.goal_durations.empty() ? 0 : prob.goal_durations[e];
        const int cheapest = min_ps_duration(hw, want);
        int first = 1;
        while (first <= prob.p && in.achieved[(first - 1) * m + e]) ++first;
        if (first > prob.p) continue;
        std::int64_t route = INT64_MAX;
        for (const auto& g : hw.edges()) {
            if (g.kind != GateKind::PS) continue;
            if (want != 0 && g.duration != want) continue;
            for (int o = 0; o < 2; ++o) {
                const int x = o ? g.b : g.a;
                const int y = o ? g.a : g.b;
                const std::int64_t ta =
                    in.avail[pair.a] + std::int64_t(hw.swap_hops(in.location[pair.a], x)) * sw;
                const std::int64_t tb =
                    in.avail[pair.b] + std::int64_t(hw.swap_hops(in.location[pair.b], y)) * sw;
                route = std::min(route, std::max(ta, tb) + g.duration);
            }
        }
        if (route == INT64_MAX) continue;  // infeasible; detected elsewhere
        for (int level = first + 1; level <= prob.p; ++level)
            route += mx + cheapest;
        lb = std::max(lb, route);
    }

    // per-qstate workload bound: everything touching one qstate serializes
    for (int s = 0; s < prob.instance.n_states; ++s) {
        std::int64_t w = in.avail[s];
        bool any = false;
        for (int e = 0; e < m; ++e) {
            const QPair pair = prob.instance.edges[e];
            if (pair.a != s && pair.b != s) continue;
            const int want = prob.goal_durations.empty() ? 0 : prob.goal_durations[e];
            const int cheapest = min_ps_duration(hw, want);
            for (int level = 1; level <= prob.p; ++level)
                if (!in.achieved[(level - 1) * m + e]) {
                    w += cheapest;
                    any = true;
                }
        }
        if (any && prob.p > 1)
            w += std::int64_t(std::max(0, (prob.p - 1) - in.mix_count[s])) * mx;
        if (any) lb = std::max(lb, w);
    }
    return lb;
}

inline BoundInput root_bound_input(const CompilationProblem& prob) {
    BoundInput in;
    in.prob = &prob;
    in.location = prob.initial;
    in.avail.assign(prob.instance.n_states, 0);
    in.mix_count.assign(prob.instance.n_states, 0);
    in.achieved.assign(prob.instance.edges.size() * prob.p, false);
    return in;
}

}  // namespace qcc::detail
