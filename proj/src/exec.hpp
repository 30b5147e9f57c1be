#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qcc/plan.hpp"
#include "qcc/problem.hpp"

namespace qcc::detail {

// Incremental schedule builder shared by the planners. All times live on the
// integer grid; every action is placed at the earliest instant its qubits are
// free and its preconditions hold, so per-qubit timelines never overlap.
struct Exec {
    const CompilationProblem* prob = nullptr;
    std::vector<int> occupant;   // qubit -> qstate or -1
    std::vector<int> location;   // qstate -> qubit
    std::vector<std::int64_t> free_at;
    std::vector<int> mix_count;
    std::vector<std::int64_t> mix_end;
    std::map<std::pair<int, QPair>, std::int64_t> goal_end;  // (level, pair)
    TemporalPlan plan;

    void init(const CompilationProblem& p) {
        prob = &p;
        occupant.assign(p.hardware.num_qubits(), ScheduledAction::kNone);
        location = p.initial;
        for (int s = 0; s < p.instance.n_states; ++s) occupant[p.initial[s]] = s;
        free_at.assign(p.hardware.num_qubits(), 0);
        mix_count.assign(p.instance.n_states, 0);
        mix_end.assign(p.instance.n_states, 0);
        goal_end.clear();
        plan.actions.clear();
    }

    std::int64_t makespan() const {
        std::int64_t m = 0;
        for (std::int64_t t : free_at) m = std::max(m, t);
        return m;
    }

    void swap_step(int u, int v) {
        const EdgeGate* g = prob->hardware.find_gate(u, v, GateKind::Swap);
        if (g == nullptr) throw std::logic_error("router stepped off the swap graph");
        const std::int64_t t = std::max(free_at[u], free_at[v]);
        ScheduledAction a;
        a.start = t;
        a.duration = g->duration;
        a.kind = GateKind::Swap;
        a.qubits[0] = u;
        a.qubits[1] = v;
        a.qstates[0] = occupant[u];
        a.qstates[1] = occupant[v];
        a.canonicalize();
        plan.actions.push_back(a);
        free_at[u] = free_at[v] = t + g->duration;
        std::swap(occupant[u], occupant[v]);
        if (occupant[u] != ScheduledAction::kNone) location[occupant[u]] = u;
        if (occupant[v] != ScheduledAction::kNone) location[occupant[v]] = v;
    }

    std::int64_t do_ps(int x, int y, int level) {
        const EdgeGate* g = prob->hardware.find_gate(x, y, GateKind::PS);
        if (g == nullptr) throw std::logic_error("ps scheduled off a ps edge");
        const int qa = occupant[x];
        const int qb = occupant[y];
        QPair pair(qa, qb);
        std::int64_t t = std::max(free_at[x], free_at[y]);
        if (level >= 2) {
            t = std::max({t, mix_end[qa], mix_end[qb]});
            auto it = goal_end.find({level - 1, pair});
            if (it != goal_end.end()) t = std::max(t, it->second);
        }
        ScheduledAction a;
        a.start = t;
        a.duration = g->duration;
        a.kind = GateKind::PS;
        a.qubits[0] = x;
        a.qubits[1] = y;
        a.qstates[0] = qa;
        a.qstates[1] = qb;
        a.level = level;
        a.canonicalize();
        plan.actions.push_back(a);
        free_at[x] = free_at[y] = t + g->duration;
        goal_end[{level, pair}] = t + g->duration;
        return t + g->duration;
    }

    void do_mix(int s, int level) {
        const int q = location[s];
        const std::int64_t t = free_at[q];
        ScheduledAction a;
        a.start = t;
        a.duration = prob->hardware.mix_duration(q);
        a.kind = GateKind::Mix;
        a.qubits[0] = q;
        a.qstates[0] = s;
        a.level = level;
        plan.actions.push_back(a);
        free_at[q] = t + prob->hardware.mix_duration(q);
        mix_count[s] = level;
        mix_end[s] = t + prob->hardware.mix_duration(q);
    }
};

}  // namespace qcc::detail
