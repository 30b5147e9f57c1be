#pragma once

#include <string>
#include <vector>

#include "qcc/plan.hpp"
#include "qcc/problem.hpp"

namespace qcc::test {

inline CompilationProblem make_problem(std::vector<QPair> edges, int n_states,
                                       int p = 1,
                                       const std::string& hw_name = "N8") {
    MaxCutInstance inst;
    inst.n_states = n_states;
    std::sort(edges.begin(), edges.end());
    inst.edges = std::move(edges);
    return build_problem(inst, preset(hw_name), p, AssignMode::Identity, 0);
}

// the 6-vertex example instance: qstates q1,q3..q7 (q2, q8 unused), 6 edges,
// q5's goals being {q1,q5} and {q5,q6}
inline CompilationProblem fig2_problem(int p) {
    return make_problem({QPair(0, 2), QPair(0, 3), QPair(0, 4), QPair(2, 6),
                         QPair(3, 5), QPair(4, 5)},
                        8, p);
}

inline ScheduledAction act(const CompilationProblem& prob, std::int64_t start,
                           GateKind kind, const std::string& qa,
                           const std::string& qb, int sa, int sb, int level = 1) {
    ScheduledAction a;
    a.start = start;
    a.kind = kind;
    a.qubits[0] = prob.hardware.index_of(qa);
    a.qubits[1] = qb.empty() ? ScheduledAction::kNone : prob.hardware.index_of(qb);
    a.qstates[0] = sa;
    a.qstates[1] = sb;
    a.level = kind == GateKind::Swap ? 0 : level;
    if (kind == GateKind::Mix) {
        a.duration = prob.hardware.mix_duration(a.qubits[0]);
    } else {
        const EdgeGate* g = prob.hardware.find_gate(a.qubits[0], a.qubits[1], kind);
        a.duration = g != nullptr ? g->duration : 1;
    }
    a.canonicalize();
    return a;
}

// the worked single-goal sequence: two parallel swaps, one more swap, then
// the duration-4 gate at (n2,n3); ends at 2*2+4 = 8
inline TemporalPlan eq1_plan(const CompilationProblem& prob) {
    TemporalPlan plan;
    plan.actions = {
        act(prob, 0, GateKind::Swap, "n4", "n1", 3, 0),
        act(prob, 0, GateKind::Swap, "n2", "n3", 1, 2),
        act(prob, 2, GateKind::Swap, "n1", "n2", 3, 2),
        act(prob, 4, GateKind::PS, "n2", "n3", 3, 1),
    };
    return plan;
}

inline CompilationProblem eq1_problem() {
    return make_problem({QPair(1, 3)}, 4);  // single goal {q2,q4}
}

}  // namespace qcc::test
