#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qcc/hardware.hpp"
#include "qcc/ratio.hpp"

namespace qcc {

/// One scheduled gate application. Two-qubit kinds fill both slots; MIX uses
/// slot 0 only. `qstates[i]` is the qstate claimed to sit on `qubits[i]` at
/// start (kNone for an empty qubit under a SWAP). `level` is the QAOA level
/// for PS, and for MIX the level whose goals it closes; 0 for SWAP.
struct ScheduledAction {
    static constexpr int kNone = -1;

    Ratio start;
    Ratio duration;
    GateKind kind = GateKind::Swap;
    int qubits[2] = {kNone, kNone};
    int qstates[2] = {kNone, kNone};
    int level = 0;

    Ratio end() const { return start + duration; }
    int arity() const { return kind == GateKind::Mix ? 1 : 2; }

    /// Slot order is canonical: ascending qubit index, qstates aligned.
    void canonicalize() {
        if (arity() == 2 && qubits[0] > qubits[1]) {
            std::swap(qubits[0], qubits[1]);
            std::swap(qstates[0], qstates[1]);
        }
    }

    friend bool operator==(const ScheduledAction&, const ScheduledAction&) = default;
};

struct TemporalPlan {
    std::vector<ScheduledAction> actions;

    Ratio makespan() const {
        Ratio m = 0;
        for (const auto& a : actions) m = Ratio::max(m, a.end());
        return m;
    }

    friend bool operator==(const TemporalPlan&, const TemporalPlan&) = default;
};

struct CompilationProblem;  // see problem.hpp

/// Renders a plan in the IPC temporal plan format consumed by parse_plan:
/// one `<start>: (<name> <args...>) [<dur>]` line per action. The inverse of
/// pddl.hpp's parse_plan for any plan expressible in the action naming scheme.
std::string render_plan(const TemporalPlan& plan, const CompilationProblem& problem);

}  // namespace qcc
