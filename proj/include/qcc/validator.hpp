#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "qcc/plan.hpp"
#include "qcc/problem.hpp"

namespace qcc {

enum class ViolationKind {
    MutexOverlap,
    WrongEdge,
    WrongDuration,
    GoalUnachieved,
    PrematurePS2,
    PrematureMix,
    DoubleMix,
    DuplicateGoal,
    BadQstateLocation,
};

std::string to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    int action = -1;  // index into plan.actions; -1 for end-of-plan checks
    Ratio time;
    std::string message;
};

/// Result of independently simulating a plan against a problem. The
/// simulation re-derives qstate locations from the initial assignment and
/// only cross-checks the qstates recorded on each action.
struct ValidationReport {
    bool valid = false;
    std::vector<Violation> violations;
    std::map<int, std::set<QPair>> achieved;  // level -> achieved goal pairs
    std::vector<int> final_locations;         // qstate -> qubit
    Ratio plan_makespan;

    std::string to_json() const;
    static ValidationReport from_json(const std::string& text);
};

/// Checks every constraint of the gate model: qubit mutex (half-open
/// intervals), qstate locations, edge/duration legality, per-level PS
/// prerequisites, mix prerequisites, and end-state goal coverage.
/// Problems are reported, never thrown.
ValidationReport validate(const TemporalPlan& plan, const CompilationProblem& problem);

Ratio makespan(const TemporalPlan& plan);

/// Greedily deletes actions whose removal keeps the plan valid: mixes of
/// goal-less qstates first, then cancelling swap pairs, then anything not
/// supporting a goal. Start times are untouched, so the makespan never grows.
/// Idempotent. Throws if the input plan does not validate.
TemporalPlan remove_superfluous(const TemporalPlan& plan,
                                const CompilationProblem& problem);

/// IPC plan-quality score: best / candidate, in (0, 1]. Throws if candidate
/// beats best (the caller's "best" would be stale) or either is non-positive.
double ipc_score(double best_makespan, double candidate_makespan);

}  // namespace qcc
