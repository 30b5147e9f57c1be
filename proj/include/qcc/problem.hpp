#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qcc/hardware.hpp"

namespace qcc {

/// Unordered qstate pair with a < b; the unit of a phase-separation goal.
struct QPair {
    int a = 0;
    int b = 0;
    QPair() = default;
    QPair(int x, int y) : a(x < y ? x : y), b(x < y ? y : x) {}
    friend auto operator<=>(const QPair&, const QPair&) = default;
};

/// A MaxCut instance: `n_states` vertices (qstates, 0-based ids rendered as
/// q1..qN) and a set of edges. `utilization` and `seed` are metadata recording
/// how the instance was generated.
struct MaxCutInstance {
    int n_states = 0;
    std::vector<QPair> edges;  // canonical: sorted, no duplicates, no loops
    std::uint64_t seed = 0;
    double utilization = 1.0;

    friend bool operator==(const MaxCutInstance&, const MaxCutInstance&) = default;
};

/// One required phase-separation gate at a given level. `required_duration`
/// restricts which PS edges may satisfy the goal (0 = any edge); plain QAOA
/// instances never set it.
struct PSGoal {
    int level = 1;
    QPair pair;
    int required_duration = 0;
    friend auto operator<=>(const PSGoal&, const PSGoal&) = default;
};

/// A compilation problem: instance + hardware + level count + initial
/// placement. `initial[s]` is the qubit index holding qstate s at time 0
/// (injective, total).
struct CompilationProblem {
    HardwareGraph hardware;
    MaxCutInstance instance;
    int p = 1;
    std::vector<int> initial;
    /// Optional per-edge PS-duration requirement (parallel to instance.edges
    /// when non-empty); 0 entries mean any duration.
    std::vector<int> goal_durations;

    int required_duration(const QPair& e) const;
    /// Qstates that carry at least one goal.
    std::vector<bool> used_qstates() const;
};

/// Erdos-Renyi G(n, M) benchmark generator: exactly `n_qubits` edges drawn
/// uniformly without replacement over floor(utilization * n_qubits) qstates.
/// Deterministic in `seed`.
MaxCutInstance generate_instance(int n_qubits, double utilization,
                                 std::uint64_t seed);

enum class AssignMode { Identity, Random };

/// Identity assignment maps qstate i to the i-th qubit in canonical order;
/// Random is a seeded uniform injective assignment.
CompilationProblem build_problem(const MaxCutInstance& instance,
                                 HardwareGraph hardware, int p,
                                 AssignMode mode, std::uint64_t seed);

/// One PSGoal per instance edge at the given level (1 <= level <= p).
std::vector<PSGoal> goal_set(const CompilationProblem& problem, int level);

/// Problem file round-trip (JSON; hardware inline, as preset name, or as a
/// {"file": path} reference).
std::string save_problem(const CompilationProblem& problem,
                         const std::string& hardware_ref = "");
CompilationProblem load_problem(const std::string& json_text);

std::string qstate_name(int s);  // "q1" for id 0

}  // namespace qcc
