#pragma once

#include <string>

#include "qcc/plan.hpp"
#include "qcc/problem.hpp"

namespace qcc {

enum class PddlVariant { Negative, Positive };

/// Emits the PDDL 2.1 domain for a compilation problem: one durative action
/// per SWAP edge, per PS edge per level, and (for levels below p) one MIX
/// action per goal-carrying qstate per qubit. Qubit locations are embedded in
/// action names (swap_1_2, P-S_1stPhaseSeparation_at_6-7, mix_q5_at_1), so
/// grounding scales as N^2 * |E| for the 2-qubit actions. The Positive
/// variant replaces negated conditions with dummy complement predicates
/// (not_mixed, not_GOAL_PSi) for planners without :negative-preconditions.
std::string emit_domain(const CompilationProblem& problem, PddlVariant variant);

/// Emits the matching problem file: initial located_at facts, the goal
/// conjunction (all GOAL_PSi facts, plus mixed facts for used qstates when
/// p > 1), and the minimize total-time metric.
std::string emit_problem(const CompilationProblem& problem, PddlVariant variant);

/// Parses an IPC temporal plan (lines `<start>: (<name> <args...>) [<dur>]`,
/// `;` comments) against the naming scheme of the emitted domain. Action
/// names are matched case-insensitively. Start times and durations within
/// 1e-3 of an integer are snapped to the clock grid; other fractions are kept
/// exact. Throws std::runtime_error with a line number on syntax errors,
/// unknown action names, or arity mismatches.
TemporalPlan parse_plan(const std::string& text, const CompilationProblem& problem);

}  // namespace qcc
