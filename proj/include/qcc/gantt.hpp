#pragma once

#include <string>

#include "qcc/plan.hpp"
#include "qcc/problem.hpp"

namespace qcc {

enum class GanttFormat { Text, Svg };

/// Renders a validated plan as a Gantt chart: one row per qubit, time on the
/// x axis. PS blocks are keyed by goal pair, SWAP blocks are white, MIX
/// blocks are black with the state number, and superfluous gates (those
/// remove_superfluous would delete) are marked with '+'. Refuses invalid
/// plans. The text chart is exactly makespan columns wide.
std::string gantt(const TemporalPlan& plan, const CompilationProblem& problem,
                  GanttFormat format);

}  // namespace qcc
