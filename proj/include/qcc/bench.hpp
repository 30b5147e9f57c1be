#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qcc/planner.hpp"
#include "qcc/problem.hpp"

namespace qcc {

/// Batch experiment configuration. One row is produced per
/// (size, utilization, p, seed) cell, in config order.
struct BenchConfig {
    std::vector<int> sizes = {8};
    std::vector<double> utilizations = {0.9, 1.0};
    std::vector<int> ps = {1};
    std::uint64_t seed0 = 1;
    int seeds_per_cell = 50;
    Budget budget = Budget::iterations(50);
    AssignMode assign = AssignMode::Random;
    int threads = 0;  // 0: QCC_THREADS env or hardware concurrency
};

struct BenchRow {
    int size = 0;
    double utilization = 0;
    int p = 0;
    std::uint64_t seed = 0;
    std::int64_t makespan = -1;  // -1 on failure
    bool proved_optimal = false;
    double wall_time = 0;
    int actions = 0;
    bool valid = false;
    std::string error;
};

/// generate -> build -> anytime_compile -> validate for every cell. Failures
/// become rows, never abort the batch. Row order follows the config
/// regardless of worker completion order.
std::vector<BenchRow> run_bench(const BenchConfig& config);

/// CSV with header size,u,p,seed,makespan,proved_optimal,wall_time,actions.
std::string bench_csv(const std::vector<BenchRow>& rows);
std::vector<BenchRow> parse_bench_csv(const std::string& text);

}  // namespace qcc
