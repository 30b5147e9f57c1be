#include "qcc/bench.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "qcc/validator.hpp"

namespace qcc {

namespace {

int worker_count(int requested, std::size_t jobs) {
    int n = requested;
    if (n <= 0) {
        if (const char* env = std::getenv("QCC_THREADS")) n = std::atoi(env);
    }
    if (n <= 0) n = static_cast<int>(std::thread::hardware_concurrency());
    if (n <= 0) n = 1;
    return static_cast<int>(std::min<std::size_t>(n, jobs == 0 ? 1 : jobs));
}

BenchRow run_cell(const BenchConfig& cfg, int size, double u, int p,
                  std::uint64_t seed) {
    BenchRow row;
    row.size = size;
    row.utilization = u;
    row.p = p;
    row.seed = seed;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        MaxCutInstance inst = generate_instance(size, u, seed);
        std::string name = "N" + std::to_string(size);
        CompilationProblem prob = build_problem(inst, preset(name), p, cfg.assign, seed);
        AnytimeResult res = anytime_compile(prob, seed, cfg.budget);
        ValidationReport rep = validate(res.plan, prob);
        const Ratio ms = res.plan.makespan();
        row.makespan = ms.num / ms.den;
        row.actions = static_cast<int>(res.plan.actions.size());
        row.valid = rep.valid;
        if (!rep.valid) row.error = "plan failed validation";
    } catch (const std::exception& e) {
        row.error = e.what();
    }
    row.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return row;
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchConfig& config) {
    struct Cell {
        int size;
        double u;
        int p;
        std::uint64_t seed;
    };
    std::vector<Cell> cells;
    for (int size : config.sizes)
        for (double u : config.utilizations)
            for (int p : config.ps)
                for (int k = 0; k < config.seeds_per_cell; ++k)
                    cells.push_back({size, u, p, config.seed0 + static_cast<std::uint64_t>(k)});

    std::vector<BenchRow> rows(cells.size());
    const int threads = worker_count(config.threads, cells.size());
    if (threads <= 1) {
        for (std::size_t i = 0; i < cells.size(); ++i)
            rows[i] = run_cell(config, cells[i].size, cells[i].u, cells[i].p,
                               cells[i].seed);
        return rows;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < cells.size();
                 i = next.fetch_add(1))
                rows[i] = run_cell(config, cells[i].size, cells[i].u, cells[i].p,
                                   cells[i].seed);
        });
    for (auto& th : pool) th.join();
    return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
    std::ostringstream out;
    out << "size,u,p,seed,makespan,proved_optimal,wall_time,actions\n";
    for (const auto& r : rows) {
        std::ostringstream u;
        u << r.utilization;
        out << r.size << "," << u.str() << "," << r.p << "," << r.seed << ","
            << r.makespan << "," << (r.proved_optimal ? 1 : 0) << "," << r.wall_time
            << "," << r.actions << "\n";
    }
    return out.str();
}

std::vector<BenchRow> parse_bench_csv(const std::string& text) {
    std::vector<BenchRow> rows;
    std::istringstream in(text);
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (header) {
            header = false;
            continue;
        }
        std::istringstream ls(line);
        std::string tok;
        std::vector<std::string> f;
        while (std::getline(ls, tok, ',')) f.push_back(tok);
        if (f.size() != 8) throw std::runtime_error("bench csv: bad row '" + line + "'");
        BenchRow r;
        r.size = std::stoi(f[0]);
        r.utilization = std::stod(f[1]);
        r.p = std::stoi(f[2]);
        r.seed = std::stoull(f[3]);
        r.makespan = std::stoll(f[4]);
        r.proved_optimal = f[5] == "1";
        r.wall_time = std::stod(f[6]);
        r.actions = std::stoi(f[7]);
        r.valid = r.makespan >= 0;
        rows.push_back(r);
    }
    return rows;
}

}  // namespace qcc
