#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "qcc/bench.hpp"
#include "qcc/gantt.hpp"
#include "qcc/pddl.hpp"
#include "qcc/planner.hpp"
#include "qcc/validator.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

qcc::HardwareGraph hardware_from(const std::string& ref) {
    if (ref == "N8" || ref == "N21" || ref == "N40") return qcc::preset(ref);
    return qcc::load_hardware(slurp(ref));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qcc - QAOA circuit compilation toolkit"};
    app.require_subcommand(1);

    // gen ------------------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "generate a random compilation problem");
    int gen_size = 8;
    double gen_u = 1.0;
    std::uint64_t gen_seed = 1;
    int gen_p = 1;
    std::string gen_assign = "random", gen_hw = "", gen_out = "-";
    bool gen_inline = false;
    gen->add_option("--size", gen_size, "chip size / edge count (8, 21 or 40)");
    gen->add_option("--u", gen_u, "utilization (0.9 or 1.0)");
    gen->add_option("--seed", gen_seed, "generator seed");
    gen->add_option("--p", gen_p, "QAOA level count");
    gen->add_option("--assign", gen_assign, "identity|random");
    gen->add_option("--hardware", gen_hw, "preset name or hardware file (default N<size>)");
    gen->add_flag("--inline-hardware", gen_inline, "embed hardware into the problem file");
    gen->add_option("--out,-o", gen_out, "output file (default stdout)");

    // compile --------------------------------------------------------------
    auto* compile = app.add_subcommand("compile", "compile a problem to a plan");
    std::string c_problem, c_out = "-", c_budget = "200";
    std::uint64_t c_seed = 1;
    bool c_optimal = false;
    compile->add_option("--problem", c_problem, "problem file")->required();
    compile->add_option("--seed", c_seed, "search seed");
    compile->add_option("--budget", c_budget, "iterations (e.g. 500) or seconds (e.g. 5s)");
    compile->add_flag("--optimal", c_optimal, "exhaustive branch-and-bound (tiny instances)");
    compile->add_option("--out,-o", c_out, "plan file (default stdout)");

    // emit-pddl -------------------------------------------------------------
    auto* ep = app.add_subcommand("emit-pddl", "write PDDL 2.1 domain/problem files");
    std::string ep_problem, ep_variant = "negative", ep_dom = "domain.pddl",
                ep_prob = "problem.pddl";
    ep->add_option("--problem", ep_problem, "problem file")->required();
    ep->add_option("--variant", ep_variant, "negative|positive");
    ep->add_option("--domain-out", ep_dom, "domain output path");
    ep->add_option("--problem-out", ep_prob, "problem output path");

    // check ------------------------------------------------------------------
    auto* check = app.add_subcommand("check", "validate an externally produced plan");
    std::string k_problem, k_plan, k_report;
    check->add_option("--problem", k_problem, "problem file")->required();
    check->add_option("--plan", k_plan, "plan file (IPC format)")->required();
    check->add_option("--report", k_report, "write the JSON validation report here");

    // score ------------------------------------------------------------------
    auto* score = app.add_subcommand("score", "IPC plan-quality score");
    double s_best = 0, s_cand = 0;
    std::vector<std::string> s_csv;
    score->add_option("--best", s_best, "reference makespan");
    score->add_option("--candidate", s_cand, "candidate makespan");
    score->add_option("--csv", s_csv, "bench CSVs; per-class mean scores vs per-seed best");

    // gantt ------------------------------------------------------------------
    auto* gt = app.add_subcommand("gantt", "render a plan as a Gantt chart");
    std::string g_problem, g_plan, g_format = "text", g_out = "-";
    gt->add_option("--problem", g_problem, "problem file")->required();
    gt->add_option("--plan", g_plan, "plan file")->required();
    gt->add_option("--format", g_format, "text|svg");
    gt->add_option("--out,-o", g_out, "output file (default stdout)");

    // bench ------------------------------------------------------------------
    auto* bench = app.add_subcommand("bench", "run a reproducible benchmark batch");
    std::vector<int> b_sizes = {8};
    std::vector<double> b_us = {0.9, 1.0};
    std::vector<int> b_ps = {1};
    int b_seeds = 50;
    std::uint64_t b_seed0 = 1;
    std::string b_budget = "50", b_assign = "random", b_out = "-";
    int b_threads = 0;
    bench->add_option("--sizes", b_sizes, "chip sizes")->delimiter(',');
    bench->add_option("--u", b_us, "utilizations")->delimiter(',');
    bench->add_option("--p", b_ps, "QAOA levels")->delimiter(',');
    bench->add_option("--seeds", b_seeds, "seeds per (size,u,p) cell");
    bench->add_option("--seed0", b_seed0, "first seed");
    bench->add_option("--budget", b_budget, "per-instance budget (iterations or e.g. 2s)");
    bench->add_option("--assign", b_assign, "identity|random");
    bench->add_option("--threads", b_threads, "worker cap (QCC_THREADS also honored)");
    bench->add_option("--out,-o", b_out, "CSV output (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            qcc::MaxCutInstance inst = qcc::generate_instance(gen_size, gen_u, gen_seed);
            std::string hw_ref = gen_hw.empty() ? "N" + std::to_string(gen_size) : gen_hw;
            qcc::CompilationProblem prob = qcc::build_problem(
                inst, hardware_from(hw_ref), gen_p,
                gen_assign == "identity" ? qcc::AssignMode::Identity
                                         : qcc::AssignMode::Random,
                gen_seed);
            emit(gen_out, qcc::save_problem(prob, gen_inline ? "" : hw_ref));
            return 0;
        }
        if (*compile) {
            qcc::CompilationProblem prob = qcc::load_problem(slurp(c_problem));
            qcc::TemporalPlan plan;
            bool proved = false;
            if (c_optimal) {
                qcc::OptimalResult res = qcc::optimal_compile(prob);
                plan = res.plan;
                proved = res.proved_optimal;
            } else {
                plan = qcc::anytime_compile(prob, c_seed, qcc::Budget::parse(c_budget)).plan;
            }
            const bool ok = qcc::validate(plan, prob).valid;
            emit(c_out, qcc::render_plan(plan, prob));
            std::cerr << "makespan " << plan.makespan().to_decimal() << " actions "
                      << plan.actions.size() << (proved ? " (proved optimal)" : "")
                      << (ok ? "" : " INVALID") << "\n";
            return ok ? 0 : 1;
        }
        if (*ep) {
            qcc::CompilationProblem prob = qcc::load_problem(slurp(ep_problem));
            const auto variant = ep_variant == "positive" ? qcc::PddlVariant::Positive
                                                          : qcc::PddlVariant::Negative;
            emit(ep_dom, qcc::emit_domain(prob, variant));
            emit(ep_prob, qcc::emit_problem(prob, variant));
            return 0;
        }
        if (*check) {
            qcc::CompilationProblem prob = qcc::load_problem(slurp(k_problem));
            qcc::TemporalPlan plan = qcc::parse_plan(slurp(k_plan), prob);
            qcc::ValidationReport rep = qcc::validate(plan, prob);
            if (!k_report.empty()) emit(k_report, rep.to_json());
            std::cout << (rep.valid ? "valid" : "INVALID") << ", makespan "
                      << rep.plan_makespan.to_decimal() << "\n";
            for (const auto& v : rep.violations)
                std::cout << "  " << qcc::to_string(v.kind) << " @" << v.time.to_decimal()
                          << " action " << v.action << ": " << v.message << "\n";
            return rep.valid ? 0 : 1;
        }
        if (*score) {
            if (!s_csv.empty()) {
                // best makespan per (size,u,p,seed) across all files, then
                // per-class mean of best/candidate for each file
                std::map<std::tuple<int, double, int, std::uint64_t>, std::int64_t> best;
                std::vector<std::vector<qcc::BenchRow>> all;
                for (const auto& f : s_csv) all.push_back(qcc::parse_bench_csv(slurp(f)));
                for (const auto& rows : all)
                    for (const auto& r : rows) {
                        if (r.makespan <= 0) continue;
                        auto key = std::make_tuple(r.size, r.utilization, r.p, r.seed);
                        auto it = best.find(key);
                        if (it == best.end() || r.makespan < it->second)
                            best[key] = r.makespan;
                    }
                for (std::size_t f = 0; f < all.size(); ++f) {
                    std::map<std::tuple<int, double, int>, std::pair<double, int>> acc;
                    for (const auto& r : all[f]) {
                        if (r.makespan <= 0) continue;
                        auto key = std::make_tuple(r.size, r.utilization, r.p);
                        const auto b = best.at({r.size, r.utilization, r.p, r.seed});
                        acc[key].first += qcc::ipc_score(static_cast<double>(b),
                                                         static_cast<double>(r.makespan));
                        acc[key].second += 1;
                    }
                    for (const auto& [key, sum] : acc)
                        std::cout << s_csv[f] << " N" << std::get<0>(key) << " u"
                                  << std::get<1>(key) << " p" << std::get<2>(key) << " "
                                  << sum.first / sum.second << "\n";
                }
                return 0;
            }
            std::cout << qcc::ipc_score(s_best, s_cand) << "\n";
            return 0;
        }
        if (*gt) {
            qcc::CompilationProblem prob = qcc::load_problem(slurp(g_problem));
            qcc::TemporalPlan plan = qcc::parse_plan(slurp(g_plan), prob);
            emit(g_out, qcc::gantt(plan, prob,
                                   g_format == "svg" ? qcc::GanttFormat::Svg
                                                     : qcc::GanttFormat::Text));
            return 0;
        }
        if (*bench) {
            qcc::BenchConfig cfg;
            cfg.sizes = b_sizes;
            cfg.utilizations = b_us;
            cfg.ps = b_ps;
            cfg.seeds_per_cell = b_seeds;
            cfg.seed0 = b_seed0;
            cfg.budget = qcc::Budget::parse(b_budget);
            cfg.assign = b_assign == "identity" ? qcc::AssignMode::Identity
                                                : qcc::AssignMode::Random;
            cfg.threads = b_threads;
            const auto rows = qcc::run_bench(cfg);
            emit(b_out, qcc::bench_csv(rows));
            bool all_valid = true;
            for (const auto& r : rows)
                if (!r.valid) {
                    all_valid = false;
                    std::cerr << "seed " << r.seed << " N" << r.size << " u"
                              << r.utilization << " p" << r.p << ": "
                              << (r.error.empty() ? "invalid" : r.error) << "\n";
                }
            return all_valid ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
