#include "qcc/problem.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "qcc/rng.hpp"

namespace qcc {

std::string qstate_name(int s) { return "q" + std::to_string(s + 1); }

int CompilationProblem::required_duration(const QPair& e) const {
    if (goal_durations.empty()) return 0;
    for (std::size_t i = 0; i < instance.edges.size(); ++i)
        if (instance.edges[i] == e) return goal_durations[i];
    return 0;
}

std::vector<bool> CompilationProblem::used_qstates() const {
    std::vector<bool> used(instance.n_states, false);
    for (const auto& e : instance.edges) {
        used[e.a] = true;
        used[e.b] = true;
    }
    return used;
}

MaxCutInstance generate_instance(int n_qubits, double utilization,
                                 std::uint64_t seed) {
    if (n_qubits < 2) throw std::invalid_argument("generate_instance: n_qubits < 2");
    if (utilization <= 0.0 || utilization > 1.0)
        throw std::invalid_argument("generate_instance: utilization out of (0,1]");
    const int n_states = static_cast<int>(std::floor(utilization * n_qubits + 1e-9));
    const int n_edges = n_qubits;
    const std::int64_t pairs =
        static_cast<std::int64_t>(n_states) * (n_states - 1) / 2;
    if (pairs < n_edges)
        throw std::invalid_argument("generate_instance: " + std::to_string(n_edges) +
                                    " edges requested but only " + std::to_string(pairs) +
                                    " pairs exist over " + std::to_string(n_states) +
                                    " qstates");

    std::vector<QPair> all;
    all.reserve(static_cast<std::size_t>(pairs));
    for (int i = 0; i < n_states; ++i)
        for (int j = i + 1; j < n_states; ++j) all.emplace_back(i, j);

    Rng rng(mix_seed(seed, 0x67656e));
    rng.partial_shuffle(all, static_cast<std::size_t>(n_edges));
    all.resize(static_cast<std::size_t>(n_edges));
    std::sort(all.begin(), all.end());

    MaxCutInstance inst;
    inst.n_states = n_states;
    inst.edges = std::move(all);
    inst.seed = seed;
    inst.utilization = utilization;
    return inst;
}

CompilationProblem build_problem(const MaxCutInstance& instance,
                                 HardwareGraph hardware, int p, AssignMode mode,
                                 std::uint64_t seed) {
    if (p < 1) throw std::invalid_argument("build_problem: p must be >= 1");
    if (instance.n_states > hardware.num_qubits())
        throw std::invalid_argument("build_problem: instance has " +
                                    std::to_string(instance.n_states) +
                                    " qstates but hardware only " +
                                    std::to_string(hardware.num_qubits()) + " qubits");
    for (const auto& e : instance.edges)
        if (e.a == e.b || e.a < 0 || e.b >= instance.n_states)
            throw std::invalid_argument("build_problem: malformed instance edge");

    CompilationProblem prob;
    prob.instance = instance;
    prob.p = p;
    prob.initial.resize(instance.n_states);
    if (mode == AssignMode::Identity) {
        std::iota(prob.initial.begin(), prob.initial.end(), 0);
    } else {
        std::vector<int> qubits(hardware.num_qubits());
        std::iota(qubits.begin(), qubits.end(), 0);
        Rng rng(mix_seed(seed, 0x706c6163));
        rng.partial_shuffle(qubits, static_cast<std::size_t>(instance.n_states));
        qubits.resize(static_cast<std::size_t>(instance.n_states));
        prob.initial = std::move(qubits);
    }
    prob.hardware = std::move(hardware);
    return prob;
}

std::vector<PSGoal> goal_set(const CompilationProblem& problem, int level) {
    if (level < 1 || level > problem.p)
        throw std::invalid_argument("goal_set: level out of [1, p]");
    std::vector<PSGoal> goals;
    goals.reserve(problem.instance.edges.size());
    for (std::size_t i = 0; i < problem.instance.edges.size(); ++i) {
        PSGoal g;
        g.level = level;
        g.pair = problem.instance.edges[i];
        g.required_duration =
            problem.goal_durations.empty() ? 0 : problem.goal_durations[i];
        goals.push_back(g);
    }
    return goals;
}

namespace {
using nlohmann::json;
}

std::string save_problem(const CompilationProblem& problem,
                         const std::string& hardware_ref) {
    json j;
    if (hardware_ref.empty())
        j["hardware"] = json::parse(save_hardware(problem.hardware));
    else
        j["hardware"] = hardware_ref;
    j["n_states"] = problem.instance.n_states;
    json edges = json::array();
    for (const auto& e : problem.instance.edges) edges.push_back({e.a, e.b});
    j["edges"] = edges;
    j["p"] = problem.p;
    json initial;
    for (int s = 0; s < problem.instance.n_states; ++s)
        initial[qstate_name(s)] = problem.hardware.name(problem.initial[s]);
    j["initial"] = initial;
    j["seed"] = problem.instance.seed;
    j["utilization"] = problem.instance.utilization;
    if (!problem.goal_durations.empty()) j["goal_durations"] = problem.goal_durations;
    return j.dump(1) + "\n";
}

CompilationProblem load_problem(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("problem: parse error: ") + e.what());
    }
    CompilationProblem prob;
    const auto& hw = j.at("hardware");
    if (hw.is_string()) {
        const std::string ref = hw.get<std::string>();
        if (ref == "N8" || ref == "N21" || ref == "N40") {
            prob.hardware = preset(ref);
        } else {
            std::ifstream in(ref);
            if (!in) throw std::runtime_error("problem: cannot open hardware file " + ref);
            std::stringstream ss;
            ss << in.rdbuf();
            prob.hardware = load_hardware(ss.str());
        }
    } else if (hw.is_object() && hw.contains("file")) {
        const std::string path = hw.at("file").get<std::string>();
        std::ifstream in(path);
        if (!in) throw std::runtime_error("problem: cannot open hardware file " + path);
        std::stringstream ss;
        ss << in.rdbuf();
        prob.hardware = load_hardware(ss.str());
    } else {
        prob.hardware = load_hardware(hw.dump());
    }
    prob.instance.n_states = j.at("n_states").get<int>();
    for (const auto& e : j.at("edges"))
        prob.instance.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    std::sort(prob.instance.edges.begin(), prob.instance.edges.end());
    prob.p = j.value("p", 1);
    prob.instance.seed = j.value("seed", std::uint64_t{0});
    prob.instance.utilization = j.value("utilization", 1.0);
    prob.initial.assign(prob.instance.n_states, -1);
    for (const auto& [qs, qb] : j.at("initial").items()) {
        if (qs.size() < 2 || qs[0] != 'q')
            throw std::runtime_error("problem: bad qstate name '" + qs + "'");
        int s = std::stoi(qs.substr(1)) - 1;
        if (s < 0 || s >= prob.instance.n_states)
            throw std::runtime_error("problem: qstate out of range '" + qs + "'");
        prob.initial[s] = prob.hardware.index_of(qb.get<std::string>());
    }
    for (int s = 0; s < prob.instance.n_states; ++s)
        if (prob.initial[s] < 0)
            throw std::runtime_error("problem: initial map misses " + qstate_name(s));
    std::vector<int> seen = prob.initial;
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw std::runtime_error("problem: initial assignment not injective");
    if (j.contains("goal_durations"))
        prob.goal_durations = j.at("goal_durations").get<std::vector<int>>();
    // revalidate through build-style checks
    for (const auto& e : prob.instance.edges)
        if (e.a < 0 || e.b >= prob.instance.n_states || e.a == e.b)
            throw std::runtime_error("problem: malformed edge");
    if (prob.instance.n_states > prob.hardware.num_qubits())
        throw std::runtime_error("problem: instance larger than hardware");
    return prob;
}

}  // namespace qcc
