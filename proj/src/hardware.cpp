#include "qcc/hardware.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <tuple>

#include <json.hpp>

namespace qcc {

std::string to_string(GateKind kind) {
    switch (kind) {
        case GateKind::Swap: return "swap";
        case GateKind::PS: return "ps";
        case GateKind::Mix: return "mix";
    }
    return "?";
}

HardwareGraph::HardwareGraph(
    std::vector<std::string> names,
    const std::vector<std::tuple<std::string, std::string, GateKind, int>>& gates,
    int default_mix, const std::map<std::string, int>& mix)
    : names_(std::move(names)) {
    std::sort(names_.begin(), names_.end());
    if (std::adjacent_find(names_.begin(), names_.end()) != names_.end())
        throw std::runtime_error("hardware: duplicate qubit id");

    mix_.resize(names_.size(), default_mix);
    for (const auto& [name, dur] : mix) mix_[index_of(name)] = dur;
    for (int d : mix_)
        if (d < 1) throw std::runtime_error("hardware: non-positive mix duration");

    for (const auto& [na, nb, kind, dur] : gates) {
        if (kind == GateKind::Mix)
            throw std::runtime_error("hardware: mix gates are per qubit, not per edge");
        int a = index_of(na), b = index_of(nb);
        if (a == b) throw std::runtime_error("hardware: self-loop edge at " + na);
        if (dur < 1) throw std::runtime_error("hardware: non-positive duration on " + na + "-" + nb);
        edges_.push_back({std::min(a, b), std::max(a, b), kind, dur});
    }
    std::sort(edges_.begin(), edges_.end(), [](const EdgeGate& x, const EdgeGate& y) {
        return std::tie(x.a, x.b, x.kind) < std::tie(y.a, y.b, y.kind);
    });
    for (std::size_t i = 1; i < edges_.size(); ++i) {
        const auto& x = edges_[i - 1];
        const auto& y = edges_[i];
        if (x.a == y.a && x.b == y.b && x.kind == y.kind)
            throw std::runtime_error("hardware: duplicate " + to_string(x.kind) +
                                     " edge " + names_[x.a] + "-" + names_[x.b]);
    }

    adj_.assign(names_.size(), {});
    for (const auto& e : edges_) {
        if (e.kind != GateKind::Swap) continue;
        adj_[e.a].push_back(e.b);
        adj_[e.b].push_back(e.a);
    }
    for (auto& row : adj_) std::sort(row.begin(), row.end());

    // all-pairs swap hops by BFS from each qubit
    const int n = num_qubits();
    dist_.assign(n, std::vector<int>(n, -1));
    for (int s = 0; s < n; ++s) {
        std::queue<int> bfs;
        bfs.push(s);
        dist_[s][s] = 0;
        while (!bfs.empty()) {
            int u = bfs.front();
            bfs.pop();
            for (int v : adj_[u]) {
                if (dist_[s][v] < 0) {
                    dist_[s][v] = dist_[s][u] + 1;
                    bfs.push(v);
                }
            }
        }
        for (int t = 0; t < n; ++t)
            if (dist_[s][t] < 0)
                throw std::runtime_error("hardware: swap subgraph disconnected (" +
                                         names_[s] + " cannot reach " + names_[t] + ")");
    }
}

int HardwareGraph::index_of(const std::string& name) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), name);
    if (it == names_.end() || *it != name)
        throw std::runtime_error("hardware: unknown qubit '" + name + "'");
    return static_cast<int>(it - names_.begin());
}

const EdgeGate* HardwareGraph::find_gate(int a, int b, GateKind kind) const {
    if (a > b) std::swap(a, b);
    for (const auto& e : edges_)
        if (e.a == a && e.b == b && e.kind == kind) return &e;
    return nullptr;
}

std::set<int> HardwareGraph::neighbors(int q, GateKind kind) const {
    if (q < 0 || q >= num_qubits())
        throw std::runtime_error("hardware: unknown qubit index");
    if (kind == GateKind::Mix)
        throw std::invalid_argument("neighbors: kind must be swap or ps");
    std::set<int> out;
    for (const auto& e : edges_) {
        if (e.kind != kind) continue;
        if (e.a == q) out.insert(e.b);
        if (e.b == q) out.insert(e.a);
    }
    return out;
}

std::pair<int, std::vector<int>> HardwareGraph::swap_distance(int from, int to) const {
    if (from < 0 || from >= num_qubits() || to < 0 || to >= num_qubits())
        throw std::runtime_error("hardware: unknown qubit index");
    // Walk from `from`, always taking the lexicographically smallest neighbor
    // name that still decreases the hop count; yields the lex-smallest
    // shortest name sequence because names_ order == index order.
    std::vector<int> path{from};
    int cur = from;
    while (cur != to) {
        for (int v : adj_[cur]) {  // adj_ sorted by index == by name
            if (dist_[v][to] == dist_[cur][to] - 1) {
                cur = v;
                break;
            }
        }
        path.push_back(cur);
    }
    return {dist_[from][to], path};
}

namespace {

using nlohmann::json;

GateKind kind_from(const std::string& s) {
    if (s == "swap") return GateKind::Swap;
    if (s == "ps") return GateKind::PS;
    throw std::runtime_error("hardware: unknown gate kind '" + s + "'");
}

}  // namespace

HardwareGraph load_hardware(const std::string& spec_text) {
    json j;
    try {
        j = json::parse(spec_text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("hardware: parse error: ") + e.what());
    }
    if (!j.is_object() || !j.contains("qubits") || !j.contains("edges") ||
        !j.contains("mix_duration"))
        throw std::runtime_error("hardware: expected keys qubits, edges, mix_duration");

    std::vector<std::string> names = j.at("qubits").get<std::vector<std::string>>();
    std::vector<std::tuple<std::string, std::string, GateKind, int>> gates;
    for (const auto& e : j.at("edges")) {
        const auto a = e.at("a").get<std::string>();
        const auto b = e.at("b").get<std::string>();
        for (const auto& g : e.at("gates"))
            gates.emplace_back(a, b, kind_from(g.at("kind").get<std::string>()),
                               g.at("duration").get<int>());
    }
    int default_mix = 1;
    std::map<std::string, int> mix;
    const auto& md = j.at("mix_duration");
    if (md.is_number_integer()) {
        default_mix = md.get<int>();
    } else if (md.is_object()) {
        mix = md.get<std::map<std::string, int>>();
        default_mix = mix.empty() ? 1 : mix.begin()->second;
        if (mix.size() != names.size())
            throw std::runtime_error("hardware: mix_duration map must cover every qubit");
    } else {
        throw std::runtime_error("hardware: mix_duration must be int or map");
    }
    return HardwareGraph(std::move(names), gates, default_mix, mix);
}

std::string save_hardware(const HardwareGraph& g) {
    json j;
    j["qubits"] = g.qubit_names();
    json edges = json::array();
    // canonical edge order groups the two kinds per pair: ps sorts before swap
    for (std::size_t i = 0; i < g.edges().size();) {
        const auto& e = g.edges()[i];
        json entry;
        entry["a"] = g.name(e.a);
        entry["b"] = g.name(e.b);
        json gates = json::array();
        std::size_t k = i;
        while (k < g.edges().size() && g.edges()[k].a == e.a && g.edges()[k].b == e.b) ++k;
        for (std::size_t t = i; t < k; ++t)
            gates.push_back({{"kind", to_string(g.edges()[t].kind)},
                             {"duration", g.edges()[t].duration}});
        std::sort(gates.begin(), gates.end(), [](const json& x, const json& y) {
            return x.at("kind").get<std::string>() < y.at("kind").get<std::string>();
        });
        entry["gates"] = gates;
        edges.push_back(entry);
        i = k;
    }
    j["edges"] = edges;
    bool uniform = true;
    for (int q = 1; q < g.num_qubits(); ++q)
        if (g.mix_duration(q) != g.mix_duration(0)) uniform = false;
    if (g.num_qubits() > 0 && !uniform) {
        json m;
        for (int q = 0; q < g.num_qubits(); ++q) m[g.name(q)] = g.mix_duration(q);
        j["mix_duration"] = m;
    } else {
        j["mix_duration"] = g.num_qubits() > 0 ? g.mix_duration(0) : 1;
    }
    return j.dump(1) + "\n";
}

}  // namespace qcc
