#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace qcc {

enum class GateKind { Swap, PS, Mix };

std::string to_string(GateKind kind);

/// One 2-qubit gate attached to an unordered qubit pair. Gates are symmetric;
/// endpoints are stored with a < b in canonical qubit order.
struct EdgeGate {
    int a = 0;
    int b = 0;
    GateKind kind = GateKind::Swap;
    int duration = 1;  // clock cycles, >= 1

    friend bool operator==(const EdgeGate&, const EdgeGate&) = default;
};

/// Duration-weighted labeled multigraph of qubits and gates. A qubit pair may
/// carry at most one SWAP and at most one PS gate (both allowed). Immutable
/// after construction; safe to share across planner workers.
class HardwareGraph {
public:
    HardwareGraph() = default;  // empty chip; placeholder before assignment

    /// Builds and checks all invariants. `names` need not be sorted; it is
    /// canonicalized (lexicographic). Edge endpoints are given by name.
    /// `mix` maps qubit name -> mix duration; names absent from the map get
    /// `default_mix`.
    HardwareGraph(std::vector<std::string> names,
                  const std::vector<std::tuple<std::string, std::string, GateKind, int>>& gates,
                  int default_mix,
                  const std::map<std::string, int>& mix = {});

    int num_qubits() const { return static_cast<int>(names_.size()); }
    /// Canonical (lexicographically sorted) qubit names; index order is the
    /// canonical order used everywhere else.
    const std::vector<std::string>& qubit_names() const { return names_; }
    const std::string& name(int q) const { return names_.at(q); }
    int index_of(const std::string& name) const;  // throws on unknown qubit

    const std::vector<EdgeGate>& edges() const { return edges_; }
    int mix_duration(int q) const { return mix_.at(q); }

    /// Gate lookup for an unordered pair; returns nullptr if absent.
    const EdgeGate* find_gate(int a, int b, GateKind kind) const;

    /// Qubits sharing an edge of the given kind with q. kind must be Swap or PS.
    std::set<int> neighbors(int q, GateKind kind) const;

    /// Shortest path in the SWAP subgraph, ties broken by lexicographically
    /// smallest name sequence. Returns {hops, path}; path includes endpoints.
    std::pair<int, std::vector<int>> swap_distance(int from, int to) const;
    /// Hops only, from the precomputed all-pairs table.
    int swap_hops(int from, int to) const { return dist_[from][to]; }

    friend bool operator==(const HardwareGraph&, const HardwareGraph&) = default;

private:
    std::vector<std::string> names_;
    std::vector<EdgeGate> edges_;          // canonical order: (a, b, kind)
    std::vector<int> mix_;                 // per qubit
    std::vector<std::vector<int>> adj_;    // swap adjacency, sorted
    std::vector<std::vector<int>> dist_;   // all-pairs swap hops
};

/// Parses the JSON hardware format (keys: qubits, edges, mix_duration);
/// throws std::runtime_error naming the violated invariant on bad input.
HardwareGraph load_hardware(const std::string& spec_text);

/// Canonical serialization; load_hardware(save_hardware(g)) == g.
std::string save_hardware(const HardwareGraph& g);

/// Built-in chips: "N8", "N21", "N40". 8-qubit rings tiled into a lattice,
/// every edge carrying SWAP (duration 2) and PS (duration 3 or 4), mix
/// duration 1 everywhere. Backed by the data files shipped under data/.
HardwareGraph preset(const std::string& name);

/// Raw JSON text of a preset data file (what preset() parses).
const std::string& preset_text(const std::string& name);

}  // namespace qcc
