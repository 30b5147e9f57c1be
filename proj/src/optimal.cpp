#include <algorithm>
#include <string>
#include <tuple>
#include <unordered_map>

#include "qcc/planner.hpp"
#include "qcc/validator.hpp"
#include "bounds.hpp"
#include "exec.hpp"

namespace qcc {

namespace {

using detail::Exec;

// Branch-and-bound over timed action sequences. Every node schedules its
// action at the earliest feasible time, which is complete for makespan
// optimization: any plan can be left-shifted onto such a sequence without
// growing the makespan.
struct BranchAndBound {
    const CompilationProblem& prob;
    const SearchLimits limits;
    int m;                                   // instance edge count
    std::vector<std::vector<int>> goals_of;  // qstate -> edge indices
    std::vector<bool> relevant;              // qstate carries a goal

    std::int64_t incumbent_ms = INT64_MAX;
    TemporalPlan incumbent;
    bool clipped = false;        // a limit cut a subtree that might hide a better plan
    bool out_of_budget = false;
    std::uint64_t nodes = 0;
    // key -> Pareto front of resource vectors (qubit free times, mix ends,
    // goal ends); only pointwise dominance may prune, otherwise a later
    // makespan could still win by backfilling idle qubits
    std::unordered_map<std::string, std::vector<std::vector<std::int64_t>>> seen;

    explicit BranchAndBound(const CompilationProblem& p, const SearchLimits& lim)
        : prob(p), limits(lim), m(static_cast<int>(p.instance.edges.size())) {
        goals_of.resize(p.instance.n_states);
        for (int e = 0; e < m; ++e) {
            goals_of[p.instance.edges[e].a].push_back(e);
            goals_of[p.instance.edges[e].b].push_back(e);
        }
        relevant = p.used_qstates();
    }

    bool achieved(const Exec& ex, int level, int e) const {
        return ex.goal_end.count({level, prob.instance.edges[e]}) > 0;
    }

    bool complete(const Exec& ex) const {
        for (int level = 1; level <= prob.p; ++level)
            for (int e = 0; e < m; ++e)
                if (!achieved(ex, level, e)) return false;
        for (int s = 0; s < prob.instance.n_states; ++s)
            if (relevant[s] && ex.mix_count[s] < prob.p - 1) return false;
        return true;
    }

    std::int64_t bound(const Exec& ex) const {
        detail::BoundInput in;
        in.prob = &prob;
        in.location = ex.location;
        in.avail.resize(prob.instance.n_states);
        for (int s = 0; s < prob.instance.n_states; ++s)
            in.avail[s] = ex.free_at[ex.location[s]];
        in.mix_count = ex.mix_count;
        in.achieved.assign(static_cast<std::size_t>(m) * prob.p, false);
        for (int level = 1; level <= prob.p; ++level)
            for (int e = 0; e < m; ++e)
                in.achieved[(level - 1) * m + e] = achieved(ex, level, e);
        return std::max(ex.makespan(), detail::makespan_lower_bound(in));
    }

    // Dominance key: placement of goal-relevant qstates, achieved goals,
    // mix progress.
    std::string key(const Exec& ex) const {
        std::string k;
        k.reserve(static_cast<std::size_t>(prob.instance.n_states) + m * prob.p + 8);
        for (int s = 0; s < prob.instance.n_states; ++s)
            if (relevant[s]) {
                k.push_back(static_cast<char>(ex.location[s]));
                k.push_back(static_cast<char>(ex.mix_count[s]));
            }
        for (int level = 1; level <= prob.p; ++level)
            for (int e = 0; e < m; ++e)
                k.push_back(achieved(ex, level, e) ? '1' : '0');
        return k;
    }

    std::vector<std::int64_t> resources(const Exec& ex) const {
        std::vector<std::int64_t> r = ex.free_at;
        r.insert(r.end(), ex.mix_end.begin(), ex.mix_end.end());
        for (int level = 1; level <= prob.p; ++level)
            for (int e = 0; e < m; ++e) {
                auto it = ex.goal_end.find({level, prob.instance.edges[e]});
                r.push_back(it == ex.goal_end.end() ? 0 : it->second);
            }
        return r;
    }

    // true if the state is dominated by a stored one; otherwise stores it
    bool dominated(const Exec& ex) {
        auto& front = seen[key(ex)];
        const std::vector<std::int64_t> r = resources(ex);
        for (const auto& s : front) {
            bool le = true;
            for (std::size_t i = 0; i < r.size(); ++i)
                if (s[i] > r[i]) {
                    le = false;
                    break;
                }
            if (le) return true;
        }
        std::erase_if(front, [&](const std::vector<std::int64_t>& s) {
            for (std::size_t i = 0; i < r.size(); ++i)
                if (r[i] > s[i]) return false;
            return true;
        });
        front.push_back(r);
        return false;
    }

    std::vector<Exec> children(const Exec& ex) const {
        std::vector<Exec> out;
        // goal-achieving phase separations
        for (int e = 0; e < m; ++e) {
            int level = 1;
            while (level <= prob.p && achieved(ex, level, e)) ++level;
            if (level > prob.p) continue;
            const QPair pair = prob.instance.edges[e];
            if (level >= 2 && (ex.mix_count[pair.a] < level - 1 ||
                               ex.mix_count[pair.b] < level - 1))
                continue;
            const int want =
                prob.goal_durations.empty() ? 0 : prob.goal_durations[e];
            for (const auto& g : prob.hardware.edges()) {
                if (g.kind != GateKind::PS) continue;
                if (want != 0 && g.duration != want) continue;
                const bool fwd = ex.occupant[g.a] == pair.a && ex.occupant[g.b] == pair.b;
                const bool rev = ex.occupant[g.a] == pair.b && ex.occupant[g.b] == pair.a;
                if (!fwd && !rev) continue;
                Exec child = ex;
                child.do_ps(g.a, g.b, level);
                out.push_back(std::move(child));
            }
        }
        // mixes
        for (int s = 0; s < prob.instance.n_states; ++s) {
            if (!relevant[s]) continue;
            const int k = ex.mix_count[s] + 1;
            if (k > prob.p - 1) continue;
            bool ready = true;
            for (int e : goals_of[s])
                if (!achieved(ex, k, e)) ready = false;
            if (!ready) continue;
            Exec child = ex;
            child.do_mix(s, k);
            out.push_back(std::move(child));
        }
        // swaps touching at least one goal-relevant qstate; swaps between
        // interchangeable occupants (goal-less or empty) never help
        for (const auto& g : prob.hardware.edges()) {
            if (g.kind != GateKind::Swap) continue;
            const int oa = ex.occupant[g.a];
            const int ob = ex.occupant[g.b];
            const bool rel_a = oa != ScheduledAction::kNone && relevant[oa];
            const bool rel_b = ob != ScheduledAction::kNone && relevant[ob];
            if (!rel_a && !rel_b) continue;
            Exec child = ex;
            child.swap_step(g.a, g.b);
            out.push_back(std::move(child));
        }
        return out;
    }

    void dfs(const Exec& ex) {
        if (out_of_budget) return;
        if (++nodes > limits.node_budget) {
            out_of_budget = true;
            return;
        }
        const std::int64_t lb = bound(ex);
        if (lb >= incumbent_ms) return;
        if (lb > limits.max_makespan) {
            clipped = true;
            return;
        }
        if (complete(ex)) {
            incumbent_ms = ex.makespan();
            incumbent = ex.plan;
            return;
        }
        if (static_cast<int>(ex.plan.actions.size()) >= limits.max_actions) {
            clipped = true;
            return;
        }
        if (dominated(ex)) return;

        std::vector<Exec> kids = children(ex);
        std::vector<std::pair<std::int64_t, std::size_t>> order(kids.size());
        for (std::size_t i = 0; i < kids.size(); ++i) order[i] = {bound(kids[i]), i};
        std::stable_sort(order.begin(), order.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        for (const auto& [lbk, i] : order) dfs(kids[i]);
    }
};

}  // namespace

OptimalResult optimal_compile(const CompilationProblem& problem,
                              const SearchLimits& limits) {
    BranchAndBound bb(problem, limits);

    // greedy incumbent tightens the bound from the start
    TemporalPlan seed_plan = greedy_compile(problem, 0);
    const Ratio seed_ms = seed_plan.makespan();
    bb.incumbent = seed_plan;
    bb.incumbent_ms = seed_ms.num / seed_ms.den;

    Exec root;
    root.init(problem);
    bb.dfs(root);

    OptimalResult out;
    out.plan = bb.incumbent;
    out.nodes = bb.nodes;
    out.proved_optimal = !bb.out_of_budget && !bb.clipped;
    if (!validate(out.plan, problem).valid)
        throw std::logic_error("optimal_compile produced an invalid plan");
    return out;
}

}  // namespace qcc
