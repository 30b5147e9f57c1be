#include "qcc/planner.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <stdexcept>
#include <tuple>

#include "qcc/rng.hpp"
#include "qcc/validator.hpp"
#include "bounds.hpp"
#include "exec.hpp"

namespace qcc {

namespace {

using detail::Exec;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Shortest path from `from` to `to` in the swap subgraph, optionally
// avoiding one vertex. Lexicographically smallest among the shortest, or a
// seeded choice among equal hops when perturbing. Empty if unreachable.
std::vector<int> swap_path(const HardwareGraph& hw, int from, int to, int ban,
                           Rng* rng) {
    const int n = hw.num_qubits();
    std::vector<int> dist(n, -1);
    std::vector<int> frontier{to};
    dist[to] = 0;
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int u : frontier)
            for (int v : hw.neighbors(u, GateKind::Swap)) {
                if (v == ban || dist[v] >= 0) continue;
                dist[v] = dist[u] + 1;
                next.push_back(v);
            }
        frontier = std::move(next);
    }
    if (from == ban || dist[from] < 0) return {};
    std::vector<int> path{from};
    int cur = from;
    while (cur != to) {
        std::vector<int> down;
        for (int v : hw.neighbors(cur, GateKind::Swap))
            if (v != ban && dist[v] == dist[cur] - 1) down.push_back(v);
        cur = (rng != nullptr && down.size() > 1) ? down[rng->below(down.size())]
                                                  : down.front();
        path.push_back(cur);
    }
    return path;
}

// Routes the goal pair onto the best conforming PS edge and schedules the
// gate. Both endpoints move toward their slots: the first walks straight in,
// the second walks a path that avoids the parked slot when one of comparable
// length exists, with one fix-up swap if it had to pass through. Static
// paths keep this loop-free; parallelism comes from the earliest-start
// scheduling, not from interleaving the walks. Returns the gate's end time.
std::int64_t route_goal(Exec& ex, const QPair& pair, int level, int required,
                        Rng* rng) {
    const auto& hw = ex.prob->hardware;
    // target choice: fewest total hops, then earliest estimated finish,
    // then lexicographic slot pair
    struct Target {
        int x = -1, y = -1, dur = 0;
        int cost = 1 << 30;
        std::int64_t est = INT64_MAX;
    };
    std::vector<Target> cands;
    for (const auto& g : hw.edges()) {
        if (g.kind != GateKind::PS) continue;
        if (required != 0 && g.duration != required) continue;
        for (int o = 0; o < 2; ++o) {
            Target t;
            t.x = o ? g.b : g.a;
            t.y = o ? g.a : g.b;
            t.dur = g.duration;
            const int ha = hw.swap_hops(ex.location[pair.a], t.x);
            const int hb = hw.swap_hops(ex.location[pair.b], t.y);
            t.cost = ha + hb;
            t.est = std::max(ex.free_at[ex.location[pair.a]] + 2LL * ha,
                             ex.free_at[ex.location[pair.b]] + 2LL * hb) +
                    t.dur;
            cands.push_back(t);
        }
    }
    if (cands.empty())
        throw std::invalid_argument("no ps edge can satisfy goal {" +
                                    qstate_name(pair.a) + "," + qstate_name(pair.b) +
                                    (required ? "} of duration " + std::to_string(required)
                                              : "}"));
    std::sort(cands.begin(), cands.end(), [](const Target& a, const Target& b) {
        return std::tie(a.cost, a.est, a.x, a.y) < std::tie(b.cost, b.est, b.x, b.y);
    });
    std::size_t pick = 0;
    if (rng != nullptr && cands.size() > 1 && rng->below(2) == 0)
        pick = rng->below(std::min<std::size_t>(3, cands.size()));
    const Target tgt = cands[pick];

    // first endpoint straight to its slot
    if (ex.location[pair.a] != tgt.x) {
        const std::vector<int> path = swap_path(hw, ex.location[pair.a], tgt.x, -1, rng);
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            ex.swap_step(path[i], path[i + 1]);
    }
    // second endpoint, keeping off the parked slot unless the detour is long
    if (ex.location[pair.b] != tgt.y) {
        std::vector<int> path = swap_path(hw, ex.location[pair.b], tgt.y, tgt.x, rng);
        const std::vector<int> through =
            swap_path(hw, ex.location[pair.b], tgt.y, -1, rng);
        if (path.empty() || path.size() > through.size() + 1) path = through;
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            ex.swap_step(path[i], path[i + 1]);
        // the walk may have bumped the parked endpoint off its slot
        if (ex.location[pair.a] != tgt.x)
            ex.swap_step(ex.location[pair.a], tgt.x);
    }
    return ex.do_ps(tgt.x, tgt.y, level);
}

// Mixes every endpoint whose current-level goals just completed (p > level).
void mix_ready(Exec& ex, const QPair& pair, int level,
               const std::vector<std::vector<int>>& goals_of) {
    if (level >= ex.prob->p) return;
    for (int s : {pair.a, pair.b}) {
        if (ex.mix_count[s] != level - 1) continue;
        bool done = true;
        for (int e : goals_of[s])
            if (ex.goal_end.count({level, ex.prob->instance.edges[e]}) == 0) done = false;
        if (done) ex.do_mix(s, level);
    }
}

std::vector<std::vector<int>> goals_by_qstate(const CompilationProblem& prob) {
    std::vector<std::vector<int>> out(prob.instance.n_states);
    for (std::size_t e = 0; e < prob.instance.edges.size(); ++e) {
        out[prob.instance.edges[e].a].push_back(static_cast<int>(e));
        out[prob.instance.edges[e].b].push_back(static_cast<int>(e));
    }
    return out;
}

// A goal instance: (level, instance edge index). Candidate orders are flat
// sequences of these, so a p=2 search can interleave levels across pairs.
using GoalSeq = std::vector<std::pair<int, int>>;

// Order-driven executor. Goals are taken in sequence order, skipping over
// entries whose level prerequisites (both endpoints mixed far enough) are
// not met yet; a level-1 entry is always available, so the scan makes
// progress on any sequence.
TemporalPlan compile_ordered(const CompilationProblem& prob, const GoalSeq& seq,
                             Rng* rng) {
    Exec ex;
    ex.init(prob);
    const auto goals_of = goals_by_qstate(prob);
    std::vector<bool> done(seq.size(), false);
    std::size_t remaining = seq.size();
    while (remaining > 0) {
        bool progressed = false;
        for (std::size_t i = 0; i < seq.size(); ++i) {
            if (done[i]) continue;
            const auto [level, e] = seq[i];
            const QPair pair = prob.instance.edges[e];
            if (level >= 2 && (ex.mix_count[pair.a] < level - 1 ||
                               ex.mix_count[pair.b] < level - 1))
                continue;
            const int req = prob.goal_durations.empty() ? 0 : prob.goal_durations[e];
            route_goal(ex, pair, level, req, rng);
            mix_ready(ex, pair, level, goals_of);
            done[i] = true;
            --remaining;
            progressed = true;
            break;
        }
        if (!progressed) throw std::logic_error("goal sequence cannot make progress");
    }
    return std::move(ex.plan);
}

// Distance-greedy executor: at each step takes the unachieved goal with the
// closest pair (ties: earliest simulated finish, then lexicographic pair).
TemporalPlan compile_adaptive(const CompilationProblem& prob, Rng* rng,
                              GoalSeq* realized) {
    Exec ex;
    ex.init(prob);
    const auto goals_of = goals_by_qstate(prob);
    const int m = static_cast<int>(prob.instance.edges.size());
    if (realized) realized->clear();
    for (int level = 1; level <= prob.p; ++level) {
        std::vector<int> pending(m);
        for (int e = 0; e < m; ++e) pending[e] = e;
        while (!pending.empty()) {
            int best_e = -1;
            std::size_t best_i = 0;
            std::tuple<int, std::int64_t, QPair> best_key{1 << 30, INT64_MAX, QPair(0, 1)};
            Exec best_sim;
            for (std::size_t i = 0; i < pending.size(); ++i) {
                const int e = pending[i];
                const QPair pair = prob.instance.edges[e];
                const int d = prob.hardware.swap_hops(ex.location[pair.a],
                                                      ex.location[pair.b]);
                const int req =
                    prob.goal_durations.empty() ? 0 : prob.goal_durations[e];
                Exec sim = ex;  // tentative schedule for the finish-time key
                const std::int64_t fin = route_goal(sim, pair, level, req, nullptr);
                std::tuple<int, std::int64_t, QPair> key{d, fin, pair};
                if (best_e < 0 || key < best_key) {
                    best_key = key;
                    best_e = e;
                    best_i = i;
                    best_sim = std::move(sim);
                }
            }
            if (rng != nullptr && pending.size() > 1 && rng->below(3) == 0) {
                // perturbation: occasionally take a random pending goal instead
                best_i = rng->below(pending.size());
                best_e = pending[best_i];
                const QPair pair = prob.instance.edges[best_e];
                const int req =
                    prob.goal_durations.empty() ? 0 : prob.goal_durations[best_e];
                best_sim = ex;
                route_goal(best_sim, pair, level, req, rng);
            }
            ex = std::move(best_sim);
            mix_ready(ex, prob.instance.edges[best_e], level, goals_of);
            if (realized) realized->emplace_back(level, best_e);
            pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best_i));
        }
    }
    return std::move(ex.plan);
}

std::int64_t plan_makespan_int(const TemporalPlan& plan) {
    const Ratio m = plan.makespan();
    return m.num / m.den;
}

}  // namespace

TemporalPlan greedy_compile(const CompilationProblem& problem, std::uint64_t seed) {
    (void)seed;  // the baseline strategy is deterministic
    return compile_adaptive(problem, nullptr, nullptr);
}

Budget Budget::iterations(std::uint64_t n) {
    Budget b;
    b.kind = Kind::Iterations;
    b.amount = static_cast<double>(n);
    return b;
}

Budget Budget::seconds(double s) {
    Budget b;
    b.kind = Kind::Seconds;
    b.amount = s;
    return b;
}

Budget Budget::parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty budget");
    if (text.back() == 's' && text.find("it") == std::string::npos)
        return seconds(std::stod(text.substr(0, text.size() - 1)));
    std::size_t pos = text.find("it");
    return iterations(std::stoull(pos == std::string::npos ? text : text.substr(0, pos)));
}

namespace {

// One stream of search candidates over a fixed problem. step(i) is a pure
// function of (problem, seed, i, state so far), so runs with the same seed
// are prefixes of each other regardless of the budget.
struct SearchStream {
    const CompilationProblem* prob;
    std::uint64_t seed;
    std::uint64_t salt;
    TemporalPlan best;
    std::int64_t best_makespan = INT64_MAX;
    GoalSeq best_order;

    void consider(const TemporalPlan& cand) {
        const std::int64_t ms = plan_makespan_int(cand);
        if (ms < best_makespan) {
            best_makespan = ms;
            best = cand;
        }
    }

    // returns true if `best` improved
    bool step(std::uint64_t i) {
        const std::int64_t before = best_makespan;
        if (i == 0) {
            TemporalPlan p = compile_adaptive(*prob, nullptr, &best_order);
            consider(p);
            return best_makespan < before;
        }
        Rng rng(mix_seed(seed ^ salt, i));
        switch (i % 3) {
            case 1: {  // perturbed adaptive restart
                GoalSeq order;
                consider(compile_adaptive(*prob, &rng, &order));
                if (best_makespan < before) best_order = order;
                break;
            }
            case 2: {  // fresh random goal order, levels freely interleaved
                GoalSeq order;
                for (int level = 1; level <= prob->p; ++level)
                    for (std::size_t e = 0; e < prob->instance.edges.size(); ++e)
                        order.emplace_back(level, static_cast<int>(e));
                rng.partial_shuffle(order, order.size());
                consider(compile_ordered(*prob, order, &rng));
                if (best_makespan < before) best_order = order;
                break;
            }
            default: {  // mutate the best known order: swap two goals, reroute
                GoalSeq order = best_order;
                if (order.size() >= 2) {
                    std::size_t a = rng.below(order.size());
                    std::size_t b = rng.below(order.size());
                    std::swap(order[a], order[b]);
                }
                if (order.empty()) break;
                consider(compile_ordered(*prob, order, &rng));
                if (best_makespan < before) best_order = order;
                break;
            }
        }
        return best_makespan < before;
    }
};

}  // namespace

AnytimeResult anytime_compile(const CompilationProblem& problem, std::uint64_t seed,
                              const Budget& budget) {
    const auto t0 = Clock::now();
    AnytimeResult out;

    SearchStream main{&problem, seed, 0xa11ce, {}, INT64_MAX, {}};

    // For p >= 2 keep a p=1 sub-search alive: replicating its best plan twice
    // (second half reversed) is a valid p=2 plan and a strong incumbent.
    CompilationProblem sub;
    SearchStream subs{nullptr, seed, 0xa11ce, {}, INT64_MAX, {}};
    const bool layered = problem.p >= 2;
    if (layered) {
        sub = problem;
        sub.p = 1;
        subs.prob = &sub;
    }

    const std::int64_t lb = detail::makespan_lower_bound(detail::root_bound_input(problem));
    const bool iter_mode = budget.kind == Budget::Kind::Iterations;
    const std::uint64_t max_iters =
        iter_mode ? static_cast<std::uint64_t>(std::max(0.0, budget.amount)) : UINT64_MAX;
    // give up after a long stretch without improvement; scales with the
    // instance so large chips keep searching
    const std::uint64_t plateau_cap =
        std::max<std::uint64_t>(800, 60 * problem.instance.edges.size());

    std::uint64_t i = 0;
    std::uint64_t since_improve = 0;
    do {
        bool improved = main.step(i);
        if (layered) {
            if (subs.step(i)) {
                TemporalPlan rr = replicate_reverse(subs.best, problem);
                const std::int64_t before = main.best_makespan;
                main.consider(rr);
                improved = improved || main.best_makespan < before;
            }
        }
        if (improved)
            out.history.emplace_back(seconds_since(t0), main.best_makespan);
        since_improve = improved ? 0 : since_improve + 1;
        ++i;
        if (main.best_makespan <= lb) break;  // provably optimal already
        if (since_improve >= plateau_cap) break;
        if (iter_mode ? i >= max_iters : seconds_since(t0) >= budget.amount) break;
    } while (true);

    out.iterations = i;
    out.plan = main.best;
    if (!validate(out.plan, problem).valid)
        throw std::logic_error("anytime_compile produced an invalid plan");
    return out;
}

TemporalPlan replicate_reverse(const TemporalPlan& p1_plan,
                               const CompilationProblem& p2_problem) {
    if (p2_problem.p != 2)
        throw std::invalid_argument("replicate_reverse: problem must have p = 2");
    for (const auto& a : p1_plan.actions)
        if (a.kind == GateKind::Mix)
            throw std::invalid_argument("replicate_reverse: input plan must be mix-free");

    CompilationProblem p1 = p2_problem;
    p1.p = 1;
    ValidationReport rep = validate(p1_plan, p1);
    if (!rep.valid)
        throw std::invalid_argument("replicate_reverse: input is not a valid p=1 plan");

    const Ratio m1r = p1_plan.makespan();
    if (!m1r.is_integer())
        throw std::invalid_argument("replicate_reverse: input plan must be on the clock grid");
    const std::int64_t m1 = m1r.num;

    TemporalPlan out = p1_plan;
    // one mix per qstate, in parallel at the final locations
    int tau = 0;
    for (int s = 0; s < p2_problem.instance.n_states; ++s)
        tau = std::max(tau, p2_problem.hardware.mix_duration(rep.final_locations[s]));
    for (int s = 0; s < p2_problem.instance.n_states; ++s) {
        ScheduledAction mix;
        mix.start = m1;
        mix.duration = p2_problem.hardware.mix_duration(rep.final_locations[s]);
        mix.kind = GateKind::Mix;
        mix.qubits[0] = rep.final_locations[s];
        mix.qstates[0] = s;
        mix.level = 1;
        out.actions.push_back(mix);
    }
    // the mirrored first half: swaps are self-inverse, PS moves to level 2
    const std::int64_t shift = m1 + tau;
    for (auto it = p1_plan.actions.rbegin(); it != p1_plan.actions.rend(); ++it) {
        ScheduledAction a = *it;
        a.start = Ratio(shift + m1) - it->end();
        if (a.kind == GateKind::PS) {
            a.level = 2;
        } else if (a.kind == GateKind::Swap) {
            std::swap(a.qstates[0], a.qstates[1]);  // occupants at mirrored time
        }
        out.actions.push_back(a);
    }
    return out;
}

}  // namespace qcc
