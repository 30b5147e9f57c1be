#include "qcc/validator.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include <json.hpp>

namespace qcc {

std::string to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::MutexOverlap: return "MUTEX_OVERLAP";
        case ViolationKind::WrongEdge: return "WRONG_EDGE";
        case ViolationKind::WrongDuration: return "WRONG_DURATION";
        case ViolationKind::GoalUnachieved: return "GOAL_UNACHIEVED";
        case ViolationKind::PrematurePS2: return "PREMATURE_PS2";
        case ViolationKind::PrematureMix: return "PREMATURE_MIX";
        case ViolationKind::DoubleMix: return "DOUBLE_MIX";
        case ViolationKind::DuplicateGoal: return "DUPLICATE_GOAL";
        case ViolationKind::BadQstateLocation: return "BAD_QSTATE_LOCATION";
    }
    return "?";
}

Ratio makespan(const TemporalPlan& plan) { return plan.makespan(); }

namespace {

std::string pair_text(const QPair& e) {
    return "{" + qstate_name(e.a) + "," + qstate_name(e.b) + "}";
}

struct Simulator {
    const TemporalPlan& plan;
    const CompilationProblem& prob;
    ValidationReport report;

    std::vector<int> occupant;                       // qubit -> qstate or -1
    std::map<std::pair<int, QPair>, std::vector<int>> ps_done;  // (level,pair) -> durations
    std::vector<int> mix_count;

    Simulator(const TemporalPlan& pl, const CompilationProblem& pr)
        : plan(pl), prob(pr) {}

    void fail(ViolationKind kind, int action, const Ratio& t, std::string msg) {
        report.violations.push_back({kind, action, t, std::move(msg)});
    }

    void check_preconditions() const {
        const int nq = prob.hardware.num_qubits();
        const int ns = prob.instance.n_states;
        for (const auto& a : plan.actions) {
            for (int i = 0; i < a.arity(); ++i) {
                if (a.qubits[i] < 0 || a.qubits[i] >= nq)
                    throw std::invalid_argument("validate: action references undeclared qubit");
                if (a.qstates[i] != ScheduledAction::kNone &&
                    (a.qstates[i] < 0 || a.qstates[i] >= ns))
                    throw std::invalid_argument("validate: action references undeclared qstate");
            }
            if (!(Ratio(0) <= a.start) || !(Ratio(0) < a.duration))
                throw std::invalid_argument("validate: action with negative time");
        }
    }

    void check_mutex() {
        // rule (a): per qubit, no two half-open intervals may overlap
        std::vector<std::vector<int>> on_qubit(prob.hardware.num_qubits());
        for (std::size_t i = 0; i < plan.actions.size(); ++i)
            for (int k = 0; k < plan.actions[i].arity(); ++k)
                on_qubit[plan.actions[i].qubits[k]].push_back(static_cast<int>(i));
        for (int q = 0; q < prob.hardware.num_qubits(); ++q) {
            auto& ids = on_qubit[q];
            std::sort(ids.begin(), ids.end(), [&](int x, int y) {
                return plan.actions[x].start < plan.actions[y].start;
            });
            for (std::size_t i = 1; i < ids.size(); ++i) {
                const auto& prev = plan.actions[ids[i - 1]];
                const auto& cur = plan.actions[ids[i]];
                if (cur.start < prev.end())
                    fail(ViolationKind::MutexOverlap, ids[i], cur.start,
                         "actions " + std::to_string(ids[i - 1]) + " and " +
                             std::to_string(ids[i]) + " overlap on " +
                             prob.hardware.name(q));
            }
        }
    }

    bool achieved(int level, const QPair& pair) const {
        return ps_done.count({level, pair}) > 0;
    }

    void check_start(int idx) {
        const auto& a = plan.actions[idx];
        const auto& hw = prob.hardware;
        switch (a.kind) {
            case GateKind::Swap: {
                const EdgeGate* e = hw.find_gate(a.qubits[0], a.qubits[1], GateKind::Swap);
                if (a.qubits[0] == a.qubits[1] || e == nullptr) {
                    fail(ViolationKind::WrongEdge, idx, a.start,
                         "no swap gate between " + hw.name(a.qubits[0]) + " and " +
                             hw.name(a.qubits[1]));
                } else if (Ratio(e->duration) != a.duration) {
                    fail(ViolationKind::WrongDuration, idx, a.start,
                         "swap on " + hw.name(a.qubits[0]) + "-" + hw.name(a.qubits[1]) +
                             " lasts " + std::to_string(e->duration) + ", not " +
                             a.duration.to_decimal());
                }
                for (int k = 0; k < 2; ++k)
                    if (occupant[a.qubits[k]] != a.qstates[k])
                        fail(ViolationKind::BadQstateLocation, idx, a.start,
                             "swap expects " +
                                 (a.qstates[k] == ScheduledAction::kNone
                                      ? std::string("no qstate")
                                      : qstate_name(a.qstates[k])) +
                                 " at " + hw.name(a.qubits[k]));
                break;
            }
            case GateKind::PS: {
                const EdgeGate* e = hw.find_gate(a.qubits[0], a.qubits[1], GateKind::PS);
                if (a.qubits[0] == a.qubits[1] || e == nullptr) {
                    fail(ViolationKind::WrongEdge, idx, a.start,
                         "no p-s gate between " + hw.name(a.qubits[0]) + " and " +
                             hw.name(a.qubits[1]));
                } else if (Ratio(e->duration) != a.duration) {
                    fail(ViolationKind::WrongDuration, idx, a.start,
                         "p-s on " + hw.name(a.qubits[0]) + "-" + hw.name(a.qubits[1]) +
                             " lasts " + std::to_string(e->duration) + ", not " +
                             a.duration.to_decimal());
                }
                bool located = true;
                for (int k = 0; k < 2; ++k) {
                    if (a.qstates[k] == ScheduledAction::kNone) located = false;
                    if (occupant[a.qubits[k]] != a.qstates[k]) located = false;
                }
                if (!located) {
                    fail(ViolationKind::BadQstateLocation, idx, a.start,
                         "p-s needs its two qstates at " + hw.name(a.qubits[0]) + "," +
                             hw.name(a.qubits[1]));
                    break;
                }
                QPair pair(a.qstates[0], a.qstates[1]);
                if (a.level < 1 || a.level > prob.p) {
                    fail(ViolationKind::PrematurePS2, idx, a.start,
                         "p-s level " + std::to_string(a.level) + " out of [1," +
                             std::to_string(prob.p) + "]");
                    break;
                }
                if (achieved(a.level, pair))
                    fail(ViolationKind::DuplicateGoal, idx, a.start,
                         "p-s " + pair_text(pair) + " repeated at level " +
                             std::to_string(a.level));
                if (a.level >= 2) {
                    if (!achieved(a.level - 1, pair))
                        fail(ViolationKind::PrematurePS2, idx, a.start,
                             "level-" + std::to_string(a.level) + " p-s " + pair_text(pair) +
                                 " before its level-" + std::to_string(a.level - 1) + " gate");
                    for (int s : {pair.a, pair.b})
                        if (mix_count[s] < a.level - 1)
                            fail(ViolationKind::PrematurePS2, idx, a.start,
                                 "level-" + std::to_string(a.level) + " p-s " +
                                     pair_text(pair) + " before " + qstate_name(s) +
                                     " is mixed");
                }
                break;
            }
            case GateKind::Mix: {
                const int q = a.qubits[0];
                const int s = a.qstates[0];
                if (s == ScheduledAction::kNone || occupant[q] != s) {
                    fail(ViolationKind::BadQstateLocation, idx, a.start,
                         "mix expects " +
                             (s == ScheduledAction::kNone ? std::string("a qstate")
                                                          : qstate_name(s)) +
                             " at " + hw.name(q));
                    break;
                }
                if (Ratio(hw.mix_duration(q)) != a.duration)
                    fail(ViolationKind::WrongDuration, idx, a.start,
                         "mix on " + hw.name(q) + " lasts " +
                             std::to_string(hw.mix_duration(q)) + ", not " +
                             a.duration.to_decimal());
                if (a.level < 1 || a.level > prob.p) {
                    fail(ViolationKind::PrematureMix, idx, a.start,
                         "mix level " + std::to_string(a.level) + " out of [1," +
                             std::to_string(prob.p) + "]");
                    break;
                }
                if (mix_count[s] >= a.level) {
                    fail(ViolationKind::DoubleMix, idx, a.start,
                         qstate_name(s) + " already mixed at level " +
                             std::to_string(a.level));
                } else if (mix_count[s] < a.level - 1) {
                    fail(ViolationKind::PrematureMix, idx, a.start,
                         qstate_name(s) + " mixed at level " + std::to_string(a.level) +
                             " before level " + std::to_string(mix_count[s] + 1));
                }
                for (const auto& e : prob.instance.edges) {
                    if (e.a != s && e.b != s) continue;
                    if (!achieved(a.level, e))
                        fail(ViolationKind::PrematureMix, idx, a.start,
                             qstate_name(s) + " mixed before level-" +
                                 std::to_string(a.level) + " p-s " + pair_text(e));
                }
                break;
            }
        }
    }

    void apply_end(int idx) {
        const auto& a = plan.actions[idx];
        switch (a.kind) {
            case GateKind::Swap:
                std::swap(occupant[a.qubits[0]], occupant[a.qubits[1]]);
                break;
            case GateKind::PS:
                if (a.qstates[0] != ScheduledAction::kNone &&
                    a.qstates[1] != ScheduledAction::kNone)
                    ps_done[{a.level, QPair(a.qstates[0], a.qstates[1])}].push_back(
                        a.duration.is_integer() ? static_cast<int>(a.duration.num) : 0);
                break;
            case GateKind::Mix:
                if (a.qstates[0] != ScheduledAction::kNone &&
                    mix_count[a.qstates[0]] == a.level - 1)
                    mix_count[a.qstates[0]] = a.level;
                break;
        }
    }

    void check_end_state() {
        const auto used = prob.used_qstates();
        for (int level = 1; level <= prob.p; ++level) {
            for (const auto& e : prob.instance.edges) {
                const int want = prob.required_duration(e);
                auto it = ps_done.find({level, e});
                bool ok = it != ps_done.end();
                if (ok && want != 0)
                    ok = std::find(it->second.begin(), it->second.end(), want) !=
                         it->second.end();
                if (!ok)
                    fail(ViolationKind::GoalUnachieved, -1, report.plan_makespan,
                         "level-" + std::to_string(level) + " p-s goal " + pair_text(e) +
                             (want != 0 ? " (duration " + std::to_string(want) + ")" : "") +
                             " not achieved");
            }
        }
        for (int s = 0; s < prob.instance.n_states; ++s)
            if (used[s] && mix_count[s] < prob.p - 1)
                fail(ViolationKind::GoalUnachieved, -1, report.plan_makespan,
                     qstate_name(s) + " not mixed");
    }

    ValidationReport run() {
        check_preconditions();
        report.plan_makespan = plan.makespan();
        occupant.assign(prob.hardware.num_qubits(), ScheduledAction::kNone);
        for (int s = 0; s < prob.instance.n_states; ++s)
            occupant[prob.initial[s]] = s;
        mix_count.assign(prob.instance.n_states, 0);

        check_mutex();

        // chronological sweep; at equal times, ends apply before starts
        struct Event {
            Ratio time;
            int phase;  // 0 = end, 1 = start
            int idx;
        };
        std::vector<Event> events;
        events.reserve(plan.actions.size() * 2);
        for (std::size_t i = 0; i < plan.actions.size(); ++i) {
            events.push_back({plan.actions[i].end(), 0, static_cast<int>(i)});
            events.push_back({plan.actions[i].start, 1, static_cast<int>(i)});
        }
        std::sort(events.begin(), events.end(), [](const Event& x, const Event& y) {
            if (x.time != y.time) return x.time < y.time;
            if (x.phase != y.phase) return x.phase < y.phase;
            return x.idx < y.idx;
        });
        for (const auto& ev : events) {
            if (ev.phase == 0)
                apply_end(ev.idx);
            else
                check_start(ev.idx);
        }

        check_end_state();

        for (int level = 1; level <= prob.p; ++level) {
            auto& set = report.achieved[level];
            for (const auto& e : prob.instance.edges)
                if (achieved(level, e)) set.insert(e);
        }
        report.final_locations.assign(prob.instance.n_states, -1);
        for (int q = 0; q < prob.hardware.num_qubits(); ++q)
            if (occupant[q] != ScheduledAction::kNone)
                report.final_locations[occupant[q]] = q;
        report.valid = report.violations.empty();
        return report;
    }
};

}  // namespace

ValidationReport validate(const TemporalPlan& plan, const CompilationProblem& problem) {
    Simulator sim(plan, problem);
    return sim.run();
}

TemporalPlan remove_superfluous(const TemporalPlan& plan,
                                const CompilationProblem& problem) {
    if (!validate(plan, problem).valid)
        throw std::invalid_argument("remove_superfluous: input plan does not validate");

    TemporalPlan cur = plan;
    const auto used = problem.used_qstates();
    auto try_erase = [&](const std::vector<std::size_t>& victims) {
        TemporalPlan next;
        for (std::size_t i = 0; i < cur.actions.size(); ++i)
            if (std::find(victims.begin(), victims.end(), i) == victims.end())
                next.actions.push_back(cur.actions[i]);
        if (!validate(next, problem).valid) return false;
        cur = std::move(next);
        return true;
    };

    bool changed = true;
    while (changed) {
        changed = false;
        // mixes of goal-less qstates
        for (std::size_t i = 0; i < cur.actions.size(); ++i) {
            const auto& a = cur.actions[i];
            if (a.kind == GateKind::Mix && a.qstates[0] != ScheduledAction::kNone &&
                !used[a.qstates[0]] && try_erase({i})) {
                changed = true;
                break;
            }
        }
        if (changed) continue;
        // cancelling swap pairs on the same edge
        for (std::size_t i = 0; i < cur.actions.size() && !changed; ++i) {
            if (cur.actions[i].kind != GateKind::Swap) continue;
            for (std::size_t j = i + 1; j < cur.actions.size() && !changed; ++j) {
                if (cur.actions[j].kind != GateKind::Swap) continue;
                if (std::min(cur.actions[i].qubits[0], cur.actions[i].qubits[1]) !=
                        std::min(cur.actions[j].qubits[0], cur.actions[j].qubits[1]) ||
                    std::max(cur.actions[i].qubits[0], cur.actions[i].qubits[1]) !=
                        std::max(cur.actions[j].qubits[0], cur.actions[j].qubits[1]))
                    continue;
                if (try_erase({i, j})) changed = true;
            }
        }
        if (changed) continue;
        // anything else not supporting a goal
        for (std::size_t i = 0; i < cur.actions.size(); ++i) {
            if (try_erase({i})) {
                changed = true;
                break;
            }
        }
    }
    return cur;
}

double ipc_score(double best_makespan, double candidate_makespan) {
    if (best_makespan <= 0 || candidate_makespan <= 0)
        throw std::invalid_argument("ipc_score: makespans must be positive");
    if (candidate_makespan < best_makespan)
        throw std::invalid_argument("ipc_score: candidate beats best; update the reference");
    return best_makespan / candidate_makespan;
}

namespace {
using nlohmann::json;
}

std::string ValidationReport::to_json() const {
    json j;
    j["valid"] = valid;
    json vs = json::array();
    for (const auto& v : violations)
        vs.push_back({{"kind", to_string(v.kind)},
                      {"action", v.action},
                      {"time", v.time.to_decimal()},
                      {"message", v.message}});
    j["violations"] = vs;
    json ach;
    for (const auto& [level, pairs] : achieved) {
        json arr = json::array();
        for (const auto& e : pairs) arr.push_back({e.a, e.b});
        ach[std::to_string(level)] = arr;
    }
    j["achieved"] = ach;
    json locs;
    for (std::size_t s = 0; s < final_locations.size(); ++s)
        if (final_locations[s] >= 0)
            locs[qstate_name(static_cast<int>(s))] = final_locations[s];
    j["final_locations"] = locs;
    j["makespan"] = plan_makespan.to_decimal();
    return j.dump(1) + "\n";
}

ValidationReport ValidationReport::from_json(const std::string& text) {
    json j = json::parse(text);
    ValidationReport r;
    r.valid = j.at("valid").get<bool>();
    for (const auto& v : j.at("violations")) {
        Violation out;
        const std::string kind = v.at("kind").get<std::string>();
        bool found = false;
        for (int k = 0; k <= static_cast<int>(ViolationKind::BadQstateLocation); ++k) {
            if (to_string(static_cast<ViolationKind>(k)) == kind) {
                out.kind = static_cast<ViolationKind>(k);
                found = true;
                break;
            }
        }
        if (!found) throw std::runtime_error("report: unknown violation kind " + kind);
        out.action = v.at("action").get<int>();
        out.time = Ratio::from_decimal(v.at("time").get<std::string>());
        out.message = v.at("message").get<std::string>();
        r.violations.push_back(out);
    }
    for (const auto& [level, pairs] : j.at("achieved").items())
        for (const auto& e : pairs)
            r.achieved[std::stoi(level)].insert(QPair(e.at(0).get<int>(), e.at(1).get<int>()));
    std::map<int, int> locs;
    for (const auto& [qs, qb] : j.at("final_locations").items())
        locs[std::stoi(qs.substr(1)) - 1] = qb.get<int>();
    if (!locs.empty()) {
        r.final_locations.assign(locs.rbegin()->first + 1, -1);
        for (const auto& [s, q] : locs) r.final_locations[s] = q;
    }
    r.plan_makespan = Ratio::from_decimal(j.at("makespan").get<std::string>());
    return r;
}

}  // namespace qcc
