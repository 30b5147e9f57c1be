#include "qcc/pddl.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qcc {

namespace {

// Qubit label used inside action and predicate names: the numeric tail of the
// qubit name when unique ("n7" -> "7"), otherwise the sanitized name itself.
std::vector<std::string> make_labels(const HardwareGraph& hw) {
    std::vector<std::string> labels(hw.num_qubits());
    std::map<std::string, int> seen;
    bool numeric_ok = true;
    for (int q = 0; q < hw.num_qubits(); ++q) {
        const std::string& name = hw.name(q);
        std::size_t i = name.size();
        while (i > 0 && std::isdigit(static_cast<unsigned char>(name[i - 1]))) --i;
        if (i == name.size()) {
            numeric_ok = false;
            break;
        }
        labels[q] = name.substr(i);
        if (++seen[labels[q]] > 1) numeric_ok = false;
    }
    if (!numeric_ok)
        for (int q = 0; q < hw.num_qubits(); ++q) {
            std::string s = hw.name(q);
            for (char& c : s)
                if (!std::isalnum(static_cast<unsigned char>(c))) c = '_';
            labels[q] = s;
        }
    return labels;
}

std::string ordinal(int k) {
    const int m = k % 100;
    const char* suffix = "th";
    if (m < 11 || m > 13) {
        switch (k % 10) {
            case 1: suffix = "st"; break;
            case 2: suffix = "nd"; break;
            case 3: suffix = "rd"; break;
        }
    }
    return std::to_string(k) + suffix;
}

std::string swap_name(const std::string& la, const std::string& lb) {
    return "swap_" + la + "_" + lb;
}

std::string ps_name(int level, const std::string& la, const std::string& lb) {
    return "P-S_" + ordinal(level) + "PhaseSeparation_at_" + la + "-" + lb;
}

std::string mix_name(int level, int qstate, const std::string& label) {
    std::string head = level <= 1 ? "mix" : "mix" + std::to_string(level);
    return head + "_" + qstate_name(qstate) + "_at_" + label;
}

std::string mixed_pred(int level) {
    return level <= 1 ? "mixed" : "mixed" + std::to_string(level);
}

std::string located(const std::string& label) { return "located_at_" + label; }

std::string domain_name(const CompilationProblem& prob) {
    return "qcc-n" + std::to_string(prob.hardware.num_qubits()) + "-p" +
           std::to_string(prob.p);
}

std::string lower(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

}  // namespace

std::string emit_domain(const CompilationProblem& prob, PddlVariant variant) {
    const auto& hw = prob.hardware;
    const auto labels = make_labels(hw);
    const bool positive = variant == PddlVariant::Positive;
    const auto used = prob.used_qstates();
    std::ostringstream out;

    out << "(define (domain " << domain_name(prob) << ")\n";
    out << "  (:requirements :typing :durative-actions";
    if (!positive) out << " :negative-preconditions";
    out << ")\n";
    out << "  (:types qstate)\n";
    out << "  (:constants ";
    for (int s = 0; s < prob.instance.n_states; ++s) out << qstate_name(s) << " ";
    out << " - qstate)\n";

    out << "  (:predicates\n";
    for (int q = 0; q < hw.num_qubits(); ++q)
        out << "    (" << located(labels[q]) << " ?q - qstate)\n";
    for (int i = 1; i <= prob.p; ++i) {
        out << "    (GOAL_PS" << i << " ?q1 - qstate ?q2 - qstate)\n";
        if (positive) out << "    (not_GOAL_PS" << i << " ?q1 - qstate ?q2 - qstate)\n";
    }
    for (int k = 1; k < prob.p; ++k) {
        out << "    (" << mixed_pred(k) << " ?q - qstate)\n";
        if (positive) out << "    (not_" << mixed_pred(k) << " ?q - qstate)\n";
    }
    out << "  )\n\n";

    for (const auto& e : hw.edges()) {
        if (e.kind != GateKind::Swap) continue;
        const std::string& la = labels[e.a];
        const std::string& lb = labels[e.b];
        out << "(:durative-action " << swap_name(la, lb) << "\n"
            << "  :parameters (?q1 - qstate ?q2 - qstate)\n"
            << "  :duration (= ?duration " << e.duration << ")\n"
            << "  :condition (and (at start (" << located(la) << " ?q1))\n"
            << "                  (at start (" << located(lb) << " ?q2)))\n"
            << "  :effect (and (at start (not (" << located(la) << " ?q1)))\n"
            << "               (at start (not (" << located(lb) << " ?q2)))\n"
            << "               (at end (" << located(la) << " ?q2))\n"
            << "               (at end (" << located(lb) << " ?q1))))\n\n";
    }

    for (int level = 1; level <= prob.p; ++level) {
        for (const auto& e : hw.edges()) {
            if (e.kind != GateKind::PS) continue;
            const std::string& la = labels[e.a];
            const std::string& lb = labels[e.b];
            out << "(:durative-action " << ps_name(level, la, lb) << "\n"
                << "  :parameters (?q1 - qstate ?q2 - qstate)\n"
                << "  :duration (= ?duration " << e.duration << ")\n"
                << "  :condition (and (at start (" << located(la) << " ?q1))\n"
                << "                  (at start (" << located(lb) << " ?q2))\n";
            if (positive)
                out << "                  (at start (not_GOAL_PS" << level
                    << " ?q1 ?q2))";
            else
                out << "                  (at start (not (GOAL_PS" << level
                    << " ?q1 ?q2)))";
            if (level >= 2) {
                out << "\n                  (at start (GOAL_PS" << level - 1
                    << " ?q1 ?q2))\n"
                    << "                  (at start (" << mixed_pred(level - 1)
                    << " ?q1))\n"
                    << "                  (at start (" << mixed_pred(level - 1)
                    << " ?q2))";
            }
            out << ")\n";
            out << "  :effect (and (at start (not (" << located(la) << " ?q1)))\n"
                << "               (at start (not (" << located(lb) << " ?q2)))\n"
                << "               (at end (" << located(la) << " ?q1))\n"
                << "               (at end (" << located(lb) << " ?q2))\n"
                << "               (at end (GOAL_PS" << level << " ?q1 ?q2))\n"
                << "               (at end (GOAL_PS" << level << " ?q2 ?q1))";
            if (positive)
                out << "\n               (at end (not (not_GOAL_PS" << level
                    << " ?q1 ?q2)))\n"
                    << "               (at end (not (not_GOAL_PS" << level
                    << " ?q2 ?q1)))";
            out << "))\n\n";
        }
    }

    for (int k = 1; k < prob.p; ++k) {
        for (int s = 0; s < prob.instance.n_states; ++s) {
            if (!used[s]) continue;  // goal-less qstates never need mixing
            for (int q = 0; q < hw.num_qubits(); ++q) {
                out << "(:durative-action " << mix_name(k, s, labels[q]) << "\n"
                    << "  :parameters ()\n"
                    << "  :duration (= ?duration " << hw.mix_duration(q) << ")\n"
                    << "  :condition (and (at start (" << located(labels[q]) << " "
                    << qstate_name(s) << "))\n";
                for (const auto& e : prob.instance.edges) {
                    if (e.a != s && e.b != s) continue;
                    out << "                  (at start (GOAL_PS" << k << " "
                        << qstate_name(e.a) << " " << qstate_name(e.b) << "))\n";
                }
                if (k >= 2)
                    out << "                  (at start (" << mixed_pred(k - 1) << " "
                        << qstate_name(s) << "))\n";
                if (positive)
                    out << "                  (over all (not_" << mixed_pred(k) << " "
                        << qstate_name(s) << ")))\n";
                else
                    out << "                  (over all (not (" << mixed_pred(k) << " "
                        << qstate_name(s) << "))))\n";
                out << "  :effect (and (at start (not (" << located(labels[q]) << " "
                    << qstate_name(s) << ")))\n"
                    << "               (at end (" << located(labels[q]) << " "
                    << qstate_name(s) << "))\n"
                    << "               (at end (" << mixed_pred(k) << " "
                    << qstate_name(s) << "))";
                if (positive)
                    out << "\n               (at end (not (not_" << mixed_pred(k) << " "
                        << qstate_name(s) << ")))";
                out << "))\n\n";
            }
        }
    }

    out << ")\n";
    return out.str();
}

std::string emit_problem(const CompilationProblem& prob, PddlVariant variant) {
    const auto labels = make_labels(prob.hardware);
    const bool positive = variant == PddlVariant::Positive;
    const auto used = prob.used_qstates();
    std::ostringstream out;

    out << "(define (problem " << domain_name(prob) << "-instance)\n";
    out << "  (:domain " << domain_name(prob) << ")\n";
    out << "  (:init\n";
    for (int s = 0; s < prob.instance.n_states; ++s)
        out << "    (" << located(labels[prob.initial[s]]) << " " << qstate_name(s)
            << ")\n";
    if (positive) {
        for (int i = 1; i <= prob.p; ++i)
            for (int a = 0; a < prob.instance.n_states; ++a)
                for (int b = 0; b < prob.instance.n_states; ++b)
                    if (a != b)
                        out << "    (not_GOAL_PS" << i << " " << qstate_name(a) << " "
                            << qstate_name(b) << ")\n";
        for (int k = 1; k < prob.p; ++k)
            for (int s = 0; s < prob.instance.n_states; ++s)
                out << "    (not_" << mixed_pred(k) << " " << qstate_name(s) << ")\n";
    }
    out << "  )\n";
    out << "  (:goal (and\n";
    for (int i = 1; i <= prob.p; ++i)
        for (const auto& e : prob.instance.edges)
            out << "    (GOAL_PS" << i << " " << qstate_name(e.a) << " "
                << qstate_name(e.b) << ")\n";
    for (int k = 1; k < prob.p; ++k)
        for (int s = 0; s < prob.instance.n_states; ++s)
            if (used[s])
                out << "    (" << mixed_pred(k) << " " << qstate_name(s) << ")\n";
    out << "  ))\n";
    out << "  (:metric minimize (total-time))\n";
    out << ")\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// plan parsing and rendering

namespace {

struct ActionTemplate {
    GateKind kind = GateKind::Swap;
    int qubits[2] = {ScheduledAction::kNone, ScheduledAction::kNone};
    int level = 0;
    int mix_qstate = ScheduledAction::kNone;
};

// Lowercased action name -> template. Both argument orientations of every
// 2-qubit action are registered so externally ordered names resolve too.
std::map<std::string, ActionTemplate> name_table(const CompilationProblem& prob) {
    const auto& hw = prob.hardware;
    const auto labels = make_labels(hw);
    std::map<std::string, ActionTemplate> table;
    auto put = [&](const std::string& name, const ActionTemplate& t) {
        table[lower(name)] = t;
    };
    for (const auto& e : hw.edges()) {
        const std::string& la = labels[e.a];
        const std::string& lb = labels[e.b];
        if (e.kind == GateKind::Swap) {
            put(swap_name(la, lb), {GateKind::Swap, {e.a, e.b}, 0, -1});
            put(swap_name(lb, la), {GateKind::Swap, {e.b, e.a}, 0, -1});
        } else {
            for (int level = 1; level <= prob.p; ++level) {
                put(ps_name(level, la, lb), {GateKind::PS, {e.a, e.b}, level, -1});
                put(ps_name(level, lb, la), {GateKind::PS, {e.b, e.a}, level, -1});
            }
        }
    }
    // mixes for every qstate (external planners may mix goal-less ones)
    const int max_mix = std::max(1, prob.p - 1);
    for (int k = 1; k <= max_mix; ++k)
        for (int s = 0; s < prob.instance.n_states; ++s)
            for (int q = 0; q < hw.num_qubits(); ++q)
                put(mix_name(k, s, labels[q]),
                    {GateKind::Mix, {q, ScheduledAction::kNone}, k, s});
    return table;
}

Ratio snapped(const Ratio& t) {
    const std::int64_t n = t.nearest_int();
    const Ratio diff = t - Ratio(n);
    const Ratio eps(1, 1000);
    if ((diff.num < 0 ? Ratio(-diff.num, diff.den) : diff) <= eps) return Ratio(n);
    return t;
}

[[noreturn]] void parse_fail(int line, const std::string& what) {
    throw std::runtime_error("plan line " + std::to_string(line) + ": " + what);
}

}  // namespace

TemporalPlan parse_plan(const std::string& text, const CompilationProblem& prob) {
    const auto table = name_table(prob);
    TemporalPlan plan;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        std::size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string::npos) continue;
        if (line[i] == ';') continue;

        std::size_t colon = line.find(':', i);
        std::size_t open = line.find('(', i);
        if (colon == std::string::npos || open == std::string::npos || colon > open)
            parse_fail(lineno, "expected '<start>: (<action>) [<duration>]'");
        Ratio start;
        try {
            std::string t = line.substr(i, colon - i);
            t.erase(t.find_last_not_of(" \t") + 1);
            start = Ratio::from_decimal(t);
        } catch (const std::exception& e) {
            parse_fail(lineno, e.what());
        }
        std::size_t close = line.find(')', open);
        if (close == std::string::npos) parse_fail(lineno, "unterminated action");
        std::istringstream body(line.substr(open + 1, close - open - 1));
        std::string name;
        body >> name;
        if (name.empty()) parse_fail(lineno, "missing action name");
        auto it = table.find(lower(name));
        if (it == table.end()) parse_fail(lineno, "unknown action '" + name + "'");
        const ActionTemplate& tmpl = it->second;

        std::vector<std::string> args;
        std::string tok;
        while (body >> tok) args.push_back(lower(tok));

        std::size_t lb = line.find('[', close);
        std::size_t rb = line.find(']', close);
        if (lb == std::string::npos || rb == std::string::npos || rb < lb)
            parse_fail(lineno, "missing [duration]");
        Ratio dur;
        try {
            dur = Ratio::from_decimal(line.substr(lb + 1, rb - lb - 1));
        } catch (const std::exception& e) {
            parse_fail(lineno, e.what());
        }

        ScheduledAction act;
        act.start = snapped(start);
        act.duration = snapped(dur);
        act.kind = tmpl.kind;
        act.qubits[0] = tmpl.qubits[0];
        act.qubits[1] = tmpl.qubits[1];
        act.level = tmpl.level;
        auto qstate_of = [&](const std::string& a) {
            if (a == "none") return ScheduledAction::kNone;
            if (a.size() >= 2 && a[0] == 'q') {
                int s = -1;
                try {
                    s = std::stoi(a.substr(1)) - 1;
                } catch (...) {
                }
                if (s >= 0 && s < prob.instance.n_states) return s;
            }
            parse_fail(lineno, "unknown qstate '" + a + "'");
        };
        if (tmpl.kind == GateKind::Mix) {
            if (!args.empty()) parse_fail(lineno, "mix actions take no arguments");
            act.qstates[0] = tmpl.mix_qstate;
        } else {
            if (args.size() != 2)
                parse_fail(lineno, "expected 2 arguments, got " +
                                       std::to_string(args.size()));
            act.qstates[0] = qstate_of(args[0]);
            act.qstates[1] = qstate_of(args[1]);
        }
        act.canonicalize();
        plan.actions.push_back(act);
    }
    return plan;
}

std::string render_plan(const TemporalPlan& plan, const CompilationProblem& prob) {
    const auto labels = make_labels(prob.hardware);
    std::ostringstream out;
    out << "; makespan " << plan.makespan().to_decimal() << "\n";
    for (const auto& a : plan.actions) {
        out << a.start.to_decimal() << ": (";
        switch (a.kind) {
            case GateKind::Swap:
                out << swap_name(labels[a.qubits[0]], labels[a.qubits[1]]);
                break;
            case GateKind::PS:
                out << ps_name(a.level, labels[a.qubits[0]], labels[a.qubits[1]]);
                break;
            case GateKind::Mix:
                out << mix_name(a.level, a.qstates[0], labels[a.qubits[0]]);
                break;
        }
        if (a.kind != GateKind::Mix)
            for (int k = 0; k < 2; ++k)
                out << " "
                    << (a.qstates[k] == ScheduledAction::kNone
                            ? std::string("none")
                            : qstate_name(a.qstates[k]));
        out << ") [" << a.duration.to_decimal() << "]\n";
    }
    return out.str();
}

}  // namespace qcc
