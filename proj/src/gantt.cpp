#include "qcc/gantt.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qcc/validator.hpp"

namespace qcc {

namespace {

// indices of actions remove_superfluous would delete
std::set<std::size_t> superfluous_set(const TemporalPlan& plan,
                                      const CompilationProblem& prob) {
    const TemporalPlan trimmed = remove_superfluous(plan, prob);
    std::set<std::size_t> gone;
    std::vector<bool> kept(plan.actions.size(), false);
    std::size_t j = 0;
    for (const auto& a : trimmed.actions) {
        while (j < plan.actions.size() && !(plan.actions[j] == a)) ++j;
        if (j < plan.actions.size()) kept[j++] = true;
    }
    for (std::size_t i = 0; i < plan.actions.size(); ++i)
        if (!kept[i]) gone.insert(i);
    return gone;
}

std::map<QPair, int> pair_palette(const CompilationProblem& prob) {
    std::map<QPair, int> idx;
    for (const auto& e : prob.instance.edges)
        idx.emplace(e, static_cast<int>(idx.size()));
    return idx;
}

std::int64_t ceil_int(const Ratio& r) { return (r.num + r.den - 1) / r.den; }
std::int64_t floor_int(const Ratio& r) {
    return r.num >= 0 ? r.num / r.den : -((-r.num + r.den - 1) / r.den);
}

std::string text_chart(const TemporalPlan& plan, const CompilationProblem& prob,
                       const std::set<std::size_t>& extra) {
    const auto palette = pair_palette(prob);
    const int width = static_cast<int>(ceil_int(plan.makespan()));
    std::size_t name_w = 0;
    for (const auto& n : prob.hardware.qubit_names()) name_w = std::max(name_w, n.size());

    std::vector<std::string> rows(prob.hardware.num_qubits(), std::string(width, '.'));
    for (std::size_t i = 0; i < plan.actions.size(); ++i) {
        const auto& a = plan.actions[i];
        const int s = static_cast<int>(floor_int(a.start));
        const int e = static_cast<int>(ceil_int(a.end()));
        char glyph = '=';
        if (a.kind == GateKind::PS) {
            auto it = palette.find(QPair(a.qstates[0], a.qstates[1]));
            glyph = it == palette.end() ? '?'
                                        : static_cast<char>('A' + it->second % 26);
        } else if (a.kind == GateKind::Mix) {
            glyph = static_cast<char>('0' + (a.qstates[0] + 1) % 10);
        }
        for (int k = 0; k < a.arity(); ++k) {
            auto& row = rows[a.qubits[k]];
            for (int t = s; t < e && t < width; ++t) row[t] = glyph;
            if (extra.count(i) && s < width) row[s] = '+';
        }
    }

    std::ostringstream out;
    out << std::string(name_w, ' ') << " time 0.." << width << "\n";
    for (int q = 0; q < prob.hardware.num_qubits(); ++q) {
        std::string pad(name_w - prob.hardware.name(q).size(), ' ');
        out << prob.hardware.name(q) << pad << " |" << rows[q] << "|\n";
    }
    out << "legend: '=' swap, digits mix (state number mod 10), '+' superfluous";
    bool first = true;
    for (const auto& [pair, idx] : palette) {
        out << (first ? "\n" : ", ");
        if (first) out << "p-s pairs: ";
        first = false;
        out << static_cast<char>('A' + idx % 26) << "={" << qstate_name(pair.a) << ","
            << qstate_name(pair.b) << "}";
    }
    out << "\n";
    return out.str();
}

const char* kPsFills[] = {"#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#b07aa1",
                          "#edc948", "#76b7b2", "#ff9da7", "#9c755f", "#bab0ac"};

std::string svg_chart(const TemporalPlan& plan, const CompilationProblem& prob,
                      const std::set<std::size_t>& extra) {
    const auto palette = pair_palette(prob);
    const int nq = prob.hardware.num_qubits();
    const double cell = 24.0, row_h = 22.0, left = 56.0, top = 28.0;
    const std::int64_t width_t = ceil_int(plan.makespan());
    const double w = left + cell * static_cast<double>(std::max<std::int64_t>(width_t, 1)) + 12;
    const double h = top + row_h * nq + 28;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\""
        << h << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
    out << "<style>text{font-family:monospace;font-size:11px}</style>\n";
    out << "<rect x=\"0\" y=\"0\" width=\"" << w << "\" height=\"" << h
        << "\" fill=\"white\"/>\n";
    for (int q = 0; q < nq; ++q) {
        const double y = top + row_h * q;
        out << "<text x=\"4\" y=\"" << y + 15 << "\">" << prob.hardware.name(q)
            << "</text>\n";
        out << "<line x1=\"" << left << "\" y1=\"" << y + row_h << "\" x2=\"" << w - 8
            << "\" y2=\"" << y + row_h << "\" stroke=\"#ddd\"/>\n";
    }
    for (std::int64_t t = 0; t <= width_t; ++t)
        out << "<text x=\"" << left + cell * t - 3 << "\" y=\"" << top - 8 << "\">" << t
            << "</text>\n";

    auto num = [](const Ratio& r) {
        return static_cast<double>(r.num) / static_cast<double>(r.den);
    };
    for (std::size_t i = 0; i < plan.actions.size(); ++i) {
        const auto& a = plan.actions[i];
        const double x = left + cell * num(a.start);
        const double bw = cell * num(a.duration);
        std::string fill = "white", stroke = "black", label;
        if (a.kind == GateKind::PS) {
            auto it = palette.find(QPair(a.qstates[0], a.qstates[1]));
            fill = it == palette.end() ? "#cccccc" : kPsFills[it->second % 10];
            label = qstate_name(a.qstates[0]) + " " + qstate_name(a.qstates[1]);
        } else if (a.kind == GateKind::Mix) {
            fill = "black";
            label = std::to_string(a.qstates[0] + 1);
        }
        for (int k = 0; k < a.arity(); ++k) {
            const double y = top + row_h * a.qubits[k] + 2;
            out << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << bw
                << "\" height=\"" << row_h - 4 << "\" fill=\"" << fill
                << "\" stroke=\"" << stroke << "\"/>\n";
            if (!label.empty())
                out << "<text x=\"" << x + 3 << "\" y=\"" << y + 13 << "\" fill=\""
                    << (a.kind == GateKind::Mix ? "white" : "black") << "\">" << label
                    << "</text>\n";
            if (extra.count(i))
                out << "<text x=\"" << x + bw - 10 << "\" y=\"" << y + 13
                    << "\" fill=\"red\" font-weight=\"bold\">+</text>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace

std::string gantt(const TemporalPlan& plan, const CompilationProblem& problem,
                  GanttFormat format) {
    if (!validate(plan, problem).valid)
        throw std::invalid_argument("gantt: plan does not validate");
    const auto extra = superfluous_set(plan, problem);
    return format == GanttFormat::Text ? text_chart(plan, problem, extra)
                                       : svg_chart(plan, problem, extra);
}

}  // namespace qcc
