#include "cli/render.hpp"

#include <algorithm>
#include <cctype>

#include "omega/print.hpp"

namespace omega::cli {

namespace {

std::string latex_rational(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return "\\frac{" + q.get_num().get_str() + "}{" + q.get_den().get_str() + "}";
}

std::string unsigned_term(const Rational& a, const Monomial& m, const VariableOrder& order) {
    if (m.is_one()) return latex_rational(a);
    if (a == 1) return to_latex(m, order);
    return latex_rational(a) + " " + to_latex(m, order);
}

std::vector<Monomial::Entry> entries_in_order(const Monomial& m, const VariableOrder& order) {
    auto v = m.entries();
    std::sort(v.begin(), v.end(), [&](const auto& a, const auto& b) {
        bool la = order.is_lambda(a.first), lb = order.is_lambda(b.first);
        if (la != lb) return lb;
        return order.rank(a.first) < order.rank(b.first);
    });
    return v;
}

}  // namespace

std::string latex_name(const std::string& var) {
    std::size_t i = 0;
    while (i < var.size() && !std::isdigit(static_cast<unsigned char>(var[i]))) ++i;
    std::string stem = var.substr(0, i);
    std::string index = var.substr(i);
    if (stem == "l") stem = "\\lambda";
    else if (stem.size() > 1) stem = "\\mathit{" + stem + "}";
    return index.empty() ? stem : stem + "_{" + index + "}";
}

std::string to_latex(const Monomial& m, const VariableOrder& order) {
    if (m.is_one()) return "1";
    std::string out;
    for (const auto& [s, e] : entries_in_order(m, order)) {
        out += latex_name(s.name());
        if (e != 1) out += "^{" + std::to_string(e) + "}";
    }
    return out;
}

std::string to_latex(const LaurentPolynomial& p, const VariableOrder& order) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : sorted_terms(p, order)) {
        if (first)
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        out += unsigned_term(abs(c), m, order);
        first = false;
    }
    return out;
}

std::string to_latex(const Factor& f, const VariableOrder& order) {
    std::string out = "(1 ";
    out += f.coeff > 0 ? "- " : "+ ";
    out += unsigned_term(abs(f.coeff), f.mono, order) + ")";
    if (f.mult != 1) out += "^{" + std::to_string(f.mult) + "}";
    return out;
}

std::string to_latex(const ElliottRational& e, bool expand) {
    const auto& order = e.order();
    std::string num = to_latex(e.numerator(), order);
    if (e.denominator().empty()) return num;
    std::string den;
    if (expand) {
        den = to_latex(e.expanded_denominator(), order);
    } else {
        for (const auto& f : sorted_factors(e.denominator(), order)) den += to_latex(f, order);
    }
    return "\\frac{" + num + "}{" + den + "}";
}

nlohmann::ordered_json to_json(const Monomial& m, const VariableOrder& order) {
    nlohmann::ordered_json out = nlohmann::ordered_json::object();
    for (const auto& [s, e] : entries_in_order(m, order)) out[s.name()] = e;
    return out;
}

nlohmann::ordered_json to_json(const Factor& f, const VariableOrder& order) {
    return {{"coeff", {f.coeff.get_num().get_str(), f.coeff.get_den().get_str()}},
            {"mono", to_json(f.mono, order)},
            {"mult", f.mult}};
}

nlohmann::ordered_json to_json(const ElliottRational& e) {
    const auto& order = e.order();
    nlohmann::ordered_json num = nlohmann::ordered_json::array();
    for (const auto& [m, c] : sorted_terms(e.numerator(), order))
        num.push_back({c.get_num().get_str(), c.get_den().get_str(), to_json(m, order)});
    nlohmann::ordered_json den = nlohmann::ordered_json::array();
    for (const auto& f : sorted_factors(e.denominator(), order)) den.push_back(to_json(f, order));
    return {{"numerator", num}, {"denominator", den}};
}

}  // namespace omega::cli
