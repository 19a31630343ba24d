#include "omega/print.hpp"

#include <algorithm>
#include <sstream>

namespace omega {

std::string to_string(const Rational& q) { return q.get_str(); }

bool display_before(const Monomial& a, const Monomial& b, const VariableOrder& order) {
    int da = order.parameter_degree(a);
    int db = order.parameter_degree(b);
    if (da != db) return da < db;
    if (a.is_one() != b.is_one()) return a.is_one();
    return lex_before(a, b, order);
}

std::string to_string(const Monomial& m, const VariableOrder& order) {
    if (m.is_one()) return "1";
    auto entries = m.entries();
    // parameters before lambdas, each in order
    std::sort(entries.begin(), entries.end(), [&](const auto& x, const auto& y) {
        bool lx = order.is_lambda(x.first), ly = order.is_lambda(y.first);
        if (lx != ly) return ly;
        return order.rank(x.first) < order.rank(y.first);
    });
    std::string out;
    for (const auto& [s, e] : entries) {
        if (!out.empty()) out += '*';
        out += s.name();
        if (e != 1) out += '^' + std::to_string(e);
    }
    return out;
}

std::vector<std::pair<Monomial, Rational>> sorted_terms(const LaurentPolynomial& p,
                                                        const VariableOrder& order) {
    std::vector<std::pair<Monomial, Rational>> v(p.terms().begin(), p.terms().end());
    std::stable_sort(v.begin(), v.end(),
                     [&](const auto& a, const auto& b) { return display_before(a.first, b.first, order); });
    return v;
}

namespace {

// "c*M" with the sign stripped; `abs_c` is positive.
std::string unsigned_term(const Rational& abs_c, const Monomial& m, const VariableOrder& order) {
    if (m.is_one()) return to_string(abs_c);
    if (abs_c == 1) return to_string(m, order);
    return to_string(abs_c) + '*' + to_string(m, order);
}

}  // namespace

std::string to_string(const LaurentPolynomial& p, const VariableOrder& order) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : sorted_terms(p, order)) {
        Rational a = abs(c);
        if (first) {
            if (c < 0) out += '-';
        } else {
            out += c < 0 ? " - " : " + ";
        }
        out += unsigned_term(a, m, order);
        first = false;
    }
    return out;
}

std::string to_string(const Factor& f, const VariableOrder& order) {
    std::string out = "(1 ";
    out += f.coeff > 0 ? "- " : "+ ";
    out += unsigned_term(abs(f.coeff), f.mono, order);
    out += ')';
    if (f.mult != 1) out += '^' + std::to_string(f.mult);
    return out;
}

std::vector<Factor> sorted_factors(const std::vector<Factor>& fs, const VariableOrder& order) {
    auto v = fs;
    std::stable_sort(v.begin(), v.end(), [&](const Factor& a, const Factor& b) {
        if (a.mono != b.mono) return display_before(a.mono, b.mono, order);
        return a.coeff < b.coeff;
    });
    return v;
}

namespace {

std::string wrap_numerator(const LaurentPolynomial& p, const VariableOrder& order) {
    std::string s = to_string(p, order);
    if (p.size() > 1 || (p.size() == 1 && p.terms().begin()->second < 0)) return '(' + s + ')';
    return s;
}

}  // namespace

std::string to_string(const ElliottRational& e) {
    const auto& order = e.order();
    if (e.denominator().empty()) return to_string(e.numerator(), order);
    std::string out = wrap_numerator(e.numerator(), order) + '/';
    auto fs = sorted_factors(e.denominator(), order);
    if (fs.size() == 1) return out + to_string(fs.front(), order);
    out += '(';
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (i) out += '*';
        out += to_string(fs[i], order);
    }
    return out + ')';
}

std::string to_string_expanded(const ElliottRational& e) {
    const auto& order = e.order();
    if (e.denominator().empty()) return to_string(e.numerator(), order);
    return wrap_numerator(e.numerator(), order) + "/(" + to_string(e.expanded_denominator(), order) + ')';
}

}  // namespace omega
