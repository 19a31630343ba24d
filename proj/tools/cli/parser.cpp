#include "cli/parser.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace omega::cli {

namespace {

enum class Tok { number, ident, op, end };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (std::isspace(c)) {
            ++i;
        } else if (std::isdigit(c)) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Tok::number, s.substr(i, j - i), i});
            i = j;
        } else if (std::isalpha(c) || c == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            out.push_back({Tok::ident, s.substr(i, j - i), i});
            i = j;
        } else if (std::string_view("+-*/^()").find(static_cast<char>(c)) != std::string_view::npos) {
            out.push_back({Tok::op, std::string(1, static_cast<char>(c)), i});
            ++i;
        } else {
            throw ParseError(std::string("unexpected character '") + static_cast<char>(c) + "'", i);
        }
    }
    out.push_back({Tok::end, "", s.size()});
    return out;
}

// A product of numerator polynomials over binomial factors. Products stay
// factored so that a parenthesized denominator can be split into binomials.
struct Value {
    std::vector<std::pair<LaurentPolynomial, int>> num;
    std::vector<Factor> den;
};

class Parser {
public:
    Parser(const std::string& text, OrderPtr order) : toks_(tokenize(text)), order_(std::move(order)) {}

    ElliottRational run() {
        Value v = expr();
        if (peek().kind != Tok::end) throw ParseError("unexpected '" + peek().text + "'", peek().pos);
        return to_er(v);
    }

private:
    const Token& peek() const { return toks_[i_]; }
    bool accept(const char* op) {
        if (peek().kind == Tok::op && peek().text == op) {
            ++i_;
            return true;
        }
        return false;
    }
    void expect(const char* op) {
        if (!accept(op)) throw ParseError(std::string("expected '") + op + "'", peek().pos);
    }

    ElliottRational to_er(const Value& v) const {
        LaurentPolynomial p(1);
        for (const auto& [q, k] : v.num) p *= q.pow(static_cast<unsigned>(k));
        return ElliottRational(std::move(p), v.den, order_);
    }

    Value from_er(const ElliottRational& e) const { return Value{{{e.numerator(), 1}}, e.denominator()}; }

    Value add(const Value& a, const Value& b, bool subtract) const {
        auto rb = to_er(b);
        if (subtract) rb = scale(rb, LaurentPolynomial(-1));
        return from_er(sum({to_er(a), rb}, order_));
    }

    static Value mul(Value a, const Value& b) {
        a.num.insert(a.num.end(), b.num.begin(), b.num.end());
        a.den.insert(a.den.end(), b.den.begin(), b.den.end());
        return a;
    }

    // p = unit * (1 - c M)
    std::pair<LaurentPolynomial, Factor> split_binomial(const LaurentPolynomial& p) const {
        auto it = p.terms().begin();
        Monomial m1 = it->first, m2 = std::next(it)->first;
        Rational c1 = it->second, c2 = std::next(it)->second;
        if (m2.is_one() || (!m1.is_one() && !is_small(m2 / m1, *order_))) {
            std::swap(m1, m2);
            std::swap(c1, c2);
        }
        return {LaurentPolynomial(c1, m1), Factor(-c2 / c1, m2 / m1, 1)};
    }

    Value inverse(const Value& v, std::size_t pos) const {
        Value out;
        for (const auto& f : v.den) out.num.emplace_back(f.binomial(), f.mult);
        for (const auto& [p, k] : v.num) {
            if (p.is_zero()) throw ParseError("division by zero", pos);
            if (p.is_term()) {
                const auto& [m, c] = *p.terms().begin();
                out.num.emplace_back(LaurentPolynomial(1 / c, m.inverse()), k);
            } else if (p.size() == 2) {
                auto [unit, f] = split_binomial(p);
                const auto& [m, c] = *unit.terms().begin();
                out.num.emplace_back(LaurentPolynomial(1 / c, m.inverse()), k);
                f.mult = k;
                out.den.push_back(std::move(f));
            } else {
                throw ParseError("denominator not in Elliott form", pos);
            }
        }
        return out;
    }

    Value power(const Value& v, int n, std::size_t pos) const {
        if (n == 0) return Value{{{LaurentPolynomial(1), 1}}, {}};
        Value base = n > 0 ? v : inverse(v, pos);
        int k = n > 0 ? n : -n;
        for (auto& [p, m] : base.num) m *= k;
        for (auto& f : base.den) f.mult *= k;
        return base;
    }

    Value expr() {
        Value v = term();
        while (true) {
            if (accept("+"))
                v = add(v, term(), false);
            else if (accept("-"))
                v = add(v, term(), true);
            else
                return v;
        }
    }

    Value term() {
        Value v = factor();
        while (true) {
            std::size_t pos = peek().pos;
            if (accept("*"))
                v = mul(std::move(v), factor());
            else if (accept("/"))
                v = mul(std::move(v), inverse(factor(), pos));
            else
                return v;
        }
    }

    Value factor() {
        if (accept("-")) {
            Value v = factor();
            v.num.emplace_back(LaurentPolynomial(-1), 1);
            return v;
        }
        if (accept("+")) return factor();
        Value v = base();
        std::size_t pos = peek().pos;
        if (accept("^")) v = power(v, exponent(), pos);
        return v;
    }

    int exponent() {
        bool paren = accept("(");
        bool neg = accept("-");
        const Token& t = peek();
        if (t.kind != Tok::number) throw ParseError("expected integer exponent", t.pos);
        if (t.text.size() > 6) throw ParseError("exponent too large", t.pos);
        int n = std::stoi(t.text);
        ++i_;
        if (paren) expect(")");
        return neg ? -n : n;
    }

    Value base() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::number: {
                ++i_;
                return Value{{{LaurentPolynomial(Rational(mpz_class(t.text))), 1}}, {}};
            }
            case Tok::ident: {
                ++i_;
                Symbol s(t.text);
                if (!order_->contains(s)) throw ParseError("unknown variable '" + t.text + "'", t.pos);
                return Value{{{LaurentPolynomial(Monomial::var(s)), 1}}, {}};
            }
            case Tok::op:
                if (t.text == "(") {
                    ++i_;
                    Value v = expr();
                    expect(")");
                    return v;
                }
                throw ParseError("unexpected '" + t.text + "'", t.pos);
            case Tok::end: break;
        }
        throw ParseError("unexpected end of input", t.pos);
    }

    std::vector<Token> toks_;
    std::size_t i_ = 0;
    OrderPtr order_;
};

bool starts_with_l(const std::string& s) { return !s.empty() && s.front() == 'l'; }

}  // namespace

bool natural_less(const std::string& a, const std::string& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        bool da = std::isdigit(static_cast<unsigned char>(a[i]));
        bool db = std::isdigit(static_cast<unsigned char>(b[j]));
        if (da && db) {
            std::size_t ie = i, je = j;
            while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie]))) ++ie;
            while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je]))) ++je;
            std::string na = a.substr(i, ie - i), nb = b.substr(j, je - j);
            na.erase(0, std::min(na.find_first_not_of('0'), na.size()));
            nb.erase(0, std::min(nb.find_first_not_of('0'), nb.size()));
            if (na.size() != nb.size()) return na.size() < nb.size();
            if (na != nb) return na < nb;
            i = ie;
            j = je;
        } else {
            if (a[i] != b[j]) return a[i] < b[j];
            ++i;
            ++j;
        }
    }
    if ((a.size() - i) != (b.size() - j)) return a.size() - i < b.size() - j;
    return a < b;
}

std::vector<std::string> identifiers(const std::string& text) {
    std::vector<std::string> out;
    std::set<std::string> seen;
    for (const auto& t : tokenize(text))
        if (t.kind == Tok::ident && seen.insert(t.text).second) out.push_back(t.text);
    return out;
}

OrderPtr resolve_order(const std::vector<std::string>& idents, const ParseOptions& opts) {
    std::vector<std::string> lambdas;
    std::vector<std::string> params;
    if (!opts.order.empty()) {
        std::set<std::string> in_order(opts.order.begin(), opts.order.end());
        if (in_order.size() != opts.order.size()) throw Error("--order lists a variable twice");
        for (const auto& l : opts.lambdas)
            if (!in_order.count(l)) throw Error("lambda '" + l + "' is not in --order");
        std::set<std::string> lset(opts.lambdas.begin(), opts.lambdas.end());
        std::vector<Symbol> vars, lams;
        for (const auto& v : opts.order) {
            vars.emplace_back(v);
            bool is_lam = opts.lambdas.empty() ? starts_with_l(v) : lset.count(v) > 0;
            if (is_lam) lams.emplace_back(v);
        }
        return std::make_shared<const VariableOrder>(std::move(vars), std::move(lams));
    }
    std::set<std::string> lset(opts.lambdas.begin(), opts.lambdas.end());
    for (const auto& v : idents) {
        bool is_lam = opts.lambdas.empty() ? starts_with_l(v) : lset.count(v) > 0;
        (is_lam ? lambdas : params).push_back(v);
    }
    for (const auto& l : opts.lambdas)
        if (std::find(lambdas.begin(), lambdas.end(), l) == lambdas.end()) lambdas.push_back(l);
    std::sort(lambdas.begin(), lambdas.end(), natural_less);
    std::sort(params.begin(), params.end(), natural_less);
    return std::make_shared<const VariableOrder>(VariableOrder::make(lambdas, params));
}

ElliottRational parse(const std::string& text, const OrderPtr& order) { return Parser(text, order).run(); }

ElliottRational parse(const std::string& text, const ParseOptions& opts) {
    return parse(text, resolve_order(identifiers(text), opts));
}

}  // namespace omega::cli
