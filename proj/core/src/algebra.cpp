#include "omega/algebra.hpp"

#include <algorithm>
#include <deque>
#include <mutex>

namespace omega {

namespace {

struct SymbolTable {
    std::mutex mutex;
    std::deque<std::string> names;
    std::unordered_map<std::string, std::uint32_t> ids;
};

SymbolTable& symbol_table() {
    static SymbolTable table;
    return table;
}

}  // namespace

Symbol::Symbol(std::string_view name) {
    auto& t = symbol_table();
    std::lock_guard lock(t.mutex);
    auto it = t.ids.find(std::string(name));
    if (it != t.ids.end()) {
        id_ = it->second;
        return;
    }
    id_ = static_cast<std::uint32_t>(t.names.size());
    t.names.emplace_back(name);
    t.ids.emplace(t.names.back(), id_);
}

const std::string& Symbol::name() const {
    auto& t = symbol_table();
    std::lock_guard lock(t.mutex);
    // deque never relocates existing elements
    return t.names.at(id_);
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::initializer_list<Entry> entries) {
    for (const auto& [s, e] : entries) *this *= var(s, e);
}

Monomial Monomial::var(Symbol s, int exp) {
    Monomial m;
    if (exp != 0) m.entries_.emplace_back(s, exp);
    return m;
}

int Monomial::exponent(Symbol s) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), s,
                               [](const Entry& e, Symbol v) { return e.first < v; });
    return (it != entries_.end() && it->first == s) ? it->second : 0;
}

Monomial Monomial::inverse() const {
    Monomial r = *this;
    for (auto& e : r.entries_) e.second = -e.second;
    return r;
}

Monomial Monomial::pow(int k) const {
    if (k == 0) return {};
    Monomial r = *this;
    for (auto& e : r.entries_) e.second *= k;
    return r;
}

Monomial Monomial::without(Symbol s) const {
    Monomial r;
    r.entries_.reserve(entries_.size());
    for (const auto& e : entries_)
        if (e.first != s) r.entries_.push_back(e);
    return r;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.entries_.reserve(a.entries_.size() + b.entries_.size());
    auto i = a.entries_.begin();
    auto j = b.entries_.begin();
    while (i != a.entries_.end() || j != b.entries_.end()) {
        if (j == b.entries_.end() || (i != a.entries_.end() && i->first < j->first)) {
            r.entries_.push_back(*i++);
        } else if (i == a.entries_.end() || j->first < i->first) {
            r.entries_.push_back(*j++);
        } else {
            int e = i->second + j->second;
            if (e != 0) r.entries_.emplace_back(i->first, e);
            ++i;
            ++j;
        }
    }
    return r;
}

// ----------------------------------------------------------- VariableOrder

VariableOrder::VariableOrder(std::vector<Symbol> vars, std::vector<Symbol> lambdas)
    : vars_(std::move(vars)), lambdas_(std::move(lambdas)) {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (!index_.emplace(vars_[i], i).second)
            throw std::invalid_argument("duplicate variable in order: " + vars_[i].name());
    }
    for (Symbol l : lambdas_) {
        if (!contains(l)) throw std::invalid_argument("lambda variable not in order: " + l.name());
        if (!lambda_flag_.emplace(l, true).second)
            throw std::invalid_argument("duplicate lambda variable: " + l.name());
    }
    // keep lambdas in order sequence
    std::sort(lambdas_.begin(), lambdas_.end(),
              [this](Symbol a, Symbol b) { return index_.at(a) < index_.at(b); });
}

VariableOrder VariableOrder::make(std::initializer_list<std::string_view> lambdas,
                                  std::initializer_list<std::string_view> params) {
    std::vector<std::string> l(lambdas.begin(), lambdas.end());
    std::vector<std::string> p(params.begin(), params.end());
    return make(l, p);
}

VariableOrder VariableOrder::make(const std::vector<std::string>& lambdas,
                                  const std::vector<std::string>& params) {
    std::vector<Symbol> vars;
    std::vector<Symbol> ls;
    for (const auto& n : lambdas) {
        vars.emplace_back(n);
        ls.emplace_back(n);
    }
    for (const auto& n : params) vars.emplace_back(n);
    return VariableOrder(std::move(vars), std::move(ls));
}

std::vector<Symbol> VariableOrder::parameters() const {
    std::vector<Symbol> out;
    for (Symbol s : vars_)
        if (!is_lambda(s)) out.push_back(s);
    return out;
}

bool VariableOrder::is_lambda(Symbol s) const { return lambda_flag_.count(s) != 0; }

std::size_t VariableOrder::rank(Symbol s) const {
    auto it = index_.find(s);
    return it == index_.end() ? vars_.size() + s.id() : it->second;
}

int VariableOrder::parameter_degree(const Monomial& m) const {
    int d = 0;
    for (const auto& [s, e] : m.entries())
        if (!is_lambda(s)) d += e;
    return d;
}

// ------------------------------------------------------------------ order

namespace {

// Exponent entries sorted by position in the order.
std::vector<Monomial::Entry> ordered_entries(const Monomial& m, const VariableOrder& order) {
    auto v = m.entries();
    std::sort(v.begin(), v.end(),
              [&](const auto& a, const auto& b) { return order.rank(a.first) < order.rank(b.first); });
    return v;
}

}  // namespace

bool is_small(const Monomial& m, const VariableOrder& order) {
    if (m.is_one()) throw Error("unit monomial is neither small nor large");
    int d = order.parameter_degree(m);
    if (d != 0) return d > 0;
    auto v = ordered_entries(m, order);
    for (const auto& [s, e] : v)
        if (!order.is_lambda(s)) return e > 0;
    return v.front().second > 0;
}

bool lex_before(const Monomial& a, const Monomial& b, const VariableOrder& order) {
    auto va = ordered_entries(a, order);
    auto vb = ordered_entries(b, order);
    // Compare dense exponent vectors without materializing them.
    std::size_t i = 0, j = 0;
    while (i < va.size() || j < vb.size()) {
        std::size_t ra = i < va.size() ? order.rank(va[i].first) : SIZE_MAX;
        std::size_t rb = j < vb.size() ? order.rank(vb[j].first) : SIZE_MAX;
        if (ra == rb) {
            if (va[i].second != vb[j].second) return va[i].second > vb[j].second;
            ++i;
            ++j;
        } else if (ra < rb) {
            return va[i].second > 0;
        } else {
            return vb[j].second < 0;
        }
    }
    return false;
}

// -------------------------------------------------------- LaurentPolynomial

LaurentPolynomial::LaurentPolynomial(const Rational& c) {
    if (c != 0) terms_.emplace(Monomial{}, c);
}

LaurentPolynomial::LaurentPolynomial(const Rational& c, const Monomial& m) {
    if (c != 0) terms_.emplace(m, c);
}

bool LaurentPolynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational LaurentPolynomial::constant_term() const { return coefficient(Monomial{}); }

Rational LaurentPolynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPolynomial::add_term(const Rational& c, const Monomial& m) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(c, m);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(-c, m);
    return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial r;
    if (a.is_zero() || b.is_zero()) return r;
    Rational prod;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            prod = ca * cb;
            r.add_term(prod, ma * mb);
        }
    }
    return r;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

LaurentPolynomial LaurentPolynomial::scaled(const Rational& c, const Monomial& m) const {
    LaurentPolynomial r;
    if (c == 0) return r;
    // multiplication by a fixed monomial is injective on keys
    for (const auto& [mm, cc] : terms_) r.terms_.emplace(mm * m, cc * c);
    return r;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned k) const {
    LaurentPolynomial result(1);
    LaurentPolynomial base = *this;
    while (k) {
        if (k & 1u) result *= base;
        k >>= 1u;
        if (k) base *= base;
    }
    return result;
}

int LaurentPolynomial::min_degree(Symbol s) const {
    if (terms_.empty()) return 0;
    int d = INT32_MAX;
    for (const auto& [m, c] : terms_) d = std::min(d, m.exponent(s));
    return d;
}

int LaurentPolynomial::max_degree(Symbol s) const {
    if (terms_.empty()) return 0;
    int d = INT32_MIN;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(s));
    return d;
}

bool LaurentPolynomial::contains(Symbol s) const {
    for (const auto& [m, c] : terms_)
        if (m.contains(s)) return true;
    return false;
}

std::map<int, LaurentPolynomial> LaurentPolynomial::collect(Symbol s) const {
    std::map<int, LaurentPolynomial> out;
    for (const auto& [m, c] : terms_) out[m.exponent(s)].add_term(c, m.without(s));
    return out;
}

LaurentPolynomial LaurentPolynomial::from_collected(const std::map<int, LaurentPolynomial>& parts,
                                                    Symbol s) {
    LaurentPolynomial r;
    for (const auto& [d, p] : parts) {
        Monomial shift = Monomial::var(s, d);
        for (const auto& [m, c] : p.terms()) r.add_term(c, m * shift);
    }
    return r;
}

LaurentPolynomial LaurentPolynomial::substitute(const Bindings& b) const {
    LaurentPolynomial r;
    for (const auto& [m, c] : terms_) {
        Rational coeff = c;
        Monomial mono;
        for (const auto& [s, e] : m.entries()) {
            auto it = b.find(s);
            if (it == b.end()) {
                mono *= Monomial::var(s, e);
                continue;
            }
            if (it->second.coeff == 0) throw Error("substitution maps " + s.name() + " to zero");
            coeff *= rational_pow(it->second.coeff, e);
            mono *= it->second.mono.pow(e);
        }
        r.add_term(coeff, mono);
    }
    return r;
}

LaurentPolynomial poly_arith(const LaurentPolynomial& a, const LaurentPolynomial& b, PolyOp op) {
    switch (op) {
        case PolyOp::add: return a + b;
        case PolyOp::sub: return a - b;
        case PolyOp::mul: return a * b;
    }
    return {};
}

Rational rational_pow(const Rational& base, int exp) {
    if (exp == 0) return 1;
    if (base == 0) {
        if (exp < 0) throw Error("division by zero in rational power");
        return 0;
    }
    unsigned k = static_cast<unsigned>(exp < 0 ? -exp : exp);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), k);
    Rational r = exp > 0 ? Rational(num, den) : Rational(den, num);
    r.canonicalize();
    return r;
}

}  // namespace omega
