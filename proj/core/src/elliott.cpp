#include "omega/elliott.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <unordered_map>

namespace omega {

namespace {

using FactorKey = std::pair<Monomial, Rational>;

FactorKey key_of(const Factor& f) { return {f.mono, f.coeff}; }

// (-c*M)^-k as a single term
LaurentPolynomial flip_unit(const Rational& c, const Monomial& m, int k) {
    return LaurentPolynomial(rational_pow(-c, -k), m.pow(-k));
}

Factor flipped(const Factor& f) { return Factor(1 / f.coeff, f.mono.inverse(), f.mult); }

void require_same_order(const ElliottRational& a, const ElliottRational& b) {
    if (a.order_ptr() != b.order_ptr() && !(a.order() == b.order()))
        throw std::invalid_argument("rational functions use different variable orders");
}

// Arithmetic modulo the Mersenne prime 2^61 - 1.
class ModP {
public:
    static constexpr std::uint64_t P = (std::uint64_t{1} << 61) - 1;

    static std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
        unsigned __int128 r = static_cast<unsigned __int128>(a) * b;
        std::uint64_t lo = static_cast<std::uint64_t>(r & P), hi = static_cast<std::uint64_t>(r >> 61);
        std::uint64_t s = lo + hi;
        return s >= P ? s - P : s;
    }
    static std::uint64_t add(std::uint64_t a, std::uint64_t b) {
        std::uint64_t s = a + b;
        return s >= P ? s - P : s;
    }
    static std::uint64_t pow(std::uint64_t a, std::uint64_t e) {
        std::uint64_t r = 1;
        for (; e; e >>= 1, a = mul(a, a))
            if (e & 1) r = mul(r, a);
        return r;
    }
    static std::uint64_t inv(std::uint64_t a) { return pow(a, P - 2); }
    static std::uint64_t pow_signed(std::uint64_t a, int e) { return e >= 0 ? pow(a, e) : inv(pow(a, -e)); }

    /// nullopt when the denominator vanishes mod P.
    static std::optional<std::uint64_t> of(const Rational& q) {
        std::uint64_t n = mpz_fdiv_ui(q.get_num_mpz_t(), P);
        std::uint64_t d = mpz_fdiv_ui(q.get_den_mpz_t(), P);
        if (d == 0) return std::nullopt;
        return mul(n, inv(d));
    }
};

// False only when 1 - cM certainly does not divide p: p is evaluated mod P at
// a random point with cM = 1. Divisibility would force the value to vanish
// because the quotient stays integral wherever c and p are.
bool may_divide(const LaurentPolynomial& p, const Rational& c, const Monomial& m) {
    // solve for a variable of exponent +-1 in m; other variables are random
    const Monomial::Entry* pivot = nullptr;
    for (const auto& e : m.entries())
        if (e.second == 1 || e.second == -1) pivot = &e;
    auto cm = ModP::of(c);
    if (!pivot || !cm || *cm == 0) return true;

    std::mt19937_64 rng(0x5eed ^ p.size());
    std::unordered_map<Symbol, std::uint64_t, SymbolHash> value;
    auto value_of = [&](Symbol s) {
        auto [it, fresh] = value.try_emplace(s, 0);
        if (fresh) it->second = 2 + rng() % (ModP::P - 3);
        return it->second;
    };
    std::uint64_t rest = *cm;
    for (const auto& [s, e] : m.entries())
        if (s != pivot->first) rest = ModP::mul(rest, ModP::pow_signed(value_of(s), e));
    // pivot^e * rest = 1
    std::uint64_t pv = ModP::inv(rest);
    if (pivot->second == -1) pv = ModP::inv(pv);
    value[pivot->first] = pv;

    std::uint64_t acc = 0;
    for (const auto& [mono, coeff] : p.terms()) {
        auto cv = ModP::of(coeff);
        if (!cv) return true;
        std::uint64_t t = *cv;
        for (const auto& [s, e] : mono.entries()) t = ModP::mul(t, ModP::pow_signed(value_of(s), e));
        acc = ModP::add(acc, t);
    }
    return acc == 0;
}

}  // namespace

// ------------------------------------------------------------------ Factor

Factor::Factor(Rational c, Monomial m, int k) : coeff(std::move(c)), mono(std::move(m)), mult(k) {
    if (coeff == 0) throw std::invalid_argument("factor coefficient must be nonzero");
    if (mult < 1) throw std::invalid_argument("factor multiplicity must be positive");
}

LaurentPolynomial Factor::binomial() const {
    LaurentPolynomial p(1);
    p.add_term(-coeff, mono);
    return p;
}

LaurentPolynomial Factor::expanded() const { return binomial().pow(static_cast<unsigned>(mult)); }

bool factor_key_less(const Factor& a, const Factor& b) {
    if (a.mono != b.mono) return a.mono < b.mono;
    return a.coeff < b.coeff;
}

// --------------------------------------------------------- ElliottRational

ElliottRational::ElliottRational(LaurentPolynomial numerator, std::vector<Factor> denominator,
                                 OrderPtr order)
    : num_(std::move(numerator)), order_(std::move(order)) {
    if (!order_) order_ = std::make_shared<const VariableOrder>();
    std::map<FactorKey, int> merged;
    for (auto& f : denominator) {
        if (f.mono.is_one()) {
            Rational k = 1 - f.coeff;
            if (k == 0) throw PoleError("pole under substitution: factor (1 - 1)");
            num_ = num_.scaled(rational_pow(k, -f.mult), Monomial{});
            continue;
        }
        merged[key_of(f)] += f.mult;
    }
    if (num_.is_zero()) return;
    den_.reserve(merged.size());
    for (auto& [k, m] : merged) den_.emplace_back(k.second, k.first, m);
}

std::vector<Symbol> ElliottRational::lambdas_present() const {
    std::vector<Symbol> out;
    for (Symbol l : order_->lambdas()) {
        bool found = num_.contains(l);
        for (const auto& f : den_) found = found || f.mono.contains(l);
        if (found) out.push_back(l);
    }
    return out;
}

bool ElliottRational::contains(Symbol s) const {
    if (num_.contains(s)) return true;
    return std::any_of(den_.begin(), den_.end(), [&](const Factor& f) { return f.mono.contains(s); });
}

LaurentPolynomial ElliottRational::expanded_denominator() const {
    LaurentPolynomial d(1);
    for (const auto& f : den_) d *= f.expanded();
    return d;
}

int ElliottRational::total_multiplicity() const {
    int t = 0;
    for (const auto& f : den_) t += f.mult;
    return t;
}

ElliottRational ElliottRational::with_order(OrderPtr order) const {
    ElliottRational r = *this;
    r.order_ = std::move(order);
    return r;
}

// --------------------------------------------------------------- canonical

ElliottRational canonicalize(const ElliottRational& e) {
    LaurentPolynomial num = e.numerator();
    std::vector<Factor> den;
    den.reserve(e.denominator().size());
    for (const auto& f : e.denominator()) {
        if (is_small(f.mono, e.order())) {
            den.push_back(f);
        } else {
            num *= flip_unit(f.coeff, f.mono, f.mult);
            den.push_back(flipped(f));
        }
    }
    return ElliottRational(std::move(num), std::move(den), e.order_ptr());
}

std::optional<LaurentPolynomial> divide_by_binomial(const LaurentPolynomial& p, const Rational& c,
                                                    const Monomial& m) {
    if (m.is_one()) {
        if (c == 1) return std::nullopt;
        return p.scaled(1 / (1 - c), Monomial{});
    }
    if (p.is_zero()) return p;
    if (!may_divide(p, c, m)) return std::nullopt;
    Symbol v = m.entries().front().first;
    int e = m.entries().front().second;
    if (e < 0) {
        // 1 - cM = (-cM)(1 - c^-1 M^-1)
        auto q = divide_by_binomial(p, 1 / c, m.inverse());
        if (!q) return std::nullopt;
        return q->scaled(-1 / c, m.inverse());
    }
    Monomial w = m.without(v);
    Rational lead_inv = -1 / c;
    Monomial w_inv = w.inverse();

    auto parts = p.collect(v);
    const int low = parts.begin()->first;
    std::map<int, LaurentPolynomial> quotient;
    while (!parts.empty()) {
        auto top = std::prev(parts.end());
        int d = top->first;
        if (d < low + e) break;
        LaurentPolynomial q = top->second.scaled(lead_inv, w_inv);
        parts.erase(top);
        auto& below = parts[d - e];
        below -= q;
        if (below.is_zero()) parts.erase(d - e);
        quotient[d - e] += q;
    }
    if (!parts.empty()) return std::nullopt;
    return LaurentPolynomial::from_collected(quotient, v);
}

ElliottRational cancel_common(const ElliottRational& e) {
    if (e.is_zero()) return e;
    LaurentPolynomial num = e.numerator();
    std::vector<Factor> den;
    for (const auto& f : e.denominator()) {
        int k = f.mult;
        while (k > 0) {
            auto q = divide_by_binomial(num, f.coeff, f.mono);
            if (!q) break;
            num = std::move(*q);
            --k;
        }
        if (k > 0) den.emplace_back(f.coeff, f.mono, k);
    }
    return ElliottRational(std::move(num), std::move(den), e.order_ptr());
}

ElliottRational normalize_in(const ElliottRational& e, Symbol lam) {
    LaurentPolynomial num = e.numerator();
    std::vector<Factor> den;
    den.reserve(e.denominator().size());
    for (const auto& f : e.denominator()) {
        if (f.mono.exponent(lam) < 0) {
            num *= flip_unit(f.coeff, f.mono, f.mult);
            den.push_back(flipped(f));
        } else {
            den.push_back(f);
        }
    }
    return ElliottRational(std::move(num), std::move(den), e.order_ptr());
}

std::vector<ClassificationRow> classify(const ElliottRational& e) {
    std::vector<ClassificationRow> rows;
    for (Symbol lam : e.lambdas_present()) {
        ClassificationRow row;
        row.lambda = lam;
        for (const auto& f : e.denominator()) {
            int a = f.mono.exponent(lam);
            if (a == 0) continue;
            Monomial normalized = a > 0 ? f.mono : f.mono.inverse();
            if (is_small(normalized, e.order()))
                row.contributing.push_back(f);
            else
                row.dually_contributing.push_back(f);
        }
        row.c_num = row.contributing.size();
        row.dc_num = row.dually_contributing.size();
        const auto in_lam = normalize_in(e, lam);
        const auto& n = in_lam.numerator();
        row.numerator_degrees = {n.min_degree(lam), n.max_degree(lam)};
        rows.push_back(std::move(row));
    }
    return rows;
}

ElliottRational substitute(const ElliottRational& e, const Bindings& b) {
    LaurentPolynomial num = e.numerator().substitute(b);
    std::vector<Factor> den;
    den.reserve(e.denominator().size());
    for (const auto& f : e.denominator()) {
        auto image = LaurentPolynomial(f.coeff, f.mono).substitute(b);
        const auto& [m, c] = *image.terms().begin();
        den.emplace_back(c, m, f.mult);
    }
    return canonicalize(ElliottRational(std::move(num), std::move(den), e.order_ptr()));
}

// -------------------------------------------------------------- arithmetic

ElliottRational scale(const ElliottRational& a, const LaurentPolynomial& p) {
    return ElliottRational(a.numerator() * p, a.denominator(), a.order_ptr());
}

ElliottRational operator*(const ElliottRational& a, const ElliottRational& b) {
    require_same_order(a, b);
    auto den = a.denominator();
    den.insert(den.end(), b.denominator().begin(), b.denominator().end());
    return canonicalize(ElliottRational(a.numerator() * b.numerator(), std::move(den), a.order_ptr()));
}

namespace {

// a + b over the least common denominator of the two, then cancelled.
ElliottRational add_pair(const ElliottRational& a, const ElliottRational& b, const OrderPtr& order) {
    std::map<FactorKey, std::pair<int, int>> mults;
    for (const auto& f : a.denominator()) mults[key_of(f)].first = f.mult;
    for (const auto& f : b.denominator()) mults[key_of(f)].second = f.mult;
    LaurentPolynomial na = a.numerator(), nb = b.numerator();
    std::vector<Factor> den;
    for (const auto& [k, m] : mults) {
        int top = std::max(m.first, m.second);
        if (m.first < top) na *= Factor(k.second, k.first, top - m.first).expanded();
        if (m.second < top) nb *= Factor(k.second, k.first, top - m.second).expanded();
        den.emplace_back(k.second, k.first, top);
    }
    return cancel_common(ElliottRational(na + nb, std::move(den), order));
}

}  // namespace

ElliottRational sum(const std::vector<ElliottRational>& terms, const OrderPtr& order) {
    // Folding pairwise lets spurious factors cancel before the denominators
    // of later terms multiply into the numerator.
    ElliottRational acc({}, {}, order);
    for (const auto& t : terms) {
        if (t.is_zero()) continue;
        auto part = cancel_common(canonicalize(t).with_order(order));
        acc = acc.is_zero() ? part : add_pair(acc, part, order);
    }
    return acc;
}

ElliottRational operator+(const ElliottRational& a, const ElliottRational& b) {
    require_same_order(a, b);
    return sum({a, b}, a.order_ptr());
}

ElliottRational operator-(const ElliottRational& a, const ElliottRational& b) {
    require_same_order(a, b);
    return sum({a, scale(b, LaurentPolynomial(-1))}, a.order_ptr());
}

bool rational_equal(const ElliottRational& a, const ElliottRational& b) {
    require_same_order(a, b);
    auto ca = canonicalize(a);
    auto cb = canonicalize(b);
    if (ca.is_zero() || cb.is_zero()) return ca.is_zero() && cb.is_zero();
    std::map<FactorKey, int> da, db;
    for (const auto& f : ca.denominator()) da[key_of(f)] = f.mult;
    for (const auto& f : cb.denominator()) db[key_of(f)] = f.mult;
    LaurentPolynomial lhs = ca.numerator();
    LaurentPolynomial rhs = cb.numerator();
    for (const auto& [k, m] : db) {
        auto it = da.find(k);
        int extra = m - (it == da.end() ? 0 : std::min(m, it->second));
        if (extra > 0) lhs *= Factor(k.second, k.first, extra).expanded();
    }
    for (const auto& [k, m] : da) {
        auto it = db.find(k);
        int extra = m - (it == db.end() ? 0 : std::min(m, it->second));
        if (extra > 0) rhs *= Factor(k.second, k.first, extra).expanded();
    }
    return lhs == rhs;
}

}  // namespace omega
