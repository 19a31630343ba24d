#include "omega/omega.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "omega/print.hpp"

namespace omega {

namespace {

int floor_div(int n, int a) {
    int q = n / a;
    if ((n % a != 0) && ((n < 0) != (a < 0))) --q;
    return q;
}

int lambda_exponent(const Factor& f, Symbol lam) { return f.mono.exponent(lam); }

LaurentPolynomial lambda_power(Symbol lam, int k) { return LaurentPolynomial(Monomial::var(lam, k)); }

LaurentPolynomial expand_all(const std::vector<Factor>& fs) {
    LaurentPolynomial p(1);
    for (const auto& f : fs) p *= f.expanded();
    return p;
}

void append(std::vector<Factor>& to, const std::vector<Factor>& from) {
    to.insert(to.end(), from.begin(), from.end());
}

std::vector<Factor> powered(const std::vector<Factor>& fs, int k) {
    auto out = fs;
    for (auto& f : out) f.mult *= k;
    return out;
}

// Polynomial division in lam: num = q * div + r with deg r < deg div.
// The top coefficient of div must be a single term.
std::pair<LaurentPolynomial, LaurentPolynomial> divmod_in(const LaurentPolynomial& num,
                                                          const LaurentPolynomial& div, Symbol lam) {
    auto dparts = div.collect(lam);
    int ddeg = dparts.rbegin()->first;
    const auto& lead = dparts.rbegin()->second;
    if (!lead.is_term()) throw std::logic_error("divmod_in: leading coefficient is not a term");
    const auto& [lead_m, lead_c] = *lead.terms().begin();
    Rational inv_c = 1 / lead_c;
    Monomial inv_m = lead_m.inverse();

    auto rem = num.collect(lam);
    std::map<int, LaurentPolynomial> quot;
    while (!rem.empty()) {
        auto top = std::prev(rem.end());
        int d = top->first;
        if (d < ddeg) break;
        LaurentPolynomial q = top->second.scaled(inv_c, inv_m);
        int shift = d - ddeg;
        for (const auto& [k, coeff] : dparts) {
            auto& slot = rem[k + shift];
            slot -= q * coeff;
            if (slot.is_zero()) rem.erase(k + shift);
        }
        quot[shift] += q;
    }
    return {LaurentPolynomial::from_collected(quot, lam), LaurentPolynomial::from_collected(rem, lam)};
}

// A polynomial congruent to p modulo f^k with lam-degree below k * deg f.
LaurentPolynomial reduce_mod_power(const LaurentPolynomial& p, const Factor& f, int k, Symbol lam) {
    if (k <= 0) return {};
    if (p.is_zero() || p.max_degree(lam) < k * f.mono.exponent(lam)) return p;
    return divmod_in(p, Factor(f.coeff, f.mono, k).expanded(), lam).second;
}

// One lambda, normalized: numerator lam^-s * N(lam), lam-free scalars and
// factors with positive lam exponent.
class Decomposition {
public:
    Decomposition(const ElliottRational& e, Symbol lam) : lam_(lam), order_(e.order_ptr()) {
        normalized_ = normalize_in(e, lam);
        for (const auto& f : normalized_.denominator()) {
            if (lambda_exponent(f, lam) > 0)
                lambda_factors_.push_back(f);
            else
                scalars_.push_back(f);
        }
        const auto& num = normalized_.numerator();
        s_ = std::max(0, -num.min_degree(lam));
        numer_ = num * lambda_power(lam, s_);
        q_ = expand_all(lambda_factors_);
    }

    const ElliottRational& normalized() const { return normalized_; }
    const std::vector<Factor>& lambda_factors() const { return lambda_factors_; }
    int pole_order() const { return s_; }

    // N = P * lam^s Q + R
    void divide() {
        if (divided_) return;
        auto [p, r] = divmod_in(numer_, q_ * lambda_power(lam_, s_), lam_);
        poly_ = std::move(p);
        rem_ = std::move(r);
        divided_ = true;
    }

    ElliottRational poly_part() {
        divide();
        return ElliottRational(poly_, scalars_, order_);
    }

    LaurentPolynomial pole_numerator() {
        divide();
        if (s_ == 0) return {};
        // p = R / Q mod lam^s; Q has constant term 1 in lam
        auto rparts = rem_.collect(lam_);
        auto qparts = q_.collect(lam_);
        std::map<int, LaurentPolynomial> p;
        for (int k = 0; k < s_; ++k) {
            LaurentPolynomial c;
            if (auto it = rparts.find(k); it != rparts.end()) c = it->second;
            for (int j = 1; j <= k; ++j) {
                auto qi = qparts.find(j);
                auto pi = p.find(k - j);
                if (qi != qparts.end() && pi != p.end()) c -= qi->second * pi->second;
            }
            if (!c.is_zero()) p[k] = std::move(c);
        }
        return LaurentPolynomial::from_collected(p, lam_);
    }

    // A_ij for j = mult..1 of lambda factor i.
    std::vector<Residue> residues(std::size_t i) {
        divide();
        const Factor& f = lambda_factors_[i];
        ModInverse inv{LaurentPolynomial(1), {}};
        std::vector<Factor> others;
        for (std::size_t k = 0; k < lambda_factors_.size(); ++k) {
            if (k == i) continue;
            const Factor& g = lambda_factors_[k];
            others.push_back(g);
            ModInverse h = invert_mod(g.binomial(), f, lam_);
            inv.num = reduce_mod(inv.num * h.num.pow(static_cast<unsigned>(g.mult)), f, lam_);
            append(inv.den, powered(h.den, g.mult));
        }
        LaurentPolynomial shift = reduce_mod(lambda_power(lam_, -s_), f, lam_);
        LaurentPolynomial multiplier = reduce_mod(inv.num * shift, f, lam_);

        // Residues at levels <= j only depend on the numerator modulo f^j.
        std::vector<Residue> out;
        LaurentPolynomial current = reduce_mod_power(rem_, f, f.mult, lam_);
        std::vector<Factor> current_den;
        const LaurentPolynomial inv_den = expand_all(inv.den);
        const LaurentPolynomial shifted_others =
            f.mult > 1 ? reduce_mod_power(expand_all(others) * lambda_power(lam_, s_), f, f.mult, lam_)
                       : LaurentPolynomial(1);
        for (int level = f.mult; level >= 1; --level) {
            LaurentPolynomial a = reduce_mod(reduce_mod(current, f, lam_) * multiplier, f, lam_);
            std::vector<Factor> den = current_den;
            append(den, inv.den);
            std::vector<Factor> full_den = den;
            append(full_den, scalars_);
            out.push_back({Factor(f.coeff, f.mono, level), level, ElliottRational(a, full_den, order_)});
            if (level == 1) break;
            // peel: current/(D lam^s f^level O) - a/(D Dinv f^level)
            LaurentPolynomial next = current * inv_den - a * shifted_others;
            auto q = divide_by_binomial(reduce_mod_power(next, f, level, lam_), f.coeff, f.mono);
            if (!q) throw std::logic_error("residue peeling left a non-divisible remainder");
            current = reduce_mod_power(*q, f, level - 1, lam_);
            current_den = std::move(den);
        }
        return out;
    }

    const std::vector<Factor>& scalars() const { return scalars_; }

private:
    Symbol lam_;
    OrderPtr order_;
    ElliottRational normalized_;
    std::vector<Factor> lambda_factors_;
    std::vector<Factor> scalars_;
    int s_ = 0;
    LaurentPolynomial numer_;
    LaurentPolynomial q_;
    bool divided_ = false;
    LaurentPolynomial poly_;
    LaurentPolynomial rem_;
};

ElliottRational at_one(const ElliottRational& e, Symbol lam) {
    Bindings b{{lam, ScaledMonomial{1, Monomial{}}}};
    return substitute(e, b);
}

// A(1) / (1 - c u)^j
ElliottRational contribution(const Residue& r, Symbol lam, const OrderPtr& order) {
    Bindings b{{lam, ScaledMonomial{1, Monomial{}}}};
    LaurentPolynomial num = r.value.numerator().substitute(b);
    Monomial u = r.factor.mono.without(lam);
    if (u.is_one() && r.factor.coeff == 1) {
        if (num.is_zero()) return ElliottRational({}, {}, order);
        throw DivergenceError("divergent: Omega sum is infinite at factor " +
                              to_string(Factor(r.factor.coeff, r.factor.mono, 1), *order));
    }
    auto den = r.value.denominator();
    den.emplace_back(r.factor.coeff, u, r.level);
    return ElliottRational(std::move(num), std::move(den), order);
}

bool exists_at_one(const Decomposition& d, Symbol lam) {
    for (const auto& f : d.lambda_factors())
        if (f.coeff == 1 && f.mono.without(lam).is_one()) return false;
    return true;
}

}  // namespace

// ---------------------------------------------------------------------------

LaurentPolynomial reduce_mod(const LaurentPolynomial& p, const Factor& f, Symbol lam) {
    const int a = lambda_exponent(f, lam);
    if (a <= 0) throw std::invalid_argument("reduce_mod: factor must have positive exponent in " + lam.name());
    const Monomial u = f.mono.without(lam);
    LaurentPolynomial r;
    for (const auto& [m, c] : p.terms()) {
        int n = m.exponent(lam);
        int q = floor_div(n, a);
        int rem = n - q * a;
        if (q == 0) {
            r.add_term(c, m);
            continue;
        }
        Monomial mono = m.without(lam) * u.pow(-q) * Monomial::var(lam, rem);
        r.add_term(c * rational_pow(f.coeff, -q), mono);
    }
    return r;
}

ModInverse invert_mod(const LaurentPolynomial& g, const Factor& f, Symbol lam) {
    const VariableOrder none;
    if (g.is_zero()) throw ZeroDivisorError("invert_mod: zero is not invertible");
    if (g.size() > 2) throw Error("invert_mod: only binomial units are supported");
    auto it = g.terms().begin();
    const Rational alpha = it->second;
    const Monomial m1 = it->first;
    LaurentPolynomial unit_inv = reduce_mod(LaurentPolynomial(1 / alpha, m1.inverse()), f, lam);
    if (g.size() == 1) return {unit_inv, {}};

    ++it;
    // g = alpha*m1 * (1 - d*V)
    const Rational d = -it->second / alpha;
    const Monomial big_v = it->first / m1;
    const int a = lambda_exponent(f, lam);
    const int b = big_v.exponent(lam);
    const int n = a / std::gcd(a, std::abs(b));

    LaurentPolynomial x = reduce_mod(LaurentPolynomial(d, big_v), f, lam);
    LaurentPolynomial geometric(1);
    LaurentPolynomial power(1);
    for (int t = 1; t < n; ++t) {
        power = reduce_mod(power * x, f, lam);
        geometric += power;
    }
    LaurentPolynomial xn = reduce_mod(power * x, f, lam);
    if (!xn.is_term() || xn.contains(lam))
        throw std::logic_error("invert_mod: X^N did not reduce to a lambda-free term");
    const auto& [w, kappa] = *xn.terms().begin();

    ModInverse out;
    out.num = reduce_mod(geometric * unit_inv, f, lam);
    if (w.is_one()) {
        if (kappa == 1)
            throw ZeroDivisorError("hidden common root between denominator factors " +
                                   to_string(g, none) + " and " + to_string(f, none));
        out.num = out.num.scaled(1 / (1 - kappa), Monomial{});
    } else {
        out.den.emplace_back(kappa, w, 1);
    }
    return out;
}

PartialFractionResult partial_fractions(const ElliottRational& e, Symbol lam) {
    Decomposition d(e, lam);
    PartialFractionResult out;
    out.lambda = lam;
    out.poly_part = d.poly_part();
    out.pole_order = d.pole_order();
    out.pole_numerator = ElliottRational(d.pole_numerator(), d.scalars(), e.order_ptr());
    for (std::size_t i = 0; i < d.lambda_factors().size(); ++i) {
        auto rs = d.residues(i);
        out.residues.insert(out.residues.end(), rs.begin(), rs.end());
    }
    return out;
}

ElliottRational reassemble(const PartialFractionResult& pf, const OrderPtr& order) {
    std::vector<ElliottRational> parts;
    parts.push_back(pf.poly_part.with_order(order));
    parts.push_back(scale(pf.pole_numerator.with_order(order), lambda_power(pf.lambda, -pf.pole_order)));
    for (const auto& r : pf.residues) {
        auto den = r.value.denominator();
        den.push_back(r.factor);
        parts.emplace_back(r.value.numerator(), std::move(den), order);
    }
    return sum(parts, order);
}

ElliottRational omega_eliminate_one(const ElliottRational& e, Symbol lam, Mode mode, TraceStep* step) {
    const OrderPtr& order = e.order_ptr();
    if (!e.contains(lam)) {
        if (step) *step = TraceStep{lam, Mode::direct, {}, e, e};
        return e;
    }
    Decomposition d(e, lam);
    const auto& fs = d.lambda_factors();
    std::vector<bool> small(fs.size());
    std::size_t n_small = 0;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        small[i] = is_small(fs[i].mono, e.order());
        n_small += small[i] ? 1 : 0;
    }
    const std::size_t n_large = fs.size() - n_small;

    bool want_dual = mode == Mode::dual || (mode == Mode::automatic && n_large < n_small);
    if (want_dual) {
        bool pole_free = d.pole_order() == 0 || d.pole_numerator().is_zero();
        want_dual = pole_free && exists_at_one(d, lam);
    }

    std::vector<ElliottRational> terms;
    std::vector<Factor> underlined;
    if (want_dual) {
        terms.push_back(at_one(d.normalized(), lam));
        for (std::size_t i = 0; i < fs.size(); ++i) {
            if (small[i]) continue;
            underlined.push_back(fs[i]);
            for (const auto& r : d.residues(i))
                terms.push_back(scale(contribution(r, lam, order), LaurentPolynomial(-1)));
        }
    } else {
        auto p = d.poly_part();
        if (!p.is_zero()) terms.push_back(at_one(p, lam));
        for (std::size_t i = 0; i < fs.size(); ++i) {
            if (!small[i]) continue;
            underlined.push_back(fs[i]);
            for (const auto& r : d.residues(i)) terms.push_back(contribution(r, lam, order));
        }
    }
    ElliottRational result = sum(terms, order);
    if (step) *step = TraceStep{lam, want_dual ? Mode::dual : Mode::direct, underlined, d.normalized(), result};
    return result;
}

std::pair<ElliottRational, TraceLog> omega_eliminate_all(const ElliottRational& e,
                                                         const EliminationStrategy& strategy) {
    TraceLog log;
    ElliottRational current = e;
    auto present = e.lambdas_present();
    if (!strategy.lambda_order.empty()) {
        auto want = strategy.lambda_order;
        auto have = present;
        std::sort(want.begin(), want.end());
        std::sort(have.begin(), have.end());
        if (std::adjacent_find(want.begin(), want.end()) != want.end() || want != have)
            throw std::invalid_argument("elimination order must list exactly the lambda variables present");
        for (Symbol lam : strategy.lambda_order) {
            if (!current.contains(lam)) continue;
            TraceStep step;
            current = omega_eliminate_one(current, lam, strategy.mode, &step);
            log.steps.push_back(std::move(step));
        }
        return {current, log};
    }
    while (true) {
        auto rows = classify(current);
        if (rows.empty()) break;
        const ClassificationRow* best = &rows.front();
        for (const auto& r : rows)
            if (std::min(r.c_num, r.dc_num) < std::min(best->c_num, best->dc_num)) best = &r;
        TraceStep step;
        current = omega_eliminate_one(current, best->lambda, strategy.mode, &step);
        log.steps.push_back(std::move(step));
    }
    return {current, log};
}

ElliottRational replay(const ElliottRational& input, const TraceLog& log) {
    ElliottRational current = input;
    for (const auto& s : log.steps) {
        current = omega_eliminate_one(current, s.lambda, s.mode);
        if (!rational_equal(current, s.result))
            throw std::logic_error("trace replay diverged at " + s.lambda.name());
    }
    return current;
}

const char* mode_name(Mode m) {
    switch (m) {
        case Mode::direct: return "direct";
        case Mode::dual: return "dual";
        case Mode::automatic: return "auto";
    }
    return "?";
}

}  // namespace omega
