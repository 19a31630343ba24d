#include "omega/oracle.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "omega/print.hpp"

namespace omega {

namespace {

struct Term {
    int deg;
    Monomial mono;
    Rational coeff;
};

using Series = std::vector<Term>;

Series to_series(const LaurentPolynomial& p, const VariableOrder& order) {
    Series s;
    s.reserve(p.size());
    for (const auto& [m, c] : p.terms()) s.push_back({order.parameter_degree(m), m, c});
    return s;
}

Series product(const Series& a, const Series& b, int max_deg) {
    std::map<Monomial, std::pair<int, Rational>> acc;
    for (const auto& x : a) {
        for (const auto& y : b) {
            int d = x.deg + y.deg;
            if (d > max_deg) continue;
            auto [it, fresh] = acc.try_emplace(x.mono * y.mono, d, Rational(0));
            it->second.second += x.coeff * y.coeff;
        }
    }
    Series out;
    out.reserve(acc.size());
    for (auto& [m, v] : acc)
        if (v.second != 0) out.push_back({v.first, m, std::move(v.second)});
    return out;
}

// 1/(1 - c M)^k through degree max_deg, deg M = step > 0:
// sum_n binom(n+k-1, k-1) c^n M^n
Series geometric(const Rational& c, const Monomial& m, int k, int step, int max_deg) {
    Series s;
    Rational cn = 1;
    mpz_class binom = 1;  // binom(n+k-1, k-1)
    for (int n = 0; n * step <= max_deg; ++n) {
        if (n > 0) {
            binom = binom * (n + k - 1) / n;
            cn *= c;
        }
        s.push_back({n * step, m.pow(n), Rational(binom) * cn});
    }
    return s;
}

}  // namespace

Rational SeriesTable::at(const Monomial& m) const {
    auto it = coeffs.find(m);
    return it == coeffs.end() ? Rational(0) : it->second;
}

SeriesTable expand(const ElliottRational& e, int d) {
    const auto& order = e.order();
    SeriesTable out{{}, d, e.order_ptr()};
    if (e.is_zero()) return out;

    // prefactor: numerator times the units pulled out of flipped factors
    LaurentPolynomial pre = e.numerator();
    std::vector<Factor> small;
    for (const auto& f : e.denominator()) {
        int deg = order.parameter_degree(f.mono);
        if (deg == 0) throw Error("oracle requires x-graded denominators: " + to_string(f, order));
        if (deg > 0) {
            small.push_back(f);
        } else {
            pre *= LaurentPolynomial(rational_pow(-f.coeff, -f.mult), f.mono.pow(-f.mult));
            small.emplace_back(1 / f.coeff, f.mono.inverse(), f.mult);
        }
    }
    Series acc = to_series(pre, order);
    int low = acc.front().deg;
    for (const auto& t : acc) low = std::min(low, t.deg);
    const int reach = d - low;  // geometric terms beyond this cannot land at degree <= d
    if (reach < 0) return out;

    Series geo{{0, Monomial{}, Rational(1)}};
    for (const auto& f : small) {
        int step = order.parameter_degree(f.mono);
        geo = product(geo, geometric(f.coeff, f.mono, f.mult, step, reach), reach);
    }
    for (auto& t : product(acc, geo, d)) out.coeffs.emplace(std::move(t.mono), std::move(t.coeff));
    return out;
}

SeriesTable omega_by_definition(const SeriesTable& t) {
    SeriesTable out{{}, t.degree_bound, t.order};
    const auto& order = *t.order;
    for (const auto& [m, c] : t.coeffs) {
        Monomial rest = m;
        bool keep = true;
        for (Symbol l : order.lambdas()) {
            if (m.exponent(l) < 0) {
                keep = false;
                break;
            }
            rest = rest.without(l);
        }
        if (!keep) continue;
        auto& slot = out.coeffs[rest];
        slot += c;
        if (slot == 0) out.coeffs.erase(rest);
    }
    return out;
}

std::optional<Mismatch> compare(const SeriesTable& expected, const SeriesTable& got) {
    if (expected.degree_bound != got.degree_bound)
        throw std::invalid_argument("series tables truncated at different degrees");
    std::vector<Monomial> keys;
    for (const auto& [m, c] : expected.coeffs) keys.push_back(m);
    for (const auto& [m, c] : got.coeffs)
        if (!expected.coeffs.count(m)) keys.push_back(m);
    const auto& order = *expected.order;
    std::sort(keys.begin(), keys.end(),
              [&](const Monomial& a, const Monomial& b) { return display_before(a, b, order); });
    for (const auto& m : keys) {
        Rational a = expected.at(m);
        Rational b = got.at(m);
        if (a != b) return Mismatch{m, a, b};
    }
    return std::nullopt;
}

VerifyResult verify(const ElliottRational& e, const ElliottRational& r, int d) {
    auto lhs = omega_by_definition(expand(e, d));
    auto rhs = expand(r.with_order(e.order_ptr()), d);
    auto mm = compare(lhs, rhs);
    return {!mm.has_value(), mm};
}

std::vector<long long> enumerate_kgon(int k, int n_max) {
    std::vector<long long> counts(static_cast<std::size_t>(std::max(n_max, -1) + 1), 0);
    std::vector<int> parts(static_cast<std::size_t>(k));
    // a_1 <= ... <= a_k; choose parts left to right with the remaining budget
    std::function<void(int, int, int)> go = [&](int idx, int min_part, int sum) {
        if (idx == k) {
            int head = sum - parts[k - 1];
            if (head > parts[k - 1]) ++counts[static_cast<std::size_t>(sum)];
            return;
        }
        int left = k - idx;
        for (int a = min_part; sum + a * left <= n_max; ++a) {
            parts[idx] = a;
            go(idx + 1, a, sum + a);
        }
    };
    if (k >= 1) go(0, 1, 0);
    return counts;
}

OrderPtr parameter_order(std::initializer_list<std::string_view> names) {
    return std::make_shared<const VariableOrder>(VariableOrder::make({}, names));
}

SeriesTable enumerate_two_dim(int big_k, int big_l, int d) {
    auto order = parameter_order({"x", "y"});
    SeriesTable out{{}, d, order};
    Symbol x("x"), y("y");
    for (int m = 0; m <= d; ++m)
        for (int n = 0; m + n <= d; ++n)
            if (big_k * m >= n && big_l * n >= m) out.coeffs[Monomial::var(x, m) * Monomial::var(y, n)] += 1;
    return out;
}

SeriesTable enumerate_hard(int k, int r, int d) {
    auto order = parameter_order({"x", "y", "q"});
    SeriesTable out{{}, d, order};
    Symbol x("x"), y("y"), q("q");
    // count[(i, j, w)] over chains; total degree i + j + w <= d
    std::map<std::tuple<int, int, int>, long long> counts;

    // number of weakly decreasing chains below `top` of given length, by weight
    auto chains = [&](int top, int length, int budget) {
        std::vector<long long> w(static_cast<std::size_t>(budget + 1), 0);
        std::function<void(int, int, int)> go = [&](int left, int bound, int sum) {
            if (left == 0) {
                ++w[static_cast<std::size_t>(sum)];
                return;
            }
            for (int v = 0; v <= bound && sum + v <= budget; ++v) go(left - 1, v, sum + v);
        };
        go(length, top, 0);
        return w;
    };

    for (int i = 0; i <= d; ++i) {
        for (int b0 = 0; b0 <= i && i + b0 <= d; ++b0) {
            for (int j = 0; j <= b0 && i + j + b0 <= d; ++j) {
                int budget = d - i - j - b0;
                auto wb = chains(b0, k, budget);
                auto wc = chains(j, r, budget);
                for (int s = 0; s <= budget; ++s) {
                    if (!wb[s]) continue;
                    for (int t = 0; s + t <= budget; ++t) {
                        if (!wc[t]) continue;
                        counts[{i, j, b0 + s + t}] += wb[s] * wc[t];
                    }
                }
            }
        }
    }
    for (const auto& [key, n] : counts) {
        auto [i, j, w] = key;
        Monomial m = Monomial::var(x, i) * Monomial::var(y, j) * Monomial::var(q, w);
        out.coeffs[m] = Rational(static_cast<long>(n));
    }
    return out;
}

}  // namespace omega
