#include "omega/catalog.hpp"

#include <chrono>
#include <stdexcept>

namespace omega {

namespace {

using Terms = std::initializer_list<std::pair<int, Monomial>>;

LaurentPolynomial poly(Terms terms) {
    LaurentPolynomial p;
    for (const auto& [c, m] : terms) p.add_term(c, m);
    return p;
}

Factor fac(const Monomial& m, int k = 1) { return Factor(m, k); }

std::string indexed(const char* base, int i) { return base + std::to_string(i); }

std::vector<std::string> names(const char* base, int n) {
    std::vector<std::string> v;
    for (int i = 1; i <= n; ++i) v.push_back(indexed(base, i));
    return v;
}

// Rebinds f into `target` and applies the bindings there.
ElliottRational rebind(const ElliottRational& f, const Bindings& b, const OrderPtr& target) {
    return substitute(f.with_order(target), b);
}

// Substitutes, then drops the variables that no longer occur by switching to
// the smaller target order.
ElliottRational specialize(const ElliottRational& e, const Bindings& b, const OrderPtr& target) {
    std::vector<Symbol> vars = target->vars();
    for (Symbol s : e.order().vars())
        if (!target->contains(s)) vars.push_back(s);
    auto wide = std::make_shared<const VariableOrder>(vars, e.order().lambdas());
    auto done = substitute(e.with_order(wide), b);
    return canonicalize(done.with_order(target));
}

// sum_{a < n} v^a
LaurentPolynomial geometric_sum(Symbol v, int n) {
    LaurentPolynomial p;
    for (int a = 0; a < n; ++a) p.add_term(1, Monomial::var(v, a));
    return p;
}

OrderPtr extend_with_lambda(const VariableOrder& base, Symbol lam) {
    std::vector<Symbol> vars{lam};
    std::vector<Symbol> lams{lam};
    for (Symbol s : base.vars())
        if (s != lam) vars.push_back(s);
    for (Symbol s : base.lambdas())
        if (s != lam) lams.push_back(s);
    return std::make_shared<const VariableOrder>(vars, lams);
}

}  // namespace

OrderPtr make_order(const std::vector<std::string>& lambdas, const std::vector<std::string>& params) {
    return std::make_shared<const VariableOrder>(VariableOrder::make(lambdas, params));
}

Monomial mono(std::initializer_list<std::pair<std::string_view, int>> entries) {
    Monomial m;
    for (const auto& [n, e] : entries) m *= Monomial::var(n, e);
    return m;
}

EntryReport check_entry(const CatalogEntry& entry, int oracle_degree) {
    EntryReport rep;
    rep.id = entry.id;
    auto start = std::chrono::steady_clock::now();
    try {
        auto input = entry.input();
        auto result = omega_eliminate_all(input).first;
        auto final_value = entry.post ? entry.post(result) : result;
        auto expected = entry.expected();
        rep.symbolic_ok = rational_equal(final_value, expected.with_order(final_value.order_ptr()));
        auto v = verify(input, result, oracle_degree);
        rep.oracle_ok = v.ok;
        rep.mismatch = v.mismatch;
    } catch (const std::exception& ex) {
        rep.error = ex.what();
    }
    auto stop = std::chrono::steady_clock::now();
    rep.millis = std::chrono::duration<double, std::milli>(stop - start).count();
    return rep;
}

// ------------------------------------------------------------- fundamentals

std::vector<CatalogEntry> fundamentals(int s) {
    if (s < 1) throw std::invalid_argument("fundamentals: s must be positive");
    auto order = make_order({"l"}, {"x", "y", "z", "w"});
    Symbol y("y");
    const std::string prov = "MacMahon's basic evaluations";
    std::vector<CatalogEntry> out;
    auto add = [&](std::string id, std::map<std::string, int> params, ElliottRational in, ElliottRational ex) {
        out.push_back({std::move(id), std::move(params), [in] { return in; }, [ex] { return ex; }, prov, {}});
    };

    add("fundamental-1", {{"s", s}},
        ElliottRational(1, {fac(mono({{"l", 1}, {"x", 1}})), fac(mono({{"y", 1}, {"l", -s}}))}, order),
        ElliottRational(1, {fac(mono({{"x", 1}})), fac(mono({{"x", s}, {"y", 1}}))}, order));

    LaurentPolynomial f2_num = LaurentPolynomial(1) + LaurentPolynomial(mono({{"x", 1}, {"y", 1}})) * geometric_sum(y, s - 1);
    add("fundamental-2", {{"s", s}},
        ElliottRational(1, {fac(mono({{"l", s}, {"x", 1}})), fac(mono({{"y", 1}, {"l", -1}}))}, order),
        ElliottRational(f2_num, {fac(mono({{"x", 1}})), fac(mono({{"y", s}, {"x", 1}}))}, order));

    add("fundamental-3", {},
        ElliottRational(1,
                        {fac(mono({{"l", 1}, {"x", 1}})), fac(mono({{"y", 1}, {"l", -1}})),
                         fac(mono({{"z", 1}, {"l", -1}}))},
                        order),
        ElliottRational(1, {fac(mono({{"x", 1}})), fac(mono({{"x", 1}, {"y", 1}})), fac(mono({{"x", 1}, {"z", 1}}))},
                        order));

    add("fundamental-4", {},
        ElliottRational(1,
                        {fac(mono({{"l", 1}, {"x", 1}})), fac(mono({{"l", 1}, {"y", 1}})),
                         fac(mono({{"z", 1}, {"l", -1}}))},
                        order),
        ElliottRational(poly({{1, {}}, {-1, mono({{"x", 1}, {"y", 1}, {"z", 1}})}}),
                        {fac(mono({{"x", 1}})), fac(mono({{"y", 1}})), fac(mono({{"x", 1}, {"z", 1}})),
                         fac(mono({{"z", 1}, {"y", 1}}))},
                        order));

    add("fundamental-5", {},
        ElliottRational(1,
                        {fac(mono({{"l", 1}, {"x", 1}})), fac(mono({{"l", 1}, {"y", 1}})),
                         fac(mono({{"z", 1}, {"l", -2}}))},
                        order),
        ElliottRational(poly({{1, {}},
                              {1, mono({{"x", 1}, {"y", 1}, {"z", 1}})},
                              {-1, mono({{"x", 2}, {"y", 1}, {"z", 1}})},
                              {-1, mono({{"x", 1}, {"y", 2}, {"z", 1}})}}),
                        {fac(mono({{"x", 1}})), fac(mono({{"y", 1}})), fac(mono({{"z", 1}, {"x", 2}})),
                         fac(mono({{"z", 1}, {"y", 2}}))},
                        order));

    add("fundamental-6", {},
        ElliottRational(1,
                        {fac(mono({{"l", 2}, {"x", 1}})), fac(mono({{"y", 1}, {"l", -1}})),
                         fac(mono({{"z", 1}, {"l", -1}}))},
                        order),
        ElliottRational(poly({{1, {}},
                              {1, mono({{"x", 1}, {"y", 1}})},
                              {1, mono({{"x", 1}, {"z", 1}})},
                              {1, mono({{"x", 1}, {"y", 1}, {"z", 1}})}}),
                        {fac(mono({{"x", 1}})), fac(mono({{"x", 1}, {"y", 2}})), fac(mono({{"x", 1}, {"z", 2}}))},
                        order));

    add("fundamental-7", {},
        ElliottRational(1,
                        {fac(mono({{"l", 2}, {"x", 1}})), fac(mono({{"l", 1}, {"y", 1}})),
                         fac(mono({{"z", 1}, {"l", -1}}))},
                        order),
        ElliottRational(poly({{1, {}},
                              {1, mono({{"x", 1}, {"z", 1}})},
                              {-1, mono({{"x", 1}, {"y", 1}, {"z", 1}})},
                              {-1, mono({{"x", 1}, {"y", 1}, {"z", 2}})}}),
                        {fac(mono({{"x", 1}})), fac(mono({{"y", 1}})), fac(mono({{"y", 1}, {"z", 1}})),
                         fac(mono({{"x", 1}, {"z", 2}}))},
                        order));

    add("fundamental-8", {},
        ElliottRational(1,
                        {fac(mono({{"l", 1}, {"x", 1}})), fac(mono({{"l", 1}, {"y", 1}})),
                         fac(mono({{"l", 1}, {"z", 1}})), fac(mono({{"w", 1}, {"l", -1}}))},
                        order),
        ElliottRational(poly({{1, {}},
                              {-1, mono({{"x", 1}, {"y", 1}, {"w", 1}})},
                              {-1, mono({{"x", 1}, {"z", 1}, {"w", 1}})},
                              {-1, mono({{"y", 1}, {"z", 1}, {"w", 1}})},
                              {1, mono({{"x", 1}, {"y", 1}, {"z", 1}, {"w", 1}})},
                              {1, mono({{"x", 1}, {"y", 1}, {"z", 1}, {"w", 2}})}}),
                        {fac(mono({{"x", 1}})), fac(mono({{"y", 1}})), fac(mono({{"z", 1}})),
                         fac(mono({{"w", 1}, {"x", 1}})), fac(mono({{"w", 1}, {"y", 1}})),
                         fac(mono({{"w", 1}, {"z", 1}}))},
                        order));

    add("fundamental-9", {},
        ElliottRational(1,
                        {fac(mono({{"l", 1}, {"x", 1}})), fac(mono({{"l", 1}, {"y", 1}})),
                         fac(mono({{"z", 1}, {"l", -1}})), fac(mono({{"w", 1}, {"l", -1}}))},
                        order),
        ElliottRational(poly({{1, {}},
                              {-1, mono({{"x", 1}, {"y", 1}, {"z", 1}})},
                              {-1, mono({{"x", 1}, {"y", 1}, {"w", 1}})},
                              {-1, mono({{"x", 1}, {"y", 1}, {"z", 1}, {"w", 1}})},
                              {1, mono({{"x", 1}, {"y", 2}, {"z", 1}, {"w", 1}})},
                              {1, mono({{"x", 2}, {"y", 1}, {"z", 1}, {"w", 1}})}}),
                        {fac(mono({{"x", 1}})), fac(mono({{"y", 1}})), fac(mono({{"x", 1}, {"z", 1}})),
                         fac(mono({{"x", 1}, {"w", 1}})), fac(mono({{"y", 1}, {"z", 1}})),
                         fac(mono({{"y", 1}, {"w", 1}}))},
                        order));
    return out;
}

CatalogEntry three_factor_example() {
    auto e = fundamentals(1)[3];
    e.id = "three-factor";
    e.provenance = "three-factor example solved by both routes";
    return e;
}

CatalogEntry two_lambda_entry() {
    auto order = make_order({"l1", "l2"}, {"A", "B", "C", "D", "E"});
    ElliottRational in(poly({{1, {}}, {-1, mono({{"A", 1}, {"B", 1}, {"l1", 1}, {"l2", 1}})}}),
                       {fac(mono({{"A", 1}, {"l1", 1}})), fac(mono({{"B", 1}, {"l2", 1}})),
                        fac(mono({{"C", 1}, {"l1", 1}, {"l2", 1}})), fac(mono({{"D", 1}, {"l1", 1}, {"l2", 1}})),
                        fac(mono({{"E", 1}, {"l1", -1}, {"l2", -1}}))},
                       order);
    LaurentPolynomial num = poly({{1, {}}, {-1, mono({{"A", 1}, {"B", 1}})}}) *
                            poly({{1, {}}, {-1, mono({{"C", 1}, {"D", 1}, {"E", 1}})}});
    ElliottRational ex(num,
                       {fac(mono({{"A", 1}})), fac(mono({{"B", 1}})), fac(mono({{"C", 1}})), fac(mono({{"D", 1}})),
                        fac(mono({{"C", 1}, {"E", 1}})), fac(mono({{"D", 1}, {"E", 1}}))},
                       order);
    return {"two-lambda", {}, [in] { return in; }, [ex] { return ex; }, "two-lambda identity with a binomial numerator",
            {}};
}

CatalogEntry four_lambda_entry() {
    auto order = make_order({"l1", "l2", "l3", "l4"}, {"x1", "x2", "x3", "x4"});
    ElliottRational in(1,
                       {fac(mono({{"x1", 1}, {"l1", 1}, {"l2", 1}})), fac(mono({{"x2", 1}, {"l3", 1}, {"l1", -1}})),
                        fac(mono({{"x4", 1}, {"l3", -1}, {"l4", -1}})), fac(mono({{"x3", 1}, {"l4", 1}, {"l2", -1}}))},
                       order);
    ElliottRational ex(poly({{1, {}}, {-1, mono({{"x1", 2}, {"x2", 1}, {"x3", 1}})}}),
                       {fac(mono({{"x1", 1}})), fac(mono({{"x1", 1}, {"x2", 1}})), fac(mono({{"x1", 1}, {"x3", 1}})),
                        fac(mono({{"x1", 1}, {"x2", 1}, {"x3", 1}})),
                        fac(mono({{"x1", 1}, {"x2", 1}, {"x3", 1}, {"x4", 1}}))},
                       order);
    return {"four-lambda", {}, [in] { return in; }, [ex] { return ex; }, "four-lambda chain with a classify table", {}};
}

std::vector<Factor> q_pochhammer(const Rational& c, const Monomial& a, Symbol q, int n) {
    std::vector<Factor> out;
    for (int j = 0; j < n; ++j) out.emplace_back(c, a * Monomial::var(q, j), 1);
    return out;
}

// -------------------------------------------------------------------- Han

ElliottRational han_input(const LaurentPolynomial& u, Symbol lam, const std::vector<Monomial>& xs,
                          const std::vector<Monomial>& ys, const OrderPtr& order) {
    std::vector<Factor> den;
    for (const auto& x : xs) den.push_back(fac(x * Monomial::var(lam)));
    for (const auto& y : ys) den.push_back(fac(y * Monomial::var(lam, -1)));
    return ElliottRational(u, std::move(den), order);
}

ElliottRational han_rhs(const LaurentPolynomial& u, Symbol lam, const std::vector<Monomial>& xs,
                        const std::vector<Monomial>& ys, const OrderPtr& order) {
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j)
            if (xs[i] == xs[j]) throw Error("han_rhs: repeated x makes the right side singular");
    std::vector<ElliottRational> terms;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Bindings b{{lam, ScaledMonomial{1, xs[i].inverse()}}};
        std::vector<Factor> den{fac(xs[i])};
        for (const auto& y : ys) den.push_back(fac(y * xs[i]));
        for (std::size_t j = 0; j < xs.size(); ++j)
            if (j != i) den.push_back(fac(xs[j] / xs[i]));
        terms.emplace_back(u.substitute(b), std::move(den), order);
    }
    return sum(terms, order);
}

CatalogEntry han_entry(int n, int m, int u_power) {
    auto order = make_order({"l"}, [&] {
        auto v = names("x", n);
        auto w = names("y", m);
        v.insert(v.end(), w.begin(), w.end());
        return v;
    }());
    std::vector<Monomial> xs, ys;
    for (int i = 1; i <= n; ++i) xs.push_back(Monomial::var(indexed("x", i)));
    for (int j = 1; j <= m; ++j) ys.push_back(Monomial::var(indexed("y", j)));
    Symbol lam("l");
    LaurentPolynomial u(Monomial::var(lam, u_power));
    auto in = han_input(u, lam, xs, ys, order);
    auto ex = han_rhs(u, lam, xs, ys, order);
    return {"han-n" + std::to_string(n) + "-m" + std::to_string(m) + "-u" + std::to_string(u_power),
            {{"n", n}, {"m", m}, {"u", u_power}},
            [in] { return in; },
            [ex] { return ex; },
            "Han's formula, U = l^u",
            {}};
}

// ------------------------------------------------------------------ k-gon

namespace {

OrderPtr kgon_order(int k) { return make_order(names("l", k), names("x", k)); }

Monomial xvar(int i) { return Monomial::var(indexed("x", i)); }
Monomial lvar(int i, int e = 1) { return Monomial::var(indexed("l", i), e); }

}  // namespace

ElliottRational kgon_input(int k) {
    if (k < 3) throw std::invalid_argument("kgon_input: k must be at least 3");
    std::vector<Factor> den{fac(xvar(1) * lvar(k) * lvar(1, -1))};
    for (int i = 2; i <= k - 1; ++i) den.push_back(fac(xvar(i) * lvar(i - 1) * lvar(k) * lvar(i, -1)));
    den.push_back(fac(xvar(k) * lvar(k - 1) * lvar(k, -1)));
    return ElliottRational(LaurentPolynomial(xvar(1) * lvar(1, -1)), std::move(den), kgon_order(k));
}

ElliottRational kgon_closed(int k) {
    if (k < 3) throw std::invalid_argument("kgon_closed: k must be at least 3");
    auto order = kgon_order(k);
    Monomial all;
    std::vector<Factor> first;
    for (int i = k; i >= 1; --i) {
        all *= xvar(i);
        first.push_back(fac(all));
    }
    // x_1 ... x_{k-1} x_k^(k-1) over (1 - x_i ... x_{k-1} x_k^(k-i)), i < k, and (1 - x_k)
    Monomial lead = all * xvar(k).pow(k - 2);
    std::vector<Factor> second{fac(xvar(k))};
    for (int i = 1; i <= k - 1; ++i) {
        Monomial m = xvar(k).pow(k - i);
        for (int j = i; j <= k - 1; ++j) m *= xvar(j);
        second.push_back(fac(m));
    }
    return sum({ElliottRational(LaurentPolynomial(all), first, order),
                ElliottRational(LaurentPolynomial(-1, lead), second, order)},
               order);
}

ElliottRational tk_closed(int k) {
    if (k < 3) throw std::invalid_argument("tk_closed: k must be at least 3");
    auto order = make_order({}, {"q"});
    Symbol q("q");
    std::vector<Factor> first, second{fac(Monomial::var(q))};
    for (int j = 1; j <= k; ++j) first.push_back(fac(Monomial::var(q, j)));
    for (int j = 1; j <= k - 1; ++j) second.push_back(fac(Monomial::var(q, 2 * j)));
    return sum({ElliottRational(LaurentPolynomial(Monomial::var(q, k)), first, order),
                ElliottRational(LaurentPolynomial(-1, Monomial::var(q, 2 * k - 2)), second, order)},
               order);
}

ElliottRational kgon_specialize(const ElliottRational& e, int k) {
    Bindings b;
    for (int i = 1; i <= k; ++i) b[Symbol(indexed("x", i))] = ScaledMonomial{1, Monomial::var("q")};
    return specialize(e, b, make_order({}, {"q"}));
}

CatalogEntry kgon_entry(int k) {
    return {"kgon-" + std::to_string(k),
            {{"k", k}},
            [k] { return kgon_input(k); },
            [k] { return kgon_closed(k); },
            "non-degenerate k-gon partitions",
            {}};
}

// ------------------------------------------------------------- two-dim

ElliottRational two_dim_input(int big_k, int big_l) {
    auto order = make_order({"l1", "l2"}, {"x", "y"});
    return ElliottRational(1,
                           {fac(mono({{"x", 1}, {"l1", big_k}, {"l2", -1}})),
                            fac(mono({{"y", 1}, {"l2", big_l}, {"l1", -1}}))},
                           order);
}

ElliottRational two_dim_closed(int big_k, int big_l) {
    auto order = make_order({}, {"x", "y"});
    Symbol x("x"), y("y");
    LaurentPolynomial num = poly({{1, {}}, {-1, mono({{"x", 1}, {"y", big_k}})}, {-1, mono({{"x", big_l}, {"y", 1}})}});
    num += LaurentPolynomial(mono({{"x", 1}, {"y", 1}})) * geometric_sum(x, big_l) * geometric_sum(y, big_k);
    return ElliottRational(num, {fac(mono({{"x", 1}, {"y", big_k}})), fac(mono({{"x", big_l}, {"y", 1}}))}, order);
}

CatalogEntry two_dim_entry(int big_k, int big_l) {
    return {"two-dim-" + std::to_string(big_k) + "-" + std::to_string(big_l),
            {{"K", big_k}, {"L", big_l}},
            [=] { return two_dim_input(big_k, big_l); },
            [=] { return two_dim_closed(big_k, big_l); },
            "two-dimensional lattice problem K*m >= n, L*n >= m",
            [](const ElliottRational& e) { return canonicalize(e.with_order(make_order({}, {"x", "y"}))); }};
}

// ---------------------------------------------------------------- hard

ElliottRational hard_input(int k, int r) {
    if (k < 0 || r < 0) throw std::invalid_argument("hard_input: k and r must be nonnegative");
    auto order = make_order({"l"}, {"x", "y", "t", "z", "q"});
    Symbol q("q");
    std::vector<Factor> den{fac(mono({{"x", 1}})), fac(mono({{"x", 1}, {"t", 1}, {"l", 1}}))};
    for (int i = 0; i <= r; ++i) den.push_back(fac(mono({{"x", 1}, {"y", 1}, {"t", 1}, {"l", 1}}) * Monomial::var(q, i)));
    for (int i = 0; i < k; ++i) den.push_back(fac(mono({{"z", 1}, {"l", -1}}) * Monomial::var(q, i)));
    return ElliottRational(1, std::move(den), order);
}

ElliottRational hard_closed(int k, int r) {
    auto order = make_order({}, {"x", "y", "q"});
    Symbol q("q");
    const Monomial x = mono({{"x", 1}});
    const Monomial y = mono({{"y", 1}});
    const Monomial qm = Monomial::var(q);

    std::vector<ElliottRational> terms;
    {
        auto den = q_pochhammer(1, y, q, r + 1);
        auto xs = q_pochhammer(1, x, q, k + 2);
        den.insert(den.end(), xs.begin(), xs.end());
        terms.emplace_back(1, std::move(den), order);
    }
    for (int i = 0; i <= r; ++i) {
        int sign = (i % 2 == 0) ? -1 : 1;  // (-1)^(i+1)
        LaurentPolynomial num(sign, y * Monomial::var(q, i * (i + 3) / 2));
        std::vector<Factor> den{fac(x), fac(y * Monomial::var(q, i))};
        for (const auto& part : {q_pochhammer(1, qm, q, i), q_pochhammer(1, qm, q, r - i),
                                 q_pochhammer(1, x * y * Monomial::var(q, i + 1), q, k + 1)})
            den.insert(den.end(), part.begin(), part.end());
        terms.emplace_back(num, std::move(den), order);
    }
    return sum(terms, order);
}

ElliottRational hard_specialize(const ElliottRational& e) {
    Bindings b{{Symbol("t"), ScaledMonomial{1, Monomial::var("q")}},
               {Symbol("z"), ScaledMonomial{1, Monomial::var("q")}}};
    return specialize(e, b, make_order({}, {"x", "y", "q"}));
}

CatalogEntry hard_entry(int k, int r) {
    return {"hard-" + std::to_string(k) + "-" + std::to_string(r),
            {{"k", k}, {"r", r}},
            [=] { return hard_input(k, r); },
            [=] { return hard_closed(k, r); },
            "chain generating function F(x, y, q) via G(x, y, t, z, q)",
            [](const ElliottRational& e) { return hard_specialize(e); }};
}

// ------------------------------------------------------------ G1 / G2

GTransforms g_transforms(const ElliottRational& f) {
    auto order = make_order({"l1", "l2", "l3"}, {"x", "y", "z"});
    Symbol x("x"), y("y");
    auto bind = [&](Monomial first, Monomial second) {
        return Bindings{{x, ScaledMonomial{1, std::move(first)}}, {y, ScaledMonomial{1, std::move(second)}}};
    };
    auto kernel = [&](std::vector<Factor> den) { return ElliottRational(1, std::move(den), order); };

    GTransforms g;
    g.g1_input = rebind(f, bind(mono({{"z", 1}, {"l2", 1}, {"l1", -1}}), mono({{"z", 1}, {"l3", -1}})), order) *
                 kernel({fac(mono({{"x", 1}, {"l1", 1}})), fac(mono({{"y", 1}, {"l3", 1}, {"l2", -1}}))});
    {
        auto a = rebind(f, bind(mono({{"x", 1}, {"z", 1}}), mono({{"y", 1}, {"z", 1}})), order);
        auto b = rebind(f, bind(mono({{"x", 1}, {"y", 1}, {"z", 1}}), mono({{"z", 1}})), order);
        g.g1_closed = (a - scale(b, LaurentPolynomial(mono({{"y", 1}})))) *
                      kernel({fac(mono({{"x", 1}})), fac(mono({{"y", 1}}))});
    }
    g.g2_input = rebind(f, bind(mono({{"z", 1}, {"l1", 1}}), mono({{"z", 1}, {"l2", -1}})), order) *
                 kernel({fac(mono({{"x", 1}, {"l2", 1}, {"l1", -1}}))});
    {
        auto a = rebind(f, bind(mono({{"z", 1}}), mono({{"x", 1}, {"z", 1}})), order);
        auto b = rebind(f, bind(mono({{"x", 1}, {"z", 1}}), mono({{"z", 1}})), order);
        g.g2_closed = (a - scale(b, LaurentPolynomial(mono({{"x", 1}})))) * kernel({fac(mono({{"x", 1}}))});
    }
    return g;
}

std::vector<CatalogEntry> g_entries(const std::string& label, const ElliottRational& f) {
    auto g = g_transforms(f);
    const std::string prov = "G1/G2 transforms of F with support i >= j >= 0";
    return {
        {"g1-" + label, {}, [g] { return g.g1_input; }, [g] { return g.g1_closed; }, prov, {}},
        {"g2-" + label, {}, [g] { return g.g2_input; }, [g] { return g.g2_closed; }, prov, {}},
    };
}

// ----------------------------------------------------- series propositions

std::pair<ElliottRational, ElliottRational> inverse_lambda_series_sides(const ElliottRational& f, Symbol u, const Monomial& a,
                                                         Symbol lam) {
    auto order = extend_with_lambda(f.order(), lam);
    auto lhs = rebind(f, {{u, ScaledMonomial{1, Monomial::var(lam, -1)}}}, order) *
               ElliottRational(1, {fac(a * Monomial::var(lam))}, order);
    auto rhs = rebind(f, {{u, ScaledMonomial{1, a}}}, order) * ElliottRational(1, {fac(a)}, order);
    return {lhs, rhs};
}

std::pair<ElliottRational, ElliottRational> lambda_series_sides(const ElliottRational& f, Symbol u, const Monomial& a,
                                                         Symbol lam) {
    auto order = extend_with_lambda(f.order(), lam);
    auto lhs = rebind(f, {{u, ScaledMonomial{1, Monomial::var(lam)}}}, order) *
               ElliottRational(1, {fac(a * Monomial::var(lam, -1))}, order);
    auto at_one = rebind(f, {{u, ScaledMonomial{1, Monomial{}}}}, order);
    auto at_a = rebind(f, {{u, ScaledMonomial{1, a}}}, order);
    auto rhs = (at_one - scale(at_a, LaurentPolynomial(a))) * ElliottRational(1, {fac(a)}, order);
    return {lhs, rhs};
}

// ---------------------------------------------------------------- corpus

std::vector<CatalogEntry> all_entries() {
    std::vector<CatalogEntry> out = fundamentals(2);
    out.push_back(three_factor_example());
    out.push_back(two_lambda_entry());
    out.push_back(four_lambda_entry());
    out.push_back(han_entry(2, 1, 0));
    out.push_back(han_entry(3, 2, 1));
    for (int k = 3; k <= 5; ++k) out.push_back(kgon_entry(k));
    out.push_back(two_dim_entry(2, 2));
    out.push_back(two_dim_entry(3, 2));
    out.push_back(hard_entry(1, 0));
    out.push_back(hard_entry(2, 1));

    auto fo = make_order({}, {"x", "y"});
    for (auto& e : g_entries("one", ElliottRational(1, {}, fo))) out.push_back(std::move(e));
    for (auto& e : g_entries("chain", ElliottRational(1, {fac(mono({{"x", 1}})), fac(mono({{"x", 1}, {"y", 1}}))}, fo)))
        out.push_back(std::move(e));

    auto uo = make_order({}, {"u", "x", "y"});
    ElliottRational f(poly({{1, {}}, {1, mono({{"u", 1}, {"y", 1}})}}),
                      {fac(mono({{"x", 1}, {"u", 1}})), fac(mono({{"y", 1}, {"u", 2}}))}, uo);
    auto [in_inv, ex_inv] = inverse_lambda_series_sides(f, Symbol("u"), mono({{"x", 1}, {"y", 1}}), Symbol("l"));
    auto [in_pos, ex_pos] = lambda_series_sides(f, Symbol("u"), mono({{"y", 1}}), Symbol("l"));
    out.push_back({"series-in-inverse-lambda", {}, [in_inv] { return in_inv; }, [ex_inv] { return ex_inv; },
                   "Omega F(1/l)/(1 - A l) = F(A)/(1 - A)", {}});
    out.push_back({"series-in-lambda", {}, [in_pos] { return in_pos; }, [ex_pos] { return ex_pos; },
                   "Omega F(l)/(1 - A/l) = (F(1) - A F(A))/(1 - A)", {}});
    return out;
}

}  // namespace omega
