#include <algorithm>

#include <gtest/gtest.h>

#include "omega/print.hpp"
#include "support/expr.hpp"
#include "support/random_inputs.hpp"

using namespace omega;
using omega::testing::ex;
using omega::testing::order_of;
using omega::testing::px;

namespace {

ElliottRational as_rational(const ModInverse& h, const OrderPtr& ord) { return ElliottRational(h.num, h.den, ord); }

}  // namespace

TEST(ReduceMod, LinearFactor) {
    auto ord = order_of({"l"}, {"x", "y"});
    Symbol l("l");
    EXPECT_EQ(reduce_mod(px("1 - y*l", ord), Factor(mono({{"x", 1}, {"l", 1}})), l), px("1 - y/x", ord));
}

TEST(ReduceMod, DefiningRelation) {
    auto ord = order_of({"l"}, {"u"});
    Symbol l("l");
    for (int a = 1; a <= 4; ++a)
        EXPECT_EQ(reduce_mod(px("l^" + std::to_string(a), ord), Factor(mono({{"u", 1}, {"l", a}})), l),
                  px("1/u", ord));
}

TEST(ReduceMod, FloorConvention) {
    auto ord = order_of({"l"}, {"x"});
    Symbol l("l");
    Factor f(mono({{"x", 1}, {"l", 2}}));
    EXPECT_EQ(reduce_mod(px("l^3", ord), f, l), px("l/x", ord));
    EXPECT_EQ(reduce_mod(px("l^-1", ord), f, l), px("x*l", ord));
    EXPECT_EQ(reduce_mod(px("l^-2", ord), f, l), px("x", ord));
}

TEST(ReduceMod, ScaledFactor) {
    auto ord = order_of({"l"}, {"x"});
    Symbol l("l");
    EXPECT_EQ(reduce_mod(px("l", ord), Factor(Rational(-2), mono({{"x", 1}, {"l", 1}})), l), px("-1/(2*x)", ord));
}

TEST(InvertMod, LambdaFreeUnit) {
    auto ord = order_of({"l"}, {"x", "y"});
    auto h = invert_mod(px("1 - y/x", ord), Factor(mono({{"x", 1}, {"l", 1}})), Symbol("l"));
    EXPECT_TRUE(rational_equal(as_rational(h, ord), ex("1/(1-y/x)", ord)));
}

TEST(InvertMod, LinearBinomial) {
    auto ord = order_of({"l"}, {"x", "y"});
    auto h = invert_mod(px("1 - y*l", ord), Factor(mono({{"x", 1}, {"l", 1}})), Symbol("l"));
    EXPECT_TRUE(rational_equal(as_rational(h, ord), ex("1/(1-y/x)", ord)));
}

TEST(InvertMod, HiddenCommonRoot) {
    auto ord = order_of({"l"}, {"y"});
    Factor f(mono({{"y", 2}, {"l", 2}}));
    try {
        invert_mod(px("1 - y*l", ord), f, Symbol("l"));
        FAIL() << "expected ZeroDivisorError";
    } catch (const ZeroDivisorError& e) {
        EXPECT_NE(std::string(e.what()).find("hidden common root"), std::string::npos);
    }
}

TEST(InvertMod, ProductReducesToOne) {
    auto ord = order_of({"l"}, {"x", "y", "z"});
    Symbol l("l");
    omega::testing::Sampler s(31);
    int checked = 0;
    for (int i = 0; i < 200; ++i) {
        Factor f(s.small_rational(), s.param_monomial(ord->parameters(), 0, 2, 1) * Monomial::var(l, s.uniform(1, 4)));
        Monomial gm = s.param_monomial(ord->parameters(), -1, 2, 1) * Monomial::var(l, s.uniform(-3, 3));
        LaurentPolynomial g = LaurentPolynomial(1) - LaurentPolynomial(s.small_rational(), gm);
        try {
            auto h = invert_mod(g, f, l);
            LaurentPolynomial den(1);
            for (const auto& d : h.den) den *= d.expanded();
            EXPECT_EQ(reduce_mod(g * h.num, f, l), den);
            ++checked;
        } catch (const ZeroDivisorError&) {
        }
    }
    EXPECT_GT(checked, 150);
}

TEST(PartialFractions, ThreeFactorResidue) {
    auto e = three_factor_example().input();
    Symbol l("l");
    auto pf = partial_fractions(e, l);
    const auto& ord = e.order_ptr();
    EXPECT_TRUE(pf.poly_part.is_zero());
    EXPECT_TRUE(pf.pole_numerator.is_zero());
    const Residue* rx = nullptr;
    for (const auto& r : pf.residues)
        if (r.factor.mono == mono({{"x", 1}, {"l", 1}})) rx = &r;
    ASSERT_NE(rx, nullptr);
    Bindings one{{l, {1, Monomial{}}}};
    auto contribution = substitute(rx->value, one) * ElliottRational(1, {Factor(mono({{"x", 1}}))}, ord);
    EXPECT_TRUE(rational_equal(contribution, ex("1/((1-x)*(1-y/x)*(1-x*z))", ord)));
}

TEST(PartialFractions, LambdaFree) {
    auto ord = order_of({"l"}, {"x"});
    auto e = ex("(1+x)/(1-x)", ord);
    auto pf = partial_fractions(e, Symbol("l"));
    EXPECT_TRUE(pf.residues.empty());
    EXPECT_TRUE(pf.pole_numerator.is_zero());
    EXPECT_TRUE(rational_equal(pf.poly_part, e));
}

TEST(PartialFractions, RepeatedFactorLevels) {
    auto ord = order_of({"l"}, {"x"});
    auto pf = partial_fractions(ex("1/(1-x*l)^2", ord), Symbol("l"));
    ASSERT_EQ(pf.residues.size(), 2u);
    for (const auto& r : pf.residues) {
        if (r.level == 2)
            EXPECT_TRUE(rational_equal(r.value, ElliottRational(1, {}, ord)));
        else
            EXPECT_TRUE(r.value.is_zero());
    }
}

TEST(PartialFractions, PolynomialAndPolePart) {
    auto ord = order_of({"l"}, {"x", "y"});
    auto e = ex("(l^3 + y/l^2)/(1-x*l)", ord);
    auto pf = partial_fractions(e, Symbol("l"));
    EXPECT_EQ(pf.pole_order, 2);
    EXPECT_FALSE(pf.poly_part.is_zero());
    EXPECT_FALSE(pf.pole_numerator.is_zero());
    EXPECT_TRUE(rational_equal(reassemble(pf, ord), e));
}

TEST(PartialFractions, ReassemblyOnRandomInputs) {
    omega::testing::Sampler s(32);
    int checked = 0;
    for (int i = 0; i < 80; ++i) {
        auto e = omega::testing::random_elliott(s);
        for (Symbol l : e.lambdas_present()) {
            try {
                auto pf = partial_fractions(e, l);
                EXPECT_TRUE(rational_equal(reassemble(pf, e.order_ptr()), e)) << to_string(e);
                ++checked;
            } catch (const ZeroDivisorError&) {
            }
        }
    }
    EXPECT_GT(checked, 60);
}

TEST(EliminateOne, ThreeFactorBothModes) {
    auto entry = three_factor_example();
    Symbol l("l");
    for (Mode m : {Mode::direct, Mode::dual}) {
        TraceStep step;
        auto r = omega_eliminate_one(entry.input(), l, m, &step);
        EXPECT_EQ(step.mode, m);
        EXPECT_TRUE(rational_equal(r, entry.expected())) << mode_name(m) << ": " << to_string(r);
    }
}

TEST(EliminateOne, LambdaFreeUnchanged) {
    auto ord = order_of({"l"}, {"x"});
    auto e = ex("(1+x)/(1-x)", ord);
    EXPECT_TRUE(rational_equal(omega_eliminate_one(e, Symbol("l"), Mode::automatic), e));
}

TEST(EliminateOne, SquaredLambdaFactor) {
    auto ord = order_of({"l"}, {"x", "y", "z"});
    auto r = omega_eliminate_one(ex("1/((1-l^2*x)*(1-y/l)*(1-z/l))", ord), Symbol("l"), Mode::direct);
    EXPECT_TRUE(rational_equal(r, ex("(1+x*y+x*z+x*y*z)/((1-x)*(1-x*y^2)*(1-x*z^2))", ord)));
}

TEST(EliminateOne, RepeatedFactorMultiplicity) {
    auto ord = order_of({"l"}, {"u"});
    auto e = ex("(2 + 3*l)/(1-u*l^2)^3", ord);
    auto r = omega_eliminate_one(e, Symbol("l"), Mode::direct);
    EXPECT_TRUE(rational_equal(r, ex("5/(1-u)^3", ord)));
    EXPECT_TRUE(verify(e, r, 6).ok);
}

TEST(EliminateOne, Divergent) {
    auto ord = order_of({"l"}, {"x"});
    EXPECT_THROW(omega_eliminate_one(ex("1/((1-l)*(1-x/l))", ord), Symbol("l"), Mode::direct), DivergenceError);
}

TEST(EliminateOne, DualFallsBackWithPolePart) {
    auto ord = order_of({"l"}, {"x", "y"});
    auto e = ex("1/(l^2*(1-x*l)*(1-y/l))", ord);
    TraceStep step;
    auto r = omega_eliminate_one(e, Symbol("l"), Mode::dual, &step);
    EXPECT_EQ(step.mode, Mode::direct);
    EXPECT_TRUE(verify(e, r, 6).ok);
}

TEST(EliminateAll, FourLambdaChain) {
    auto entry = four_lambda_entry();
    auto [r, log] = omega_eliminate_all(entry.input());
    EXPECT_EQ(log.steps.size(), 4u);
    EXPECT_TRUE(rational_equal(r, entry.expected())) << to_string(r);
    EXPECT_EQ(to_string(r.numerator(), r.order()), "1 - x1^2*x2*x3");
}

TEST(EliminateAll, TwoLambda) {
    auto entry = two_lambda_entry();
    EXPECT_TRUE(rational_equal(omega_eliminate_all(entry.input()).first, entry.expected()));
}

TEST(EliminateAll, LambdaFreeEmptyTrace) {
    auto ord = order_of({"l"}, {"x"});
    auto e = ex("1/(1-x)", ord);
    auto [r, log] = omega_eliminate_all(e);
    EXPECT_TRUE(log.steps.empty());
    EXPECT_TRUE(rational_equal(r, e));
}

TEST(EliminateAll, ExplicitOrderMustMatchLambdas) {
    auto e = two_lambda_entry().input();
    EliminationStrategy st;
    st.lambda_order = {Symbol("l1")};
    EXPECT_THROW(omega_eliminate_all(e, st), std::invalid_argument);
}

TEST(EliminateAll, ReplayReproducesTrace) {
    auto e = four_lambda_entry().input();
    auto [r, log] = omega_eliminate_all(e);
    EXPECT_TRUE(rational_equal(replay(e, log), r));
}

TEST(EliminateAll, OrderInvariance) {
    auto e = four_lambda_entry().input();
    auto expected = four_lambda_entry().expected();
    std::vector<Symbol> lams = e.lambdas_present();
    std::sort(lams.begin(), lams.end());
    int runs = 0;
    do {
        for (Mode m : {Mode::direct, Mode::dual}) {
            EliminationStrategy st{m, lams};
            EXPECT_TRUE(rational_equal(omega_eliminate_all(e, st).first, expected));
        }
        ++runs;
    } while (std::next_permutation(lams.begin(), lams.end()));
    EXPECT_EQ(runs, 24);
}

TEST(EliminateAll, Linearity) {
    auto ord = order_of({"l"}, {"x", "y", "z"});
    auto a = ex("1/((1-x*l)*(1-y/l))", ord);
    auto b = ex("l^2/((1-x*l)*(1-z/l))", ord);
    auto lhs = omega_eliminate_all(a * ElliottRational(3, {}, ord) + b).first;
    auto rhs = scale(omega_eliminate_all(a).first, 3) + omega_eliminate_all(b).first;
    EXPECT_TRUE(rational_equal(lhs, rhs));
}

TEST(EliminateAll, AgreesWithOracleOnRandomInputs) {
    omega::testing::Sampler s(33);
    int checked = 0;
    for (int i = 0; i < 60; ++i) {
        auto e = omega::testing::random_elliott(s);
        try {
            auto r = omega_eliminate_all(e).first;
            EXPECT_TRUE(verify(e, r, 4).ok) << to_string(e);
            ++checked;
        } catch (const ZeroDivisorError&) {
        } catch (const DivergenceError&) {
        }
    }
    EXPECT_GT(checked, 40);
}
