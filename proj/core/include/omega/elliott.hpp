#pragma once

// Elliott rational functions: a Laurent-polynomial numerator over a product
// of binomial powers (1 - c*M)^m.

#include <optional>
#include <vector>

#include "omega/algebra.hpp"

namespace omega {

/// Raised when a substitution or evaluation turns a factor into 1 - 1.
class PoleError : public Error {
public:
    using Error::Error;
};

/// The binomial power (1 - coeff*mono)^mult.
struct Factor {
    Rational coeff{1};
    Monomial mono;
    int mult = 1;

    Factor() = default;
    Factor(Rational c, Monomial m, int k = 1);
    explicit Factor(Monomial m, int k = 1) : Factor(Rational(1), std::move(m), k) {}

    /// coeff*mono as a scaled monomial.
    LaurentPolynomial term() const { return LaurentPolynomial(coeff, mono); }
    /// 1 - coeff*mono (without multiplicity).
    LaurentPolynomial binomial() const;
    /// (1 - coeff*mono)^mult, expanded.
    LaurentPolynomial expanded() const;

    bool same_base(const Factor& o) const { return coeff == o.coeff && mono == o.mono; }
    friend bool operator==(const Factor& a, const Factor& b) {
        return a.same_base(b) && a.mult == b.mult;
    }
};

/// Sort key for factor lists: monomial, then coefficient.
bool factor_key_less(const Factor& a, const Factor& b);

class ElliottRational {
public:
    ElliottRational() = default;
    /// Merges repeated bases and folds factors with unit monomial into the
    /// numerator. Throws PoleError for a literal (1 - 1) factor.
    ElliottRational(LaurentPolynomial numerator, std::vector<Factor> denominator, OrderPtr order);
    ElliottRational(LaurentPolynomial numerator, std::vector<Factor> denominator,
                    const VariableOrder& order)
        : ElliottRational(std::move(numerator), std::move(denominator),
                          std::make_shared<const VariableOrder>(order)) {}

    const LaurentPolynomial& numerator() const { return num_; }
    const std::vector<Factor>& denominator() const { return den_; }
    const VariableOrder& order() const { return *order_; }
    const OrderPtr& order_ptr() const { return order_; }

    bool is_zero() const { return num_.is_zero(); }
    /// Lambda variables that occur anywhere in the value, in order sequence.
    std::vector<Symbol> lambdas_present() const;
    bool contains(Symbol s) const;
    /// Expanded product of all denominator factors.
    LaurentPolynomial expanded_denominator() const;
    int total_multiplicity() const;

    ElliottRational with_order(OrderPtr order) const;

private:
    LaurentPolynomial num_;
    std::vector<Factor> den_;
    OrderPtr order_ = std::make_shared<const VariableOrder>();
};

/// Arithmetic on values sharing one order. Results are canonical.
ElliottRational operator*(const ElliottRational& a, const ElliottRational& b);
ElliottRational operator+(const ElliottRational& a, const ElliottRational& b);
ElliottRational operator-(const ElliottRational& a, const ElliottRational& b);
ElliottRational scale(const ElliottRational& a, const LaurentPolynomial& p);

/// Sum over a common denominator, then cancels binomials that divide the
/// numerator. The result is canonical.
ElliottRational sum(const std::vector<ElliottRational>& terms, const OrderPtr& order);

/// Flips every large factor so each stored monomial is small; the units go
/// to the numerator. Factors are sorted.
ElliottRational canonicalize(const ElliottRational& e);

/// Removes every denominator binomial that divides the numerator exactly.
ElliottRational cancel_common(const ElliottRational& e);

/// Rewrites factors with negative exponent in lam as
/// 1 - cM = (-cM)(1 - c^-1 M^-1), absorbing the unit into the numerator.
ElliottRational normalize_in(const ElliottRational& e, Symbol lam);

struct ClassificationRow {
    Symbol lambda;
    std::vector<Factor> contributing;
    std::vector<Factor> dually_contributing;
    std::size_t c_num = 0;
    std::size_t dc_num = 0;
    std::pair<int, int> numerator_degrees{0, 0};
};

/// One row per lambda that occurs in the value. Each row classifies the
/// factors containing that lambda after normalizing in it.
std::vector<ClassificationRow> classify(const ElliottRational& e);

/// Applies bindings to numerator and factors. A factor that becomes a pure
/// constant 1 - c is moved into the numerator; 1 - 1 raises PoleError.
ElliottRational substitute(const ElliottRational& e, const Bindings& b);

/// Cross-multiplied comparison of expanded polynomials, after removing
/// denominator factors the two sides share.
bool rational_equal(const ElliottRational& a, const ElliottRational& b);

/// Exact quotient p / (1 - c*M) when the binomial divides p, else nullopt.
std::optional<LaurentPolynomial> divide_by_binomial(const LaurentPolynomial& p, const Rational& c,
                                                    const Monomial& m);

}  // namespace omega
