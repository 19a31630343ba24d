#pragma once

// Exact Laurent-polynomial arithmetic over Q.
//
// Variables are interned symbols; a VariableOrder carries the role of each
// variable (eliminable lambda or parameter) and the tie-break order used by
// the monomial comparison. Orders are values passed alongside polynomials,
// never global state.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace omega {

using Rational = mpq_class;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Interned variable name. Comparison is by interning id, which is stable
/// for the lifetime of the process but carries no mathematical meaning.
class Symbol {
public:
    Symbol() = default;
    explicit Symbol(std::string_view name);

    const std::string& name() const;
    std::uint32_t id() const { return id_; }

    friend bool operator==(Symbol a, Symbol b) { return a.id_ == b.id_; }
    friend auto operator<=>(Symbol a, Symbol b) { return a.id_ <=> b.id_; }

private:
    std::uint32_t id_ = 0;
};

struct SymbolHash {
    std::size_t operator()(Symbol s) const noexcept { return s.id(); }
};

/// Sparse signed exponent vector. Entries are sorted by symbol id and no
/// entry has a zero exponent, so equal monomials compare equal bytewise.
class Monomial {
public:
    using Entry = std::pair<Symbol, int>;

    Monomial() = default;
    Monomial(std::initializer_list<Entry> entries);
    static Monomial var(Symbol s, int exp = 1);
    static Monomial var(std::string_view name, int exp = 1) { return var(Symbol(name), exp); }

    bool is_one() const { return entries_.empty(); }
    int exponent(Symbol s) const;
    bool contains(Symbol s) const { return exponent(s) != 0; }
    const std::vector<Entry>& entries() const { return entries_; }

    Monomial inverse() const;
    Monomial pow(int k) const;
    /// Drops the given variable.
    Monomial without(Symbol s) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend Monomial operator/(const Monomial& a, const Monomial& b) { return a * b.inverse(); }
    Monomial& operator*=(const Monomial& b) { return *this = *this * b; }

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.entries_ <=> b.entries_; }

private:
    std::vector<Entry> entries_;
};

/// The ordered variable list of a computation plus the subset of variables
/// that the Omega operator eliminates.
class VariableOrder {
public:
    VariableOrder() = default;
    VariableOrder(std::vector<Symbol> vars, std::vector<Symbol> lambdas);
    /// Convenience: names; lambdas are listed first, parameters after.
    static VariableOrder make(std::initializer_list<std::string_view> lambdas,
                              std::initializer_list<std::string_view> params);
    static VariableOrder make(const std::vector<std::string>& lambdas,
                              const std::vector<std::string>& params);

    const std::vector<Symbol>& vars() const { return vars_; }
    const std::vector<Symbol>& lambdas() const { return lambdas_; }
    std::vector<Symbol> parameters() const;

    bool contains(Symbol s) const { return index_.count(s) != 0; }
    bool is_lambda(Symbol s) const;
    /// Position in the order; unknown symbols sort after every known one.
    std::size_t rank(Symbol s) const;

    /// Total exponent of parameter (non-lambda) variables.
    int parameter_degree(const Monomial& m) const;

    friend bool operator==(const VariableOrder& a, const VariableOrder& b) {
        return a.vars_ == b.vars_ && a.lambdas_ == b.lambdas_;
    }

private:
    std::vector<Symbol> vars_;
    std::vector<Symbol> lambdas_;
    std::unordered_map<Symbol, std::size_t, SymbolHash> index_;
    std::unordered_map<Symbol, bool, SymbolHash> lambda_flag_;
};

using OrderPtr = std::shared_ptr<const VariableOrder>;

/// True iff M < 1 in the working field. The field is graded by parameter
/// degree: M is small when its parameter degree is positive. Degree-zero
/// monomials are decided lexicographically, parameters first (in order),
/// then lambdas (in order); the first nonzero exponent gives the answer.
/// Throws omega::Error for the unit monomial.
bool is_small(const Monomial& m, const VariableOrder& order);

/// Lexicographic comparison of exponent vectors under the order; used for
/// printing. Returns true when a sorts before b.
bool lex_before(const Monomial& a, const Monomial& b, const VariableOrder& order);

struct ScaledMonomial {
    Rational coeff{1};
    Monomial mono;
};

using Bindings = std::map<Symbol, ScaledMonomial>;

class LaurentPolynomial {
public:
    using TermMap = std::map<Monomial, Rational>;

    LaurentPolynomial() = default;
    LaurentPolynomial(const Rational& c);  // NOLINT: implicit scalar promotion
    LaurentPolynomial(int c) : LaurentPolynomial(Rational(c)) {}  // NOLINT
    LaurentPolynomial(const Rational& c, const Monomial& m);
    explicit LaurentPolynomial(const Monomial& m) : LaurentPolynomial(Rational(1), m) {}
    static LaurentPolynomial var(std::string_view name, int exp = 1) {
        return LaurentPolynomial(Monomial::var(name, exp));
    }

    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Single term c*M (including a nonzero constant).
    bool is_term() const { return terms_.size() == 1; }
    Rational constant_term() const;
    Rational coefficient(const Monomial& m) const;

    void add_term(const Rational& c, const Monomial& m);

    LaurentPolynomial& operator+=(const LaurentPolynomial& o);
    LaurentPolynomial& operator-=(const LaurentPolynomial& o);
    LaurentPolynomial& operator*=(const LaurentPolynomial& o) { return *this = *this * o; }
    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
    LaurentPolynomial operator-() const;

    LaurentPolynomial scaled(const Rational& c, const Monomial& m) const;
    LaurentPolynomial pow(unsigned k) const;

    /// Minimum / maximum exponent of s over all terms (0,0 for the zero polynomial).
    int min_degree(Symbol s) const;
    int max_degree(Symbol s) const;
    bool contains(Symbol s) const;

    /// Splits by the exponent of s; the returned coefficients are free of s.
    std::map<int, LaurentPolynomial> collect(Symbol s) const;
    static LaurentPolynomial from_collected(const std::map<int, LaurentPolynomial>& parts, Symbol s);

    LaurentPolynomial substitute(const Bindings& b) const;

    friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

private:
    TermMap terms_;
};

/// Ring operation selector for poly_arith.
enum class PolyOp { add, sub, mul };
LaurentPolynomial poly_arith(const LaurentPolynomial& a, const LaurentPolynomial& b, PolyOp op);

/// Rational power with integer exponent; throws on 0^negative.
Rational rational_pow(const Rational& base, int exp);

}  // namespace omega
