#pragma once

// Truncated-series ground truth: Omega_>= applied term by term to the
// expansion of a rational function, and brute-force lattice enumerations.

#include <optional>
#include <vector>

#include "omega/elliott.hpp"

namespace omega {

/// Coefficients of every monomial whose parameter degree is at most
/// degree_bound. Lambda exponents are unrestricted.
struct SeriesTable {
    std::map<Monomial, Rational> coeffs;
    int degree_bound = 0;
    OrderPtr order;

    Rational at(const Monomial& m) const;
};

/// Series of e with all terms of parameter degree <= d. Each factor is
/// expanded geometrically in its small orientation. Throws omega::Error
/// "oracle requires x-graded denominators" for a factor of degree 0.
SeriesTable expand(const ElliottRational& e, int d);

/// Keeps the terms whose lambda exponents are all nonnegative, then sets
/// every lambda to 1.
SeriesTable omega_by_definition(const SeriesTable& t);

struct Mismatch {
    Monomial monomial;
    Rational expected;  ///< oracle coefficient
    Rational got;  ///< candidate coefficient
};

/// First differing coefficient in display order, or nullopt when the tables
/// agree. Throws std::invalid_argument when the degree bounds differ.
std::optional<Mismatch> compare(const SeriesTable& expected, const SeriesTable& got);

struct VerifyResult {
    bool ok = false;
    std::optional<Mismatch> mismatch;
};

/// Checks Omega_>=(e) == r through degree d.
VerifyResult verify(const ElliottRational& e, const ElliottRational& r, int d);

/// t_k(n) for n = 0..n_max: weakly increasing positive k-tuples summing to n
/// whose first k-1 parts sum to more than the last.
std::vector<long long> enumerate_kgon(int k, int n_max);

/// Sum of x^m y^n over m, n >= 0 with K*m >= n, L*n >= m and m + n <= d.
SeriesTable enumerate_two_dim(int big_k, int big_l, int d);

/// Sum of x^i y^j q^(b_0+...+b_k+c_1+...+c_r) over the chains
/// i >= b_0 >= ... >= b_k >= 0, b_0 >= j >= c_1 >= ... >= c_r >= 0,
/// truncated at total degree d in x, y, q.
SeriesTable enumerate_hard(int k, int r, int d);

/// Order with the given parameter names and no lambdas; used by the
/// enumerations.
OrderPtr parameter_order(std::initializer_list<std::string_view> names);

}  // namespace omega
