#pragma once

// Named Omega_>= identities with builders for both sides, shared by the test
// suite and the `catalog` subcommand.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "omega/oracle.hpp"
#include "omega/omega.hpp"

namespace omega {

struct CatalogEntry {
    std::string id;
    std::map<std::string, int> parameters;
    std::function<ElliottRational()> input;
    std::function<ElliottRational()> expected;
    std::string provenance;
    /// Applied to the eliminated value before the comparison with `expected`
    /// (e.g. specializing auxiliary variables). Empty means identity.
    std::function<ElliottRational(const ElliottRational&)> post;
};

struct EntryReport {
    std::string id;
    bool symbolic_ok = false;
    bool oracle_ok = false;
    std::string error;  ///< engine error, if any
    std::optional<Mismatch> mismatch;
    double millis = 0;

    bool ok() const { return symbolic_ok && oracle_ok && error.empty(); }
};

/// Eliminates the input, compares with the expected side exactly, and checks
/// the eliminated value against the oracle at the given degree.
EntryReport check_entry(const CatalogEntry& entry, int oracle_degree = 4);

/// Order with lambdas first, then parameters, from names.
OrderPtr make_order(const std::vector<std::string>& lambdas, const std::vector<std::string>& params);

/// Monomial from (name, exponent) pairs.
Monomial mono(std::initializer_list<std::pair<std::string_view, int>> entries);

/// The nine basic single-lambda evaluations; s parameterizes the first two.
std::vector<CatalogEntry> fundamentals(int s);

/// The three-factor identity computed by both routes in the tests.
CatalogEntry three_factor_example();
/// Two-lambda identity with numerator 1 - AB l1 l2.
CatalogEntry two_lambda_entry();
/// Four-lambda chain with result numerator 1 - x1^2 x2 x3.
CatalogEntry four_lambda_entry();

/// (a; q)_n as n factors 1 - c*a*q^j, j = 0..n-1.
std::vector<Factor> q_pochhammer(const Rational& c, const Monomial& a, Symbol q, int n);

/// sum_i U(1/x_i) / ((1 - x_i) prod_j (1 - y_j x_i) prod_{j != i} (1 - x_j/x_i)),
/// combined into one value. U is a Laurent polynomial in lam. Throws
/// omega::Error when two x_i coincide.
ElliottRational han_rhs(const LaurentPolynomial& u, Symbol lam, const std::vector<Monomial>& xs,
                        const std::vector<Monomial>& ys, const OrderPtr& order);
/// U(lam) / (prod (1 - x_i lam) prod (1 - y_j / lam)).
ElliottRational han_input(const LaurentPolynomial& u, Symbol lam, const std::vector<Monomial>& xs,
                          const std::vector<Monomial>& ys, const OrderPtr& order);
/// Han instance on x1..xn, y1..ym with U = lam^u_power.
CatalogEntry han_entry(int n, int m, int u_power);

/// Variables l1..lk, x1..xk.
ElliottRational kgon_input(int k);
ElliottRational kgon_closed(int k);
/// In q alone.
ElliottRational tk_closed(int k);
/// x_i -> q applied to a value over the k-gon order, expressed in q.
ElliottRational kgon_specialize(const ElliottRational& e, int k);
CatalogEntry kgon_entry(int k);

/// Variables l1, l2, x, y.
ElliottRational two_dim_input(int big_k, int big_l);
/// Variables x, y.
ElliottRational two_dim_closed(int big_k, int big_l);
CatalogEntry two_dim_entry(int big_k, int big_l);

/// Single-lambda product in x, y, t, z, q; t and z are specialized to q
/// after elimination.
ElliottRational hard_input(int k, int r);
/// Sum of r + 2 terms in x, y, q.
ElliottRational hard_closed(int k, int r);
/// t, z -> q, expressed over the order (x, y, q).
ElliottRational hard_specialize(const ElliottRational& e);
CatalogEntry hard_entry(int k, int r);

/// Both sides of the G1 / G2 transforms of F(x, y). F must use parameters
/// named x and y; the outputs use l1..l3 and x, y, z.
struct GTransforms {
    ElliottRational g1_input;
    ElliottRational g1_closed;
    ElliottRational g2_input;
    ElliottRational g2_closed;
};
GTransforms g_transforms(const ElliottRational& f);
std::vector<CatalogEntry> g_entries(const std::string& label, const ElliottRational& f);

/// Omega F(1/lam) / (1 - A lam) and F(A) / (1 - A). F is a function of the
/// parameter u; the result order puts lam before F's variables.
std::pair<ElliottRational, ElliottRational> inverse_lambda_series_sides(const ElliottRational& f, Symbol u,
                                                         const Monomial& a, Symbol lam);
/// Omega F(lam) / (1 - A/lam) and (F(1) - A F(A)) / (1 - A).
std::pair<ElliottRational, ElliottRational> lambda_series_sides(const ElliottRational& f, Symbol u,
                                                         const Monomial& a, Symbol lam);

/// The full corpus at default parameters.
std::vector<CatalogEntry> all_entries();

}  // namespace omega
