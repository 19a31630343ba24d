#pragma once

// Evaluation of MacMahon's Omega_>= operator on Elliott rational functions by
// partial fractions in one lambda at a time.
//
// For E(lambda) = L(lambda) / prod (1 - c_i u_i lambda^a_i)^m_i with a_i > 0:
//
//   E = P(lambda) + p(lambda)/lambda^s + sum_{i,j} A_ij(lambda) / (1 - c_i u_i lambda^a_i)^j
//
// with deg A_ij < a_i and deg p < s. Applying Omega_>= termwise:
//   - P contributes P(1),
//   - p/lambda^s contributes nothing,
//   - a small factor contributes A_ij(1) / (1 - c_i u_i)^j,
//   - a large factor contributes nothing.
// The dual route uses Omega E = E(1) - (contributions of the large factors),
// valid when p = 0 and E(1) exists.

#include <optional>
#include <vector>

#include "omega/elliott.hpp"

namespace omega {

/// Omega_>= of the input would be an infinite sum (a small factor 1 - lambda^a
/// with a nonzero residue).
class DivergenceError : public Error {
public:
    using Error::Error;
};

/// Two denominator factors share a root, so a residue cannot be formed.
class ZeroDivisorError : public Error {
public:
    using Error::Error;
};

/// Canonical remainder of p modulo 1 - c*u*lam^a (a > 0): every lam^n becomes
/// lam^(n mod a) * (c*u)^(-floor(n/a)).
LaurentPolynomial reduce_mod(const LaurentPolynomial& p, const Factor& f, Symbol lam);

/// An element of the quotient ring written as num / prod(den), where the
/// denominator factors are free of lam.
struct ModInverse {
    LaurentPolynomial num;
    std::vector<Factor> den;
};

/// Inverse of a binomial (or monomial) g modulo 1 - c*u*lam^a. Uses
///   1/(1 - X) = (1 + X + ... + X^(N-1)) / (1 - X^N),  N = a / gcd(a, deg X)
/// where X^N reduces to a lam-free term. Throws ZeroDivisorError if
/// 1 - X^N vanishes.
ModInverse invert_mod(const LaurentPolynomial& g, const Factor& f, Symbol lam);

struct Residue {
    Factor factor;  ///< normalized factor (positive exponent in lambda)
    int level = 1;  ///< power j of the factor this residue sits over
    ElliottRational value;  ///< A_ij(lambda); denominators free of lambda
};

struct PartialFractionResult {
    Symbol lambda;
    ElliottRational poly_part;  ///< P(lambda)
    ElliottRational pole_numerator;  ///< p(lambda), deg < pole_order
    int pole_order = 0;  ///< s
    std::vector<Residue> residues;
};

/// Decomposes e in lam. e is normalized in lam first.
PartialFractionResult partial_fractions(const ElliottRational& e, Symbol lam);

/// P + p/lam^s + sum A_ij / f_i^j as one rational function.
ElliottRational reassemble(const PartialFractionResult& pf, const OrderPtr& order);

enum class Mode { direct, dual, automatic };

struct EliminationStrategy {
    Mode mode = Mode::automatic;
    /// Explicit elimination sequence; empty selects the count heuristic.
    std::vector<Symbol> lambda_order;
};

struct TraceStep {
    Symbol lambda;
    Mode mode = Mode::direct;  ///< route actually taken
    std::vector<Factor> underlined;  ///< factors whose residues were used
    ElliottRational input;  ///< value normalized in lambda
    ElliottRational result;
};

struct TraceLog {
    std::vector<TraceStep> steps;
};

/// Omega_>= in a single lambda. Dual mode falls back to direct when its
/// preconditions fail. Throws DivergenceError / ZeroDivisorError.
ElliottRational omega_eliminate_one(const ElliottRational& e, Symbol lam, Mode mode,
                                    TraceStep* step = nullptr);

/// Eliminates every lambda present. Without an explicit order, each step
/// picks the lambda minimizing min(#contributing, #dually contributing),
/// ties broken by the variable order.
std::pair<ElliottRational, TraceLog> omega_eliminate_all(const ElliottRational& e,
                                                         const EliminationStrategy& strategy = {});

/// Re-runs each recorded step and checks it against the log; returns the
/// final value. Throws std::logic_error on a mismatch.
ElliottRational replay(const ElliottRational& input, const TraceLog& log);

const char* mode_name(Mode m);

}  // namespace omega
