#pragma once

// Plain-text rendering in the same grammar the expression parser accepts,
// so printed values can be read back.

#include <string>

#include "omega/elliott.hpp"

namespace omega {

std::string to_string(const Rational& q);
std::string to_string(const Monomial& m, const VariableOrder& order);
std::string to_string(const LaurentPolynomial& p, const VariableOrder& order);
std::string to_string(const Factor& f, const VariableOrder& order);
/// Factored form: expanded numerator over sorted binomial powers.
std::string to_string(const ElliottRational& e);
/// Numerator and denominator both expanded.
std::string to_string_expanded(const ElliottRational& e);

/// Display order for terms: ascending parameter degree, then lexicographic.
bool display_before(const Monomial& a, const Monomial& b, const VariableOrder& order);
std::vector<std::pair<Monomial, Rational>> sorted_terms(const LaurentPolynomial& p,
                                                        const VariableOrder& order);
std::vector<Factor> sorted_factors(const std::vector<Factor>& fs, const VariableOrder& order);

}  // namespace omega
