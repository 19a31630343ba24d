#pragma once

// LaTeX and JSON emitters. The plain-text form lives in omega/print.hpp.

#include <string>

#include "omega/elliott.hpp"
#include "json.hpp"

namespace omega::cli {

std::string latex_name(const std::string& var);
std::string to_latex(const Monomial& m, const VariableOrder& order);
std::string to_latex(const LaurentPolynomial& p, const VariableOrder& order);
std::string to_latex(const Factor& f, const VariableOrder& order);
std::string to_latex(const ElliottRational& e, bool expand = false);

/// {"numerator": [[num, den, {var: exp}], ...],
///  "denominator": [{"coeff": [num, den], "mono": {var: exp}, "mult": m}, ...]}
/// with integers as decimal strings.
nlohmann::ordered_json to_json(const ElliottRational& e);
nlohmann::ordered_json to_json(const Monomial& m, const VariableOrder& order);
nlohmann::ordered_json to_json(const Factor& f, const VariableOrder& order);

}  // namespace omega::cli
