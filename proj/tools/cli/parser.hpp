#pragma once

// Expression reader for the CLI. Grammar:
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := ('-')? base ('^' ['-'] int)?
//   base   := int | ident | '(' expr ')'
// Rational literals are written as p/q. Identifiers are letters followed by
// letters or digits.

#include <optional>
#include <string>
#include <vector>

#include "omega/elliott.hpp"

namespace omega::cli {

class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

struct ParseOptions {
    /// Full variable order; empty derives it from the expression.
    std::vector<std::string> order;
    /// Lambda names; empty selects every name starting with 'l'.
    std::vector<std::string> lambdas;
};

/// Identifiers in order of first appearance.
std::vector<std::string> identifiers(const std::string& text);

/// Variable order for the expression: lambdas first, then parameters, each
/// group sorted naturally (x2 before x10) unless --order fixes it.
OrderPtr resolve_order(const std::vector<std::string>& idents, const ParseOptions& opts);

/// Parses into an Elliott rational function. Denominator binomials with a
/// constant term keep the written orientation; others are oriented small.
ElliottRational parse(const std::string& text, const OrderPtr& order);
ElliottRational parse(const std::string& text, const ParseOptions& opts = {});

/// Natural comparison of names: letter runs lexicographically, digit runs
/// numerically.
bool natural_less(const std::string& a, const std::string& b);

}  // namespace omega::cli
