#pragma once

// Polynomial expressions in x and y: + - * ^ and parentheses, explicit '*'
// required. Literals are integers, decimals ("0.25") or fractions ("3/4").

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "binform/polyring.hpp"

namespace binform {

struct ExprAST {
  enum class Kind { Variable, Literal, Negate, Sum, Difference, Product, Power, Group };

  Kind kind = Kind::Literal;
  std::size_t offset = 0;  // byte offset of the node's first character
  char variable = 'x';
  Rational value;        // Literal
  unsigned exponent = 0; // Power
  std::vector<std::unique_ptr<ExprAST>> children;
};

inline constexpr unsigned kMaxExponent = 256;

/// Throws SyntaxError, NegativeExponent or UnknownIdentifier with the byte offset.
std::unique_ptr<ExprAST> parse_expression(std::string_view text);

BivariatePoly evaluate(const ExprAST& node);

BivariatePoly parse_polynomial(std::string_view text);

/// NotHomogeneous (details: the distinct total degrees, descending) or ZeroForm.
HomogeneousForm to_homogeneous(const BivariatePoly& p);

/// Canonical text: descending x exponent, unit coefficients omitted, '^'
/// only for exponents >= 2, fractions as p/q.
std::string to_text(const HomogeneousForm& f);
std::string to_text(const BivariatePoly& p);

}  // namespace binform
