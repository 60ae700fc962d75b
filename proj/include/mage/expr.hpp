#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "mage/rational_function.hpp"
#include "mage/variables.hpp"

namespace mage {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { constant, variable, add, sub, mul, div, pow, negate };

  Kind kind = Kind::constant;
  Rational value;             // constant
  VariableKind var;           // variable
  unsigned long exponent = 0;  // pow
  std::vector<ExprPtr> children;
};

/// Grammar:
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := '-' factor | atom ('^' nat)?
///   atom   := number | ident | '(' expr ')'
/// Numbers are integers or decimals (exact). Throws ParseError with the byte offset of the
/// offending token, or Error for a bad jet index.
ExprPtr parse(std::string_view text, int n);

RationalFunction lower(const Expr& e);

/// Convenience: lower(parse(text, n)).
RationalFunction parse_function(std::string_view text, int n);

/// Tree form, e.g. Sub(p22, Pow(p11, 2)).
std::string to_tree_string(const Expr& e);

/// Text that parses back to the same function.
std::string format(const RationalFunction& f);

}  // namespace mage
