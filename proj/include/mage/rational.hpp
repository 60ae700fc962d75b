#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace mage {

using Integer = mpz_class;
// mpq_class keeps gcd(num, den) = 1 and den > 0 after every arithmetic operation.
using Rational = mpq_class;

/// Decimal "num/den", with the denominator omitted when it is 1.
std::string to_string(const Rational& q);

/// Accepts "7", "-3/4" and finite decimals such as "0.25" (no exponent notation).
Rational parse_rational(std::string_view text);

/// Exact square root in Q, if it exists.
std::optional<Rational> rational_sqrt(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }

}  // namespace mage
