#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mage/rational.hpp"

namespace mage {

using Exponents = std::vector<std::uint32_t>;
using VarNames = std::vector<std::string>;

/// Fixed global order on variable names: second-jet p_ij (by i, then j), covectors xi_i,
/// base coordinates x_i, u, first-jet p_i, then every other name in natural order
/// (alphabetic prefix, then numeric suffix).
bool variable_less(std::string_view a, std::string_view b);

/// Sorted union under variable_less.
VarNames merge_variables(const VarNames& a, const VarNames& b);

std::uint32_t total_degree(const Exponents& e);

/// Graded lexicographic order, greatest first: higher total degree wins, ties broken by
/// the first differing exponent in registry order.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial over Q.
///
/// The registry is a sorted list of variable names shared between copies. Operands with
/// different registries are re-embedded into the merged registry, so arithmetic never
/// fails on a registry mismatch. Stored coefficients are never zero.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexGreater>;

  MultiPoly();
  MultiPoly(const Rational& c);  // NOLINT: implicit by design of the algebra
  MultiPoly(long c) : MultiPoly(Rational(c)) {}  // NOLINT
  MultiPoly(int c) : MultiPoly(Rational(c)) {}   // NOLINT

  static MultiPoly variable(const std::string& name);
  static MultiPoly monomial(const VarNames& vars, Exponents exps, const Rational& coef);
  /// Terms with zero coefficients are dropped; exponent vectors must match `vars`.
  static MultiPoly from_terms(VarNames vars, const std::vector<std::pair<Exponents, Rational>>& terms);

  const VarNames& vars() const { return *vars_; }
  const std::shared_ptr<const VarNames>& registry() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  /// Coefficient of the constant monomial (0 if absent).
  Rational constant_term() const;

  std::uint32_t total_degree() const;
  std::uint32_t degree_in(std::string_view var) const;
  bool depends_on(std::string_view var) const { return degree_in(var) > 0; }
  VarNames used_variables() const;
  std::optional<std::size_t> index_of(std::string_view var) const;

  const Exponents& leading_exponents() const;
  const Rational& leading_coefficient() const;

  /// Drops unused variables from the registry.
  MultiPoly compact() const;
  /// Re-embeds into `superset`, which must contain every variable of this registry.
  MultiPoly embed(const std::shared_ptr<const VarNames>& superset) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  /// Formal partial derivative; zero when `var` is absent from the registry.
  MultiPoly derivative(std::string_view var) const;

  /// Coefficients with respect to `var`: f = sum_k c_k var^k, c_k free of var.
  std::map<std::uint32_t, MultiPoly> coefficients_in(std::string_view var) const;

  /// Partial evaluation at rational values; unbound variables stay symbolic.
  MultiPoly evaluate(const std::map<std::string, Rational>& values) const;
  /// Polynomial composition: each bound variable replaced by a polynomial.
  MultiPoly compose(const std::map<std::string, MultiPoly>& bindings) const;

  /// Monic normalization (leading coefficient 1); zero stays zero.
  MultiPoly monic() const;

 private:
  MultiPoly(std::shared_ptr<const VarNames> vars, TermMap terms);
  void add_scaled(const MultiPoly& o, const Rational& scale);

  std::shared_ptr<const VarNames> vars_;
  TermMap terms_;

  friend std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b);
  friend std::pair<MultiPoly, MultiPoly> align(const MultiPoly& a, const MultiPoly& b);
};

inline bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

/// Non-negative integer power. Negative exponents belong to RationalFunction.
MultiPoly pow(const MultiPoly& base, long exponent);

/// Re-embeds both operands into their merged registry.
std::pair<MultiPoly, MultiPoly> align(const MultiPoly& a, const MultiPoly& b);

/// Quotient when b divides a exactly, nullopt otherwise. Throws on b = 0.
std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b);

/// Monic greatest common divisor (gcd(0, 0) = 0).
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

/// Monic gcd of the coefficients of f viewed as a polynomial in `var`.
MultiPoly content_in(const MultiPoly& f, std::string_view var);

/// Pseudo-remainder of a by b with respect to `var`.
MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, std::string_view var);

/// Human-readable form, e.g. "p11*p22 - p12^2 + 1/2*k0". Reparses to the same polynomial.
std::string to_string(const MultiPoly& p);

}  // namespace mage
