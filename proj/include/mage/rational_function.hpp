#pragma once

#include <map>
#include <string>

#include "mage/multipoly.hpp"

namespace mage {

/// Quotient of polynomials in lowest terms with a monic denominator.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Rational(1)) {}
  RationalFunction(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT
  RationalFunction(long c) : RationalFunction(Rational(c)) {}          // NOLINT
  RationalFunction(int c) : RationalFunction(Rational(c)) {}           // NOLINT
  RationalFunction(const MultiPoly& p) : num_(p), den_(Rational(1)) {}  // NOLINT
  /// Throws DomainError when `den` is zero.
  RationalFunction(const MultiPoly& num, const MultiPoly& den);

  static RationalFunction variable(const std::string& name) { return RationalFunction(MultiPoly::variable(name)); }

  const MultiPoly& numerator() const { return num_; }
  const MultiPoly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// Value of a constant function; throws otherwise.
  Rational constant_value() const;
  bool depends_on(std::string_view var) const { return num_.depends_on(var) || den_.depends_on(var); }
  VarNames used_variables() const;

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  RationalFunction derivative(std::string_view var) const;

  /// Replaces variables by rational functions. Throws DomainError("pole ...") when the
  /// denominator vanishes under the substitution.
  RationalFunction substitute(const std::map<std::string, RationalFunction>& bindings) const;
  /// Partial evaluation; throws DomainError on a pole.
  RationalFunction evaluate(const std::map<std::string, Rational>& values) const;
  /// Full evaluation to a number; throws if a variable is left unbound.
  Rational value_at(const std::map<std::string, Rational>& values) const;

 private:
  void normalize();

  MultiPoly num_;
  MultiPoly den_;
};

RationalFunction pow(const RationalFunction& base, long exponent);

std::string to_string(const RationalFunction& f);

}  // namespace mage
