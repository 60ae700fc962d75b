#pragma once

#include <string>

#include "mage/rational.hpp"

namespace mage {

/// a + b*sqrt(d) for a fixed rational radicand d. Operands must share d.
class QuadraticSurd {
 public:
  QuadraticSurd() = default;
  QuadraticSurd(const Rational& a, const Rational& b, const Rational& d);
  QuadraticSurd(const Rational& a, const Rational& d) : QuadraticSurd(a, 0, d) {}

  const Rational& rational_part() const { return a_; }
  const Rational& surd_part() const { return b_; }
  const Rational& radicand() const { return d_; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }
  double approx() const;

  QuadraticSurd operator-() const { return {-a_, -b_, d_}; }
  friend QuadraticSurd operator+(const QuadraticSurd& x, const QuadraticSurd& y);
  friend QuadraticSurd operator-(const QuadraticSurd& x, const QuadraticSurd& y) { return x + (-y); }
  friend QuadraticSurd operator*(const QuadraticSurd& x, const QuadraticSurd& y);
  friend QuadraticSurd operator/(const QuadraticSurd& x, const QuadraticSurd& y);

 private:
  Rational a_ = 0;
  Rational b_ = 0;
  Rational d_ = 0;
};

/// "a", "b*sqrt(d)" or "a + b*sqrt(d)".
std::string to_string(const QuadraticSurd& x);

}  // namespace mage
