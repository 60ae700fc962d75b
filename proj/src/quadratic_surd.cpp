#include "mage/quadratic_surd.hpp"

#include <cmath>

#include "mage/errors.hpp"

namespace mage {

QuadraticSurd::QuadraticSurd(const Rational& a, const Rational& b, const Rational& d) : a_(a), b_(b), d_(d) {
  if (auto r = rational_sqrt(d)) {
    a_ += b_ * *r;
    b_ = 0;
  }
}

double QuadraticSurd::approx() const {
  double v = a_.get_d();
  if (b_ != 0) v += b_.get_d() * std::sqrt(d_.get_d());
  return v;
}

static void check_radicand(const QuadraticSurd& x, const QuadraticSurd& y) {
  if (!x.is_rational() && !y.is_rational() && x.radicand() != y.radicand())
    throw Error("quadratic surds with different radicands");
}

QuadraticSurd operator+(const QuadraticSurd& x, const QuadraticSurd& y) {
  check_radicand(x, y);
  const Rational& d = x.is_rational() ? y.d_ : x.d_;
  return {x.a_ + y.a_, x.b_ + y.b_, d};
}

QuadraticSurd operator*(const QuadraticSurd& x, const QuadraticSurd& y) {
  check_radicand(x, y);
  const Rational& d = x.is_rational() ? y.d_ : x.d_;
  return {x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, d};
}

QuadraticSurd operator/(const QuadraticSurd& x, const QuadraticSurd& y) {
  check_radicand(x, y);
  if (y.is_zero()) throw DomainError("division by zero");
  // Multiply by the conjugate: (a - b sqrt d) / (a^2 - b^2 d).
  Rational norm = y.a_ * y.a_ - y.b_ * y.b_ * y.d_;
  QuadraticSurd conj(y.a_ / norm, -y.b_ / norm, y.d_);
  return x * conj;
}

std::string to_string(const QuadraticSurd& x) {
  if (x.is_rational()) return to_string(x.rational_part());
  std::string surd = (x.surd_part() == 1 ? "" : x.surd_part() == -1 ? "-" : to_string(x.surd_part()) + "*") +
                     "sqrt(" + to_string(x.radicand()) + ")";
  if (x.rational_part() == 0) return surd;
  if (x.surd_part() < 0) {
    std::string pos = (x.surd_part() == -1 ? "" : to_string(Rational(-x.surd_part())) + "*") + "sqrt(" +
                      to_string(x.radicand()) + ")";
    return to_string(x.rational_part()) + " - " + pos;
  }
  return to_string(x.rational_part()) + " + " + surd;
}

}  // namespace mage
