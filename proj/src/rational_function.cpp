#include "mage/rational_function.hpp"

#include "mage/errors.hpp"

namespace mage {

namespace {

MultiPoly exact_quotient(const MultiPoly& a, const MultiPoly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw Error("internal: gcd does not divide");
  return std::move(*q);
}

}  // namespace

RationalFunction::RationalFunction(const MultiPoly& num, const MultiPoly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw DomainError("division by zero");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    num_ = MultiPoly();
    den_ = MultiPoly(Rational(1));
    return;
  }
  num_ = num_.compact();
  den_ = den_.compact();
  if (!den_.is_constant()) {
    MultiPoly g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = exact_quotient(num_, g).compact();
      den_ = exact_quotient(den_, g).compact();
    }
  }
  Rational lc = den_.leading_coefficient();
  if (lc != 1) {
    Rational inv = 1 / lc;
    num_ *= inv;
    den_ *= inv;
  }
}

Rational RationalFunction::constant_value() const {
  if (!is_constant()) throw Error("not a constant: " + to_string(*this));
  return num_.constant_term() / den_.constant_term();
}

VarNames RationalFunction::used_variables() const {
  return merge_variables(num_.used_variables(), den_.used_variables());
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    // Same denominator: only a common factor of the new numerator with den can appear.
    normalize();
    return *this;
  }
  if (is_polynomial() && o.is_polynomial()) {
    num_ = num_ + o.num_;
    den_ = MultiPoly(Rational(1));
    normalize();
    return *this;
  }
  MultiPoly g = gcd(den_, o.den_);
  MultiPoly da = exact_quotient(den_, g), db = exact_quotient(o.den_, g);
  num_ = num_ * db + o.num_ * da;
  den_ = den_ * db;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (is_zero() || o.is_zero()) return *this = RationalFunction();
  if (is_polynomial() && o.is_polynomial()) {
    num_ = num_ * o.num_;
    normalize();
    return *this;
  }
  // Cross-cancel first so the products stay small.
  MultiPoly g1 = gcd(num_, o.den_), g2 = gcd(o.num_, den_);
  MultiPoly n = exact_quotient(num_, g1) * exact_quotient(o.num_, g2);
  MultiPoly d = exact_quotient(den_, g2) * exact_quotient(o.den_, g1);
  num_ = std::move(n);
  den_ = std::move(d);
  Rational lc = den_.leading_coefficient();
  if (lc != 1) {
    num_ *= Rational(1 / lc);
    den_ *= Rational(1 / lc);
  }
  num_ = num_.compact();
  den_ = den_.compact();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  RationalFunction inv;
  inv.num_ = o.den_;
  inv.den_ = o.num_;
  Rational lc = inv.den_.leading_coefficient();
  if (lc != 1) {
    inv.num_ *= Rational(1 / lc);
    inv.den_ *= Rational(1 / lc);
  }
  return *this *= inv;
}

RationalFunction RationalFunction::derivative(std::string_view var) const {
  if (!depends_on(var)) return RationalFunction();
  if (is_polynomial()) return RationalFunction(num_.derivative(var) * Rational(1 / den_.constant_term()));
  MultiPoly n = num_.derivative(var) * den_ - num_ * den_.derivative(var);
  return RationalFunction(n, den_ * den_);
}

RationalFunction RationalFunction::substitute(const std::map<std::string, RationalFunction>& bindings) const {
  auto eval_poly = [&](const MultiPoly& p) {
    bool touched = false;
    for (const auto& v : p.used_variables())
      if (bindings.count(v)) touched = true;
    if (!touched) return RationalFunction(p);
    std::map<std::string, MultiPoly> poly_bind;
    bool all_poly = true;
    for (const auto& v : p.used_variables()) {
      auto it = bindings.find(v);
      if (it == bindings.end()) continue;
      if (!it->second.is_polynomial()) {
        all_poly = false;
        break;
      }
      poly_bind.emplace(v, it->second.numerator() * Rational(1 / it->second.denominator().constant_term()));
    }
    if (all_poly) return RationalFunction(p.compose(poly_bind));
    RationalFunction acc;
    const VarNames& vars = p.vars();
    for (const auto& [e, c] : p.terms()) {
      RationalFunction term(c);
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (!e[i]) continue;
        auto it = bindings.find(vars[i]);
        if (it == bindings.end()) {
          term *= RationalFunction(pow(MultiPoly::variable(vars[i]), e[i]));
        } else {
          term *= pow(it->second, e[i]);
        }
      }
      acc += term;
    }
    return acc;
  };
  RationalFunction n = eval_poly(num_);
  RationalFunction d = eval_poly(den_);
  if (d.is_zero()) throw DomainError("pole: denominator " + to_string(den_) + " vanishes");
  return n / d;
}

RationalFunction RationalFunction::evaluate(const std::map<std::string, Rational>& values) const {
  MultiPoly d = den_.evaluate(values);
  if (d.is_zero()) throw DomainError("pole: denominator " + to_string(den_) + " vanishes");
  return RationalFunction(num_.evaluate(values), d);
}

Rational RationalFunction::value_at(const std::map<std::string, Rational>& values) const {
  RationalFunction r = evaluate(values);
  if (!r.is_constant()) throw DomainError("unbound variables in evaluation: " + to_string(r));
  return r.constant_value();
}

RationalFunction pow(const RationalFunction& base, long exponent) {
  if (exponent < 0) {
    if (base.is_zero()) throw DomainError("division by zero");
    return RationalFunction(1) / pow(base, -exponent);
  }
  return RationalFunction(pow(base.numerator(), exponent), pow(base.denominator(), exponent));
}

std::string to_string(const RationalFunction& f) {
  if (f.is_polynomial()) {
    MultiPoly p = f.numerator();
    p *= Rational(1 / f.denominator().constant_term());
    return to_string(p);
  }
  std::string num = to_string(f.numerator()), den = to_string(f.denominator());
  if (f.numerator().term_count() > 1) num = "(" + num + ")";
  if (f.denominator().term_count() > 1 || den.find('*') != std::string::npos) den = "(" + den + ")";
  return num + "/" + den;
}

}  // namespace mage
