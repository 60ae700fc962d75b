#include "mage/symbols.hpp"

#include <algorithm>
#include <array>

#include "mage/errors.hpp"
#include "mage/function_field.hpp"

namespace mage {

std::vector<Exponents> xi_monomials(int n, std::uint32_t d) {
  std::vector<Exponents> out;
  Exponents e(static_cast<std::size_t>(n), 0);
  // Enumerate in descending lexicographic order, which is grlex-descending for fixed degree.
  auto rec = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
    if (i + 1 == e.size()) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (std::uint32_t k = left + 1; k-- > 0;) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
    e[i] = 0;
  };
  if (n > 0) rec(rec, 0, d);
  return out;
}

SymbolForm symbol(const RationalFunction& f, int n) { return iterated_symbol(f, n, 1); }

SymbolForm iterated_symbol(const RationalFunction& f, int n, int k) {
  if (k < 1) throw Error("iterated symbol order must be at least 1");
  SymbolForm s = SymbolForm::constant(n, f);
  for (int i = 0; i < k; ++i) s = s.rank_one_derivative();
  return s;
}

std::string to_string(EquationType t) {
  switch (t) {
    case EquationType::hyperbolic:
      return "hyperbolic";
    case EquationType::elliptic:
      return "elliptic";
    case EquationType::parabolic:
      return "parabolic";
    case EquationType::degenerate:
      return "degenerate";
  }
  return "?";
}

namespace {

void require_n2(const RationalFunction& f) {
  for (const auto& v : f.used_variables()) {
    auto k = classify_variable(v, 9);
    if (k.kind == VarClass::second_jet && (k.i > 2 || k.j > 2))
      throw DomainError("two-variable operation applied to a function of " + v);
  }
}

Rational value_at_point(const RationalFunction& f, const Point& at) {
  RationalFunction r = f.evaluate(at);
  if (!r.is_constant()) {
    std::string names;
    for (const auto& v : r.used_variables()) names += (names.empty() ? "" : ", ") + v;
    throw DomainError("the point does not fix " + names);
  }
  return r.constant_value();
}

const std::array<const char*, 3> kJet2 = {"p11", "p12", "p22"};

CharacteristicRoot make_root(const QuadraticSurd& v) {
  CharacteristicRoot r;
  r.value = v;
  r.exact = v.is_rational();
  r.approx = v.approx();
  return r;
}

// Roots of a + b*lambda + c*lambda^2 with Delta = b^2 - 4ac >= 0, sorted descending.
std::vector<CharacteristicRoot> roots_of(const Rational& a, const Rational& b, const Rational& c) {
  Rational delta = b * b - 4 * a * c;
  std::vector<CharacteristicRoot> out;
  if (c == 0) {
    if (b != 0) out.push_back(make_root(QuadraticSurd(-a / b, delta)));
    CharacteristicRoot inf;
    inf.at_infinity = true;
    out.push_back(inf);
    return out;
  }
  QuadraticSurd plus(-b / (2 * c), 1 / (2 * c), delta), minus(-b / (2 * c), -1 / (2 * c), delta);
  out.push_back(make_root(plus));
  if (delta != 0) out.push_back(make_root(minus));
  std::sort(out.begin(), out.end(),
            [](const CharacteristicRoot& x, const CharacteristicRoot& y) { return x.approx > y.approx; });
  return out;
}

}  // namespace

ClassificationResult classify(const RationalFunction& f, const std::optional<Point>& at) {
  require_n2(f);
  RationalFunction f11 = f.derivative("p11"), f12 = f.derivative("p12"), f22 = f.derivative("p22");
  ClassificationResult res;
  res.delta = f12 * f12 - RationalFunction(4) * f11 * f22;
  std::optional<std::array<Rational, 3>> coeffs;
  if (at) {
    coeffs = std::array<Rational, 3>{value_at_point(f11, *at), value_at_point(f12, *at), value_at_point(f22, *at)};
    const auto& c = *coeffs;
    res.delta_value = c[1] * c[1] - 4 * c[0] * c[2];
  } else {
    if (f11.is_zero() && f12.is_zero() && f22.is_zero()) {
      res.type = EquationType::degenerate;
      return res;
    }
    if (!res.delta.is_constant())
      throw DomainError("the discriminant " + to_string(res.delta) + " is not constant; supply a point");
    res.delta_value = res.delta.constant_value();
    if (f11.is_constant() && f12.is_constant() && f22.is_constant())
      coeffs = std::array<Rational, 3>{f11.constant_value(), f12.constant_value(), f22.constant_value()};
  }
  if (coeffs && (*coeffs)[0] == 0 && (*coeffs)[1] == 0 && (*coeffs)[2] == 0) {
    res.type = EquationType::degenerate;
    return res;
  }
  int s = sign(*res.delta_value);
  res.type = s > 0 ? EquationType::hyperbolic : s < 0 ? EquationType::elliptic : EquationType::parabolic;
  if (coeffs && s >= 0) res.roots = roots_of((*coeffs)[0], (*coeffs)[1], (*coeffs)[2]);
  return res;
}

std::vector<RootResidual> exceptionality_at_roots(const RationalFunction& f, const Point& at) {
  require_n2(f);
  std::array<Rational, 3> d1;
  std::array<std::array<Rational, 3>, 3> d2;
  for (int a = 0; a < 3; ++a) {
    RationalFunction fa = f.derivative(kJet2[a]);
    d1[a] = value_at_point(fa, at);
    for (int b = 0; b < 3; ++b) d2[a][b] = value_at_point(fa.derivative(kJet2[b]), at);
  }
  if (d1[0] == 0 && d1[1] == 0 && d1[2] == 0) throw DomainError("parabolic/degenerate point: the symbol vanishes");
  Rational delta = d1[1] * d1[1] - 4 * d1[0] * d1[2];
  if (delta < 0) throw DomainError("elliptic, no real roots");
  if (delta == 0) throw DomainError("parabolic/degenerate point: double root");

  // Residual of the root `lam` of d1[s0] + d1[1] lam + d1[s2] lam^2, where (s0, s2) = (0, 2)
  // in the lambda chart and (2, 0) in the kappa chart.
  auto residual = [&](const QuadraticSurd& lam, int s0, int s2) {
    QuadraticSurd lam2 = lam * lam;
    QuadraticSurd denom = QuadraticSurd(d1[1], delta) + QuadraticSurd(2 * d1[s2], delta) * lam;
    if (denom.is_zero()) throw DomainError("parabolic/degenerate point: F_p12 + 2 F_p22 lambda vanishes");
    const std::array<int, 3> slot = {s0, 1, s2};
    std::array<QuadraticSurd, 3> lp;
    for (int a = 0; a < 3; ++a) {
      int p = slot[a];
      QuadraticSurd num = QuadraticSurd(d2[s0][p], delta) + QuadraticSurd(d2[1][p], delta) * lam +
                          QuadraticSurd(d2[s2][p], delta) * lam2;
      lp[a] = -num / denom;
    }
    return lp[0] + lp[1] * lam + lp[2] * lam2;
  };

  std::vector<RootResidual> out;
  for (const auto& root : roots_of(d1[0], d1[1], d1[2])) {
    RootResidual rr;
    rr.root = root;
    rr.residual = root.at_infinity ? residual(QuadraticSurd(0, delta), 2, 0) : residual(root.value, 0, 2);
    out.push_back(rr);
  }
  return out;
}

CofactorSolve solve_cofactor(const SymbolForm& s1, const SymbolForm& s2, int n) {
  CofactorSolve res;
  if (s1.is_zero()) throw DomainError("cannot divide by a zero symbol");
  // Division by a single polynomial in xi over the function field: s1 divides s2 exactly when
  // the remainder is zero, whatever the term order.
  const auto& [lead_e, lead_c] = *s1.terms().begin();
  SymbolForm rem = s2, quotient(n), remainder(n);
  while (!rem.is_zero()) {
    const auto [e, c] = *rem.terms().begin();
    Exponents shift(e.size());
    bool divides = true;
    for (std::size_t i = 0; i < e.size() && divides; ++i) {
      divides = e[i] >= lead_e[i];
      if (divides) shift[i] = e[i] - lead_e[i];
    }
    if (!divides) {
      remainder.add(e, c);
      rem.add(e, -c);
      continue;
    }
    RationalFunction q = c / lead_c;
    quotient.add(shift, q);
    SymbolForm step(n);
    for (const auto& [se, sc] : s1.terms()) {
      Exponents t(se.size());
      for (std::size_t i = 0; i < t.size(); ++i) t[i] = se[i] + shift[i];
      step.add(t, sc * q);
    }
    rem -= step;
  }
  res.proportional = remainder.is_zero();
  for (const auto& [e, c] : remainder.terms()) res.residuals.push_back(c.numerator().monic());
  if (res.proportional) res.cofactor = quotient;
  return res;
}

ExceptionalityReport is_completely_exceptional(const RationalFunction& f, int n) {
  SymbolForm s1 = symbol(f, n);
  if (s1.is_zero()) throw DomainError("degenerate equation: the symbol vanishes identically");
  SymbolForm s2 = s1.rank_one_derivative();
  ExceptionalityReport rep;
  auto global = solve_cofactor(s1, s2, n);
  rep.globally_proportional = global.proportional;
  rep.cofactor = global.cofactor;
  rep.residuals = global.residuals;

  std::vector<std::string> candidates = second_jet_names(n);
  std::reverse(candidates.begin(), candidates.end());
  const MultiPoly& num = f.numerator();
  for (const auto& var : candidates) {
    if (num.degree_in(var) != 1) continue;
    auto parts = num.coefficients_in(var);
    const MultiPoly& lead = parts.at(1);
    MultiPoly rest = parts.count(0) ? parts.at(0) : MultiPoly();
    RationalFunction value(-rest, lead);
    std::map<std::string, RationalFunction> bind{{var, value}};
    try {
      auto on1 = s1.map([&](const RationalFunction& c) { return c.substitute(bind); });
      auto on2 = s2.map([&](const RationalFunction& c) { return c.substitute(bind); });
      if (on1.is_zero()) continue;
      auto shell = solve_cofactor(on1, on2, n);
      rep.on_shell_proportional = shell.proportional;
      rep.on_shell_variable = var;
      rep.on_shell_value = value;
      rep.on_shell_cofactor = shell.cofactor;
      rep.on_shell_residuals = shell.residuals;
      break;
    } catch (const DomainError&) {
      continue;
    }
  }
  return rep;
}

std::pair<RationalFunction, RationalFunction> check_quasilinear_system(const RationalFunction& h) {
  if (h.depends_on("p22")) throw DomainError("h must not depend on p22");
  require_n2(h);
  RationalFunction h1 = h.derivative("p11"), h2 = h.derivative("p12");
  RationalFunction h11 = h1.derivative("p11"), h12 = h1.derivative("p12"), h22 = h2.derivative("p12");
  return {h11 + h1 * h22, RationalFunction(2) * h12 + h2 * h22};
}

}  // namespace mage
