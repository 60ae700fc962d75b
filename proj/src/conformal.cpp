#include "mage/conformal.hpp"

#include <algorithm>
#include <array>
#include <mutex>

#include "mage/errors.hpp"
#include "mage/lgrass.hpp"

namespace mage {

namespace {

std::size_t chart_dim(int n) { return static_cast<std::size_t>(n * (n + 1) / 2); }

std::size_t coordinate_index(int n, const std::string& var) {
  auto names = second_jet_names(n);
  auto it = std::find(names.begin(), names.end(), var);
  if (it == names.end()) throw DomainError("'" + var + "' is not a chart coordinate for n = " + std::to_string(n));
  return static_cast<std::size_t>(it - names.begin());
}

RationalFunction quad(const RFVector& u, const QMatrix& g, const RFVector& w) {
  RationalFunction s;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_zero()) continue;
    RationalFunction gw;
    for (std::size_t j = 0; j < w.size(); ++j)
      if (g(i, j) != 0 && !w[j].is_zero()) gw += RationalFunction(g(i, j)) * w[j];
    if (!gw.is_zero()) s += u[i] * gw;
  }
  return s;
}

RFVector mat_vec(const QMatrix& g, const RFVector& v) {
  RFVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (g(i, j) != 0 && !v[j].is_zero()) out[i] += RationalFunction(g(i, j)) * v[j];
  return out;
}

RationalFunction pairing(const RFVector& covector, const RFVector& v) {
  RationalFunction s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!covector[i].is_zero() && !v[i].is_zero()) s += covector[i] * v[i];
  return s;
}

bool all_zero(const std::vector<RationalFunction>& v) {
  return std::all_of(v.begin(), v.end(), [](const RationalFunction& x) { return x.is_zero(); });
}

QMatrix default_metric(int n) {
  if (n == 2) return gram_matrix(tn_form(2).diagonal, 2);
  if (n == 3) {
    QVector id(6);
    id[0] = id[3] = id[5] = 1;
    return gram_matrix(contract(tn_form(3), id), 3);
  }
  throw DomainError("fundamental forms are implemented for n = 2 and 3");
}

}  // namespace

// ---------------------------------------------------------------------------

std::vector<std::string> tangent_names(int n) {
  std::vector<std::string> out;
  for (const auto& p : second_jet_names(n)) out.push_back("v" + p.substr(1));
  return out;
}

SymmetricNForm tn_form(int n) {
  if (n < 2 || n > kMaxDimension) throw Error("T_n needs 2 <= n <= 9");
  std::vector<std::vector<MultiPoly>> v(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) v[i - 1].push_back(MultiPoly::variable("v" + second_jet_name(i, j).substr(1)));
  return {n, poly_determinant(std::move(v))};
}

QMatrix gram_matrix(const MultiPoly& q, int n) {
  auto names = tangent_names(n);
  QMatrix g(names.size(), names.size());
  for (std::size_t a = 0; a < names.size(); ++a) {
    MultiPoly da = q.derivative(names[a]);
    for (std::size_t b = 0; b < names.size(); ++b) {
      MultiPoly dab = da.derivative(names[b]);
      if (!dab.is_constant()) throw Error("gram_matrix: not a quadratic form");
      g(a, b) = dab.constant_term() / 2;
    }
  }
  return g;
}

std::vector<Rational> cubic_polarization(const MultiPoly& cubic, int n) {
  auto names = tangent_names(n);
  const std::size_t d = names.size();
  std::vector<Rational> t(d * d * d);
  for (std::size_t a = 0; a < d; ++a) {
    MultiPoly da = cubic.derivative(names[a]);
    for (std::size_t b = 0; b < d; ++b) {
      MultiPoly dab = da.derivative(names[b]);
      for (std::size_t c = 0; c < d; ++c) {
        MultiPoly dabc = dab.derivative(names[c]);
        if (!dabc.is_constant()) throw Error("cubic_polarization: not a cubic form");
        t[(a * d + b) * d + c] = dabc.constant_term() / 6;
      }
    }
  }
  return t;
}

MultiPoly contract(const SymmetricNForm& t, const QVector& x) {
  auto names = tangent_names(t.n);
  if (x.size() != names.size()) throw Error("contract: vector has the wrong length");
  MultiPoly out;
  for (std::size_t a = 0; a < names.size(); ++a) {
    if (x[a] == 0) continue;
    MultiPoly d = t.diagonal.derivative(names[a]);
    d *= Rational(x[a] / t.n);
    out += d;
  }
  return out;
}

Inertia tn_signature(int n) {
  if (n != 2) throw DomainError("T_n is a quadratic form only for n = 2");
  return inertia(gram_matrix(tn_form(2).diagonal, 2));
}

S2TnMembership s2tn_membership(const QMatrix& q, int n) {
  const std::size_t d = chart_dim(n);
  if (q.rows() != d || q.cols() != d || !(q == q.transpose()))
    throw Error("S^2_{T_n} membership needs a symmetric " + std::to_string(d) + "x" + std::to_string(d) + " matrix");
  std::vector<Exponents> nu;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Exponents e(static_cast<std::size_t>(n), 0);
      ++e[static_cast<std::size_t>(i)];
      ++e[static_cast<std::size_t>(j)];
      nu.push_back(e);
    }
  S2TnMembership out;
  out.certificate = XiPolynomial(n);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      if (q(a, b) == 0) continue;
      Exponents e(static_cast<std::size_t>(n));
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = nu[a][i] + nu[b][i];
      out.certificate.add(e, MultiPoly(q(a, b)));
    }
  out.member = out.certificate.is_zero();
  return out;
}

std::size_t s2tn_dimension(int n) {
  const std::size_t d = chart_dim(n);
  auto rows = xi_monomials(n, 4);
  std::vector<std::pair<std::size_t, std::size_t>> unknowns;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a; b < d; ++b) unknowns.emplace_back(a, b);
  QMatrix m(rows.size(), unknowns.size());
  for (std::size_t u = 0; u < unknowns.size(); ++u) {
    QMatrix q(d, d);
    q(unknowns[u].first, unknowns[u].second) = 1;
    q(unknowns[u].second, unknowns[u].first) = 1;
    auto cert = s2tn_membership(q, n).certificate;
    for (std::size_t r = 0; r < rows.size(); ++r) m(r, u) = cert.coefficient(rows[r]).constant_term();
  }
  return nullspace(m).size();
}

// ---------------------------------------------------------------------------

GraphJets graph_jets(const RationalFunction& h, int n, const std::string& graph_variable) {
  coordinate_index(n, graph_variable);
  if (h.depends_on(graph_variable)) throw DomainError("the graph function depends on " + graph_variable);
  GraphJets j;
  j.n = n;
  j.graph_variable = graph_variable;
  for (const auto& v : second_jet_names(n))
    if (v != graph_variable) j.frame.push_back(v);
  for (const auto& a : j.frame) j.first.push_back(h.derivative(a));
  for (std::size_t a = 0; a < j.frame.size(); ++a) {
    RFVector row;
    for (const auto& b : j.frame) row.push_back(j.first[a].derivative(b));
    j.second.push_back(std::move(row));
  }
  j.value = h;
  return j;
}

std::pair<std::string, RationalFunction> graph_form(const RationalFunction& f, int n) {
  auto names = second_jet_names(n);
  std::reverse(names.begin(), names.end());
  const MultiPoly& num = f.numerator();
  for (const auto& var : names) {
    if (num.degree_in(var) != 1) continue;
    auto parts = num.coefficients_in(var);
    MultiPoly rest = parts.count(0) ? parts.at(0) : MultiPoly();
    return {var, RationalFunction(-rest, parts.at(1))};
  }
  throw DomainError("no graph form: the equation is not affine in any second-order variable");
}

FundamentalForms fundamental_forms(const GraphJets& jets, const FormOptions& opts) {
  const int n = jets.n;
  const std::size_t d = chart_dim(n);
  const std::size_t m = jets.frame.size();
  if (m + 1 != d) throw Error("graph jets do not match the chart dimension");
  QMatrix g = opts.metric ? *opts.metric : default_metric(n);
  if (g.rows() != d || g.cols() != d) throw Error("metric has the wrong size");
  QMatrix ginv = inverse(g);
  const std::size_t s = coordinate_index(n, jets.graph_variable);
  std::vector<std::size_t> fidx;
  for (const auto& a : jets.frame) fidx.push_back(coordinate_index(n, a));

  FundamentalForms out;
  out.n = n;
  out.graph_variable = jets.graph_variable;
  out.normal_target = opts.normal_target.empty() ? jets.graph_variable : opts.normal_target;
  out.frame = jets.frame;

  std::vector<RFVector> e(m, RFVector(d));
  RFVector omega(d);
  omega[s] = RationalFunction(1);
  for (std::size_t a = 0; a < m; ++a) {
    e[a][fidx[a]] = RationalFunction(1);
    e[a][s] = jets.first[a];
    omega[fidx[a]] = -jets.first[a];
  }
  const RationalFunction& omega_t = omega[coordinate_index(n, out.normal_target)];
  if (omega_t.is_zero()) throw DomainError("normal rule g(N, d/d" + out.normal_target + ") = 1 is degenerate here");
  const RationalFunction c = RationalFunction(1) / omega_t;
  RFVector normal = mat_vec(ginv, omega);
  for (auto& x : normal) x *= c;

  out.first.assign(m, RFVector(m));
  out.second.assign(m, RFVector(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a; b < m; ++b) {
      out.first[a][b] = out.first[b][a] = quad(e[a], g, e[b]);
      out.second[a][b] = out.second[b][a] = -c * jets.second[a][b];
    }

  if (opts.log_weight) {
    if (!jets.value) throw DomainError("a conformal weight needs the graph function itself");
    std::map<std::string, RationalFunction> on_graph{{jets.graph_variable, *jets.value}};
    RFVector dl(d);
    auto names = second_jet_names(n);
    for (std::size_t k = 0; k < d; ++k) dl[k] = opts.log_weight->derivative(names[k]).substitute(on_graph);
    RFVector grad = mat_vec(ginv, dl);
    out.log_weighted = true;
    out.normal_derivative_of_weight = pairing(dl, normal);
    // Connection of exp(2 lambda) g: flat derivative plus
    // beta(X, Y) = X(lambda) Y + Y(lambda) X - g(X, Y) grad(lambda).
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a; b < m; ++b) {
        RationalFunction la = pairing(dl, e[a]), lb = pairing(dl, e[b]);
        RFVector v(d);
        v[s] = jets.second[a][b];
        for (std::size_t k = 0; k < d; ++k) v[k] += la * e[b][k] + lb * e[a][k] - out.first[a][b] * grad[k];
        out.second[a][b] = out.second[b][a] = -quad(v, g, normal);
      }
  }

  if (opts.skip_trace) return out;
  out.det_first = determinant(out.first);
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t w = u; w < m; ++w)
      for (std::size_t u2 = u; u2 < m; ++u2)
        for (std::size_t w2 = (u2 == u ? w + 1 : u2); w2 < m; ++w2)
          out.proportionality_residuals.push_back(out.first[u][w] * out.second[u2][w2] -
                                                  out.first[u2][w2] * out.second[u][w]);
  if (!out.det_first.is_zero()) {
    RFMatrix inv = inverse(out.first);
    RationalFunction h;
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) h += inv[a][b] * out.second[b][a];
    out.mean_curvature = h;
    RFMatrix tf = out.second;
    RationalFunction scale = h / RationalFunction(static_cast<long>(m));
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) tf[a][b] -= scale * out.first[a][b];
    out.trace_free = tf;
  }
  return out;
}

std::vector<RationalFunction> trace_free_system(const GraphJets& jets) {
  if (jets.n != 2 || jets.graph_variable != "p22") throw DomainError("trace_free_system is for n = 2 graphs over p22");
  auto forms = fundamental_forms(jets);
  if (!forms.trace_free) throw DomainError("degenerate first fundamental form");
  RationalFunction k = RationalFunction(4) * forms.det_first;
  const auto& t = *forms.trace_free;
  return {k * t[0][0], k * t[0][1], k * t[1][1]};
}

// ---------------------------------------------------------------------------

bool hyperplane_test(const RationalFunction& f, int n) {
  if (n == 2) {
    auto [var, h] = graph_form(f, 2);
    auto forms = fundamental_forms(graph_jets(h, 2, var));
    if (forms.trace_free) {
      for (const auto& row : *forms.trace_free)
        if (!all_zero(row)) return false;
      return true;
    }
    return all_zero(forms.proportionality_residuals);
  }
  if (n == 3) return is_completely_exceptional(f, 3).completely_exceptional();
  throw DomainError("hyperplane_test is implemented for n = 2 and 3");
}

namespace {

// The system T_3(Y, e_a, e_b) = r_ab for a graph over coordinate s, with the first jets h_a
// replaced by free symbols q1..q5 and the right-hand sides by r1..r15, and its generic
// solvability conditions. Computed once per graph variable.
struct N3System {
  RFMatrix matrix;
  std::vector<MultiPoly> conditions;
};

const N3System& n3_system(std::size_t s) {
  static std::mutex mu;
  static std::map<std::size_t, N3System> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(s); it != cache.end()) return it->second;
  auto t = cubic_polarization(tn_form(3).diagonal, 3);
  const std::size_t d = 6;
  std::vector<std::size_t> frame;
  for (std::size_t k = 0; k < d; ++k)
    if (k != s) frame.push_back(k);
  std::vector<std::vector<MultiPoly>> e(5, std::vector<MultiPoly>(d));
  for (std::size_t a = 0; a < 5; ++a) {
    e[a][frame[a]] = MultiPoly(Rational(1));
    e[a][s] = MultiPoly::variable("q" + std::to_string(a + 1));
  }
  RFMatrix a_mat;
  RFVector rhs;
  std::size_t r = 0;
  for (std::size_t a = 0; a < 5; ++a)
    for (std::size_t b = a; b < 5; ++b) {
      RFVector row(d);
      for (std::size_t k = 0; k < d; ++k) {
        MultiPoly acc;
        for (std::size_t l = 0; l < d; ++l) {
          if (e[a][l].is_zero()) continue;
          for (std::size_t m = 0; m < d; ++m) {
            const Rational& tk = t[(k * d + l) * d + m];
            if (tk == 0 || e[b][m].is_zero()) continue;
            MultiPoly term = e[a][l] * e[b][m];
            term *= tk;
            acc += term;
          }
        }
        row[k] = RationalFunction(acc);
      }
      a_mat.push_back(std::move(row));
      rhs.push_back(RationalFunction::variable("r" + std::to_string(++r)));
    }
  N3System sys{a_mat, solve_over_field(a_mat, rhs).residuals};
  return cache.emplace(s, std::move(sys)).first->second;
}

}  // namespace

N3DirectCheck n3_direct_check(const RationalFunction& f) {
  auto [var, h] = graph_form(f, 3);
  GraphJets jets = graph_jets(h, 3, var);
  FormOptions opts;
  opts.skip_trace = true;
  auto forms = fundamental_forms(jets, opts);
  std::map<std::string, RationalFunction> bind;
  std::size_t r = 0;
  for (std::size_t a = 0; a < 5; ++a) {
    bind.emplace("q" + std::to_string(a + 1), jets.first[a]);
    for (std::size_t b = a; b < 5; ++b) bind.emplace("r" + std::to_string(++r), forms.second[a][b]);
  }
  N3DirectCheck out;
  out.graph_variable = var;
  const N3System& sys = n3_system(coordinate_index(3, var));
  for (const auto& c : sys.conditions) {
    RationalFunction v = RationalFunction(c).substitute(bind);
    if (!v.is_zero()) out.residuals.push_back(v.numerator().monic());
  }
  if (out.residuals.empty()) {
    // The generic conditions can vanish where their pivots do, so a pass is confirmed on the
    // specialized system.
    RFMatrix a = sys.matrix;
    RFVector rhs;
    for (auto& row : a)
      for (auto& x : row) x = x.substitute(bind);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = i; j < 5; ++j) rhs.push_back(forms.second[i][j]);
    for (auto& r : solve_over_field(a, rhs).residuals)
      if (!r.is_zero()) out.residuals.push_back(std::move(r));
  }
  out.member = out.residuals.empty();
  return out;
}

bool n3_pointwise_check(const RationalFunction& f, const VectorField& x, const Point& at) {
  auto [var, h] = graph_form(f, 3);
  GraphJets jets = graph_jets(h, 3, var);
  auto names = second_jet_names(3);
  const std::size_t d = 6;
  const std::size_t s = coordinate_index(3, var);
  Point full = at;
  Rational hv = h.value_at(at);
  if (auto it = at.find(var); it != at.end() && it->second != hv)
    throw DomainError("the point is not on the hypersurface");
  full[var] = hv;

  auto t = cubic_polarization(tn_form(3).diagonal, 3);
  auto T = [&](std::size_t a, std::size_t b, std::size_t c) -> const Rational& { return t[(a * d + b) * d + c]; };
  QVector xp(d);
  std::vector<QVector> jac(d, QVector(d));  // jac[k][m] = dX_k / dp_m
  for (std::size_t k = 0; k < d; ++k) {
    xp[k] = RationalFunction(x.components[k]).value_at(full);
    for (std::size_t m = 0; m < d; ++m) jac[k][m] = RationalFunction(x.components[k].derivative(names[m])).value_at(full);
  }
  QMatrix g(d, d);
  std::vector<QMatrix> dg(d, QMatrix(d, d));  // dg[m](k, l) = d g_kl / dp_m
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t l = 0; l < d; ++l)
      for (std::size_t j = 0; j < d; ++j) {
        if (T(j, k, l) == 0) continue;
        g(k, l) += xp[j] * T(j, k, l);
        for (std::size_t m = 0; m < d; ++m) dg[m](k, l) += jac[j][m] * T(j, k, l);
      }
  QMatrix ginv;
  try {
    ginv = inverse(g);
  } catch (const DomainError&) {
    throw DomainError("the field " + x.name + " is degenerate at the point");
  }
  // Christoffel symbols gamma[i](k, l).
  std::vector<QMatrix> gamma(d, QMatrix(d, d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t l = 0; l < d; ++l) {
        Rational acc = 0;
        for (std::size_t j = 0; j < d; ++j)
          if (ginv(i, j) != 0) acc += ginv(i, j) * (dg[k](j, l) + dg[l](j, k) - dg[j](k, l));
        gamma[i](k, l) = acc / 2;
      }
  std::vector<QVector> e(5, QVector(d));
  QVector omega(d);
  omega[s] = 1;
  QMatrix hab(5, 5);
  for (std::size_t a = 0; a < 5; ++a) {
    Rational ha = jets.first[a].value_at(full);
    e[a][coordinate_index(3, jets.frame[a])] = 1;
    e[a][s] = ha;
    omega[coordinate_index(3, jets.frame[a])] = -ha;
    for (std::size_t b = 0; b < 5; ++b) hab(a, b) = jets.second[a][b].value_at(full);
  }
  QMatrix aug(15, d + 1);
  std::size_t row = 0;
  for (std::size_t a = 0; a < 5; ++a)
    for (std::size_t b = a; b < 5; ++b, ++row) {
      Rational conn = 0;
      for (std::size_t i = 0; i < d; ++i) {
        if (omega[i] == 0) continue;
        for (std::size_t k = 0; k < d; ++k)
          for (std::size_t l = 0; l < d; ++l)
            if (e[a][k] != 0 && e[b][l] != 0) conn += omega[i] * gamma[i](k, l) * e[a][k] * e[b][l];
      }
      for (std::size_t y = 0; y < d; ++y) {
        Rational v = 0;
        for (std::size_t k = 0; k < d; ++k)
          for (std::size_t l = 0; l < d; ++l) v += T(y, k, l) * e[a][k] * e[b][l];
        aug(row, y) = v;
      }
      aug(row, d) = -hab(a, b) - conn;
    }
  QMatrix lhs(15, d);
  for (std::size_t r = 0; r < 15; ++r)
    for (std::size_t y = 0; y < d; ++y) lhs(r, y) = aug(r, y);
  return rank(lhs) == rank(aug);
}

DetIdentity det_I_identity(const std::vector<RationalFunction>& k) {
  if (k.size() != 5) throw Error("det_I_identity needs (k0, k1, k2, k3, k4)");
  RationalFunction p11 = RationalFunction::variable("p11"), p12 = RationalFunction::variable("p12");
  RationalFunction den = k[3] + k[0] * p11;
  if (den.is_zero()) throw DomainError("k0 = k3 = 0: the equation cannot be solved for p22");
  RationalFunction h = (k[0] * p12 * p12 - k[1] * p11 - k[2] * p12 - k[4]) / den;
  DetIdentity out;
  out.delta = k[2] * k[2] - RationalFunction(4) * k[1] * k[3] + RationalFunction(4) * k[0] * k[4];
  out.det_first = fundamental_forms(graph_jets(h, 2, "p22")).det_first;
  out.expected = -out.delta / (RationalFunction(4) * den * den);
  out.holds = out.det_first == out.expected;
  return out;
}

PhiReport phi_obstruction(const RationalFunction& f, int n) {
  PhiReport r;
  r.n = n;
  if (n == 2) {
    auto [var, h] = graph_form(f, 2);
    auto forms = fundamental_forms(graph_jets(h, 2, var));
    if (forms.trace_free) {
      r.description = "trace-free second fundamental form (11, 12, 22)";
      const auto& t = *forms.trace_free;
      r.components = {t[0][0], t[0][1], t[1][1]};
    } else {
      r.description = "proportionality residuals of II against I (det I = 0)";
      r.components = forms.proportionality_residuals;
    }
  } else if (n == 3) {
    auto chk = n3_direct_check(f);
    r.description = "obstruction to II lying in the restriction of S^2_{T_3}";
    for (const auto& p : chk.residuals) r.components.emplace_back(p);
  } else {
    throw DomainError("phi is implemented for n = 2 and 3");
  }
  r.vanishes = all_zero(r.components);
  return r;
}

// ---------------------------------------------------------------------------

namespace {

const std::array<std::array<std::size_t, 3>, 3> kRows = {{{0, 1, 2}, {1, 3, 4}, {2, 4, 5}}};

MultiPoly pvar(std::size_t r, std::size_t c) {
  return MultiPoly::variable(second_jet_name(static_cast<int>(r + 1), static_cast<int>(c + 1)));
}

VectorField linear_field(std::size_t a, std::size_t b, bool literal) {
  VectorField x;
  x.name = "row" + std::to_string(a + 1) + "->row" + std::to_string(b + 1);
  x.components.assign(6, MultiPoly());
  for (std::size_t j = 0; j < 3; ++j) {
    bool full = literal ? j == 0 : j == b;
    MultiPoly src = MultiPoly::variable(second_jet_names(3)[kRows[a][j]]);
    src *= Rational(full ? 1 : Rational(1, 2));
    x.components[kRows[b][j]] = src;
  }
  return x;
}

}  // namespace

std::vector<VectorField> sp6_generators() {
  std::vector<VectorField> out;
  auto names = second_jet_names(3);
  for (std::size_t k = 0; k < 6; ++k) {
    VectorField x;
    x.name = "d/d" + names[k];
    x.components.assign(6, MultiPoly());
    x.components[k] = MultiPoly(Rational(1));
    out.push_back(std::move(x));
  }
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) out.push_back(linear_field(a, b, false));
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = a; b < 3; ++b) {
      VectorField x;
      x.name = "P e" + std::to_string(a + 1) + " e" + std::to_string(b + 1) + "^T P (sym)";
      x.components.assign(6, MultiPoly());
      for (std::size_t l = 0; l < 3; ++l)
        for (std::size_t m = l; m < 3; ++m) {
          MultiPoly c = pvar(l, a) * pvar(b, m) + pvar(l, b) * pvar(a, m);
          c *= Rational(1, 2);
          x.components[kRows[l][m]] = c;
        }
      out.push_back(std::move(x));
    }
  return out;
}

std::vector<VectorField> sp6_linear_generators_literal() {
  std::vector<VectorField> out;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) out.push_back(linear_field(a, b, true));
  return out;
}

VectorField stretching_field(int n) {
  VectorField x;
  x.name = "stretching";
  for (const auto& v : second_jet_names(n)) x.components.push_back(MultiPoly::variable(v));
  return x;
}

ConformalCheck conformal_check(const VectorField& x) {
  if (x.components.size() != 6) throw Error("conformal_check is for fields on the n = 3 chart");
  auto names = second_jet_names(3);
  auto vnames = tangent_names(3);
  MultiPoly det = tn_form(3).diagonal;
  MultiPoly lie;
  for (std::size_t a = 0; a < 6; ++a) {
    MultiPoly dxv;
    for (std::size_t m = 0; m < 6; ++m) {
      MultiPoly dx = x.components[a].derivative(names[m]);
      if (!dx.is_zero()) dxv += dx * MultiPoly::variable(vnames[m]);
    }
    if (!dxv.is_zero()) lie += dxv * det.derivative(vnames[a]);
  }
  ConformalCheck out;
  // Coefficient of v11 v22 v33, where det has coefficient 1.
  MultiPoly mu = lie;
  for (const char* v : {"v11", "v22", "v33"}) {
    auto parts = mu.coefficients_in(v);
    mu = parts.count(1) ? parts.at(1) : MultiPoly();
  }
  out.mu = mu.evaluate({{"v12", 0}, {"v13", 0}, {"v23", 0}}).compact();
  out.residual = lie - out.mu * det;
  out.conformal = out.residual.is_zero();
  return out;
}

std::size_t field_rank(const std::vector<VectorField>& fields) {
  std::map<std::pair<std::size_t, std::string>, std::size_t> column;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> entries(fields.size());
  auto reg = std::make_shared<const VarNames>(second_jet_names(3));
  for (std::size_t f = 0; f < fields.size(); ++f)
    for (std::size_t k = 0; k < fields[f].components.size(); ++k) {
      MultiPoly comp = fields[f].components[k].embed(reg);
      for (const auto& [e, c] : comp.terms()) {
        std::string key;
        for (auto x : e) key += std::to_string(x) + ",";
        auto it = column.emplace(std::make_pair(k, key), column.size()).first;
        entries[f].emplace_back(it->second, c);
      }
    }
  QMatrix m(fields.size(), column.size());
  for (std::size_t f = 0; f < fields.size(); ++f)
    for (const auto& [col, c] : entries[f]) m(f, col) = c;
  return rank(m);
}

}  // namespace mage
