#include "mage/json_io.hpp"

#include "mage/errors.hpp"

namespace mage {

Json to_json(const Rational& x) { return to_string(x); }
Json to_json(const MultiPoly& p) {
  MultiPoly c = p.compact();
  Json terms = Json::array();
  for (const auto& [e, coef] : c.terms()) terms.push_back({{"exps", e}, {"coef", to_string(coef)}});
  return {{"vars", c.vars()}, {"terms", std::move(terms)}, {"text", to_string(c)}};
}

MultiPoly multipoly_from_json(const Json& j) {
  VarNames vars = j.at("vars").get<VarNames>();
  std::vector<std::pair<Exponents, Rational>> terms;
  for (const auto& t : j.at("terms")) {
    Exponents e = t.at("exps").get<Exponents>();
    if (e.size() != vars.size()) throw ParseError("exponent vector length does not match vars", 0);
    terms.emplace_back(std::move(e), parse_rational(t.at("coef").get<std::string>()));
  }
  return MultiPoly::from_terms(std::move(vars), terms);
}

Json to_json(const RationalFunction& f) { return to_string(f); }
Json to_json(const QuadraticSurd& x) { return to_string(x); }

Json to_json(const CharacteristicRoot& root, bool approx) {
  Json j = root.at_infinity ? Json("infinity") : to_json(root.value);
  if (!approx) return j;
  Json out;
  out["exact"] = j;
  if (root.at_infinity)
    out["approx"] = nullptr;
  else
    out["approx"] = root.approx;
  return out;
}

Json to_json(const RFMatrix& m) {
  Json j = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(to_json(x));
    j.push_back(std::move(r));
  }
  return j;
}

Json to_json(const QMatrix& m) {
  Json j = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json r = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) r.push_back(to_json(m(i, k)));
    j.push_back(std::move(r));
  }
  return j;
}

Json to_json(const ClassificationResult& c, bool approx) {
  Json j;
  j["type"] = to_string(c.type);
  j["delta"] = c.delta_value ? to_json(*c.delta_value) : to_json(c.delta);
  Json roots = Json::array();
  for (const auto& r : c.roots) roots.push_back(to_json(r, approx));
  j["roots"] = std::move(roots);
  return j;
}

namespace {

Json poly_list(const std::vector<MultiPoly>& v) {
  Json j = Json::array();
  for (const auto& p : v) j.push_back(to_json(p));
  return j;
}

Json rf_list(const std::vector<RationalFunction>& v) {
  Json j = Json::array();
  for (const auto& p : v) j.push_back(to_json(p));
  return j;
}

}  // namespace

Json to_json(const ExceptionalityReport& r) {
  const bool shell = r.on_shell_proportional.has_value();
  const auto& cofactor = shell ? r.on_shell_cofactor : r.cofactor;
  Json j;
  j["completely_exceptional"] = r.completely_exceptional();
  j["globally_proportional"] = r.globally_proportional;
  j["on_shell_proportional"] = shell ? Json(*r.on_shell_proportional) : Json(nullptr);
  j["cofactor"] = cofactor ? to_json(*cofactor) : Json(nullptr);
  j["residuals"] = poly_list(shell ? r.on_shell_residuals : r.residuals);
  if (shell) {
    j["on_shell_variable"] = r.on_shell_variable;
    j["on_shell_value"] = to_json(*r.on_shell_value);
  }
  j["global_cofactor"] = r.cofactor ? to_json(*r.cofactor) : Json(nullptr);
  j["global_residuals"] = poly_list(r.residuals);
  return j;
}

Json to_json(const PlueckerVector& w) {
  Json j;
  j["n"] = w.n;
  Json idx = Json::array(), coords = Json::array();
  const auto& indices = chart_indices(w.n);
  for (std::size_t c = 0; c < w.coords.size(); ++c) {
    idx.push_back({{"rows", indices[c].rows}, {"cols", indices[c].cols}});
    coords.push_back(to_json(w.coords[c]));
  }
  j["coordinates"] = std::move(coords);
  j["minors"] = std::move(idx);
  return j;
}

Json to_json(const RankOneLine& line) {
  Json j;
  j["n"] = line.n;
  j["degenerate"] = line.degenerate;
  j["affine"] = line.affine;
  Json coeffs = Json::array();
  for (const auto& c : line.coefficients) {
    Json row = Json::array();
    for (const auto& x : c) row.push_back(to_json(x));
    coeffs.push_back(std::move(row));
  }
  j["t_coefficients"] = std::move(coeffs);
  return j;
}

Json to_json(const KernelBasis& k) {
  Json j;
  j["n"] = k.n;
  j["r"] = k.r;
  j["dimension"] = k.dimension;
  j["max_degree"] = k.max_degree;
  j["degree_bound"] = k.degree_bound;
  j["columns"] = k.columns;
  j["basis"] = poly_list(k.basis);
  return j;
}

Json to_json(const FundamentalForms& f) {
  Json j;
  j["n"] = f.n;
  j["graph_variable"] = f.graph_variable;
  j["normal_target"] = f.normal_target;
  j["frame"] = f.frame;
  j["first"] = to_json(f.first);
  j["second"] = to_json(f.second);
  j["det_first"] = to_json(f.det_first);
  j["mean_curvature"] = f.mean_curvature ? to_json(*f.mean_curvature) : Json(nullptr);
  j["trace_free"] = f.trace_free ? to_json(*f.trace_free) : Json(nullptr);
  bool prop = true;
  for (const auto& r : f.proportionality_residuals) prop = prop && r.is_zero();
  j["second_proportional_to_first"] = prop;
  if (f.log_weighted) j["normal_derivative_of_weight"] = to_json(*f.normal_derivative_of_weight);
  return j;
}

Json to_json(const PhiReport& p) {
  Json j;
  j["n"] = p.n;
  j["vanishes"] = p.vanishes;
  j["description"] = p.description;
  j["components"] = rf_list(p.components);
  return j;
}

Json to_json(const ConformalCheck& c) {
  Json j;
  j["conformal"] = c.conformal;
  j["mu"] = to_json(c.mu);
  j["residual"] = to_json(c.residual);
  return j;
}

KernelBasis kernel_basis_from_json(const Json& j) {
  KernelBasis k;
  k.n = j.at("n").get<int>();
  k.r = j.at("r").get<int>();
  k.dimension = j.at("dimension").get<std::size_t>();
  k.max_degree = j.at("max_degree").get<std::uint32_t>();
  k.degree_bound = j.at("degree_bound").get<std::uint32_t>();
  k.columns = j.value("columns", std::size_t{0});
  for (const auto& b : j.at("basis")) k.basis.push_back(multipoly_from_json(b));
  if (k.basis.size() != k.dimension) throw ParseError("kernel basis size does not match its dimension", 0);
  return k;
}

Point parse_point(const std::string& text) {
  Point p;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    std::string item = text.substr(pos, end - pos);
    std::size_t eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("expected name=value in point", pos);
    std::string name = item.substr(0, eq);
    while (!name.empty() && name.front() == ' ') name.erase(name.begin());
    while (!name.empty() && name.back() == ' ') name.pop_back();
    if (name.empty()) throw ParseError("missing variable name in point", pos);
    if (!p.emplace(name, parse_rational(item.substr(eq + 1))).second)
      throw ParseError("variable '" + name + "' given twice", pos);
    pos = end + 1;
  }
  return p;
}

QVector parse_rational_list(const std::string& text) {
  QVector v;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    v.push_back(parse_rational(text.substr(pos, end - pos)));
    pos = end + 1;
  }
  return v;
}

}  // namespace mage
