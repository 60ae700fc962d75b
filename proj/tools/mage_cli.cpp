#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mage/bgg.hpp"
#include "mage/conformal.hpp"
#include "mage/errors.hpp"
#include "mage/expr.hpp"
#include "mage/json_io.hpp"
#include "mage/lgrass.hpp"
#include "mage/symbols.hpp"

using namespace mage;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

struct UsageError : Error {
  using Error::Error;
};

struct Args {
  int n = 2;
  int r = 1;
  int k = 1;
  std::string expr;
  std::string point;
  std::string xi;
  std::string lambda;
  std::string normal;
  std::size_t cap = KernelOptions{}.cap;
  bool json = false;
  bool approx = false;
  bool serial = false;
};

std::string read_expr(const std::string& text) {
  if (text.empty() || text[0] != '@') return text;
  std::ifstream in(text.substr(1));
  if (!in) throw UsageError("cannot read '" + text.substr(1) + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RationalFunction expr_arg(const Args& a) {
  if (a.expr.empty()) throw UsageError("--expr is required");
  return parse_function(read_expr(a.expr), a.n);
}

QMatrix point_matrix(const Args& a) {
  if (a.point.empty()) throw UsageError("--point is required");
  Point pt = parse_point(a.point);
  for (const auto& [name, v] : pt) {
    auto kind = classify_variable(name, a.n);
    if (kind.kind != VarClass::second_jet) throw Error("'" + name + "' is not a second-order variable");
  }
  Point canon;
  for (const auto& [name, v] : pt) canon[classify_variable(name, a.n).name] = v;
  return symmetric_from_point(a.n, canon);
}

// ---------------------------------------------------------------------------

Json cmd_classify(const Args& a) {
  std::optional<Point> at;
  if (!a.point.empty()) at = parse_point(a.point);
  return to_json(classify(expr_arg(a), at), a.approx);
}

Json cmd_symbol(const Args& a) {
  Json j;
  j["k"] = a.k;
  j["symbol"] = to_json(iterated_symbol(expr_arg(a), a.n, a.k));
  return j;
}

Json cmd_is_ma(const Args& a) { return to_json(is_completely_exceptional(expr_arg(a), a.n)); }

Json cmd_check_system(const Args& a) {
  if (a.n != 2) throw DomainError("check-system is for n = 2");
  auto [e1, e2] = check_quasilinear_system(expr_arg(a));
  Json j;
  j["residuals"] = {to_json(e1), to_json(e2)};
  j["satisfied"] = e1.is_zero() && e2.is_zero();
  return j;
}

Json cmd_fundamental_forms(const Args& a) {
  auto [var, h] = graph_form(expr_arg(a), a.n);
  FormOptions opts;
  opts.normal_target = a.normal;
  opts.skip_trace = a.n == 3;
  if (!a.lambda.empty()) opts.log_weight = parse_function(read_expr(a.lambda), a.n);
  GraphJets jets = graph_jets(h, a.n, var);
  Json j;
  j["graph_value"] = to_json(h);
  if (!opts.log_weight) {
    j["forms"] = to_json(fundamental_forms(jets, opts));
    if (a.n == 2 && var == "p22" && !fundamental_forms(jets).det_first.is_zero()) {
      Json sys = Json::array();
      for (const auto& x : trace_free_system(jets)) sys.push_back(to_json(x));
      j["trace_free_system"] = std::move(sys);
    }
    return j;
  }
  // Rescaled forms next to the law II + N(lambda) I built from the unweighted ones.
  FormOptions flat = opts;
  flat.log_weight.reset();
  auto plain = fundamental_forms(jets, flat);
  auto weighted = fundamental_forms(jets, opts);
  RFMatrix law = plain.second;
  for (std::size_t i = 0; i < law.size(); ++i)
    for (std::size_t k = 0; k < law.size(); ++k) law[i][k] += *weighted.normal_derivative_of_weight * plain.first[i][k];
  j["forms"] = to_json(weighted);
  j["flat_second"] = to_json(plain.second);
  j["transformation_law_holds"] = law == weighted.second;
  return j;
}

Json cmd_hyperplane_test(const Args& a) {
  RationalFunction f = expr_arg(a);
  Json j;
  j["hyperplane_section"] = hyperplane_test(f, a.n);
  if (a.n == 3) j["direct_check"] = n3_direct_check(f).member;
  return j;
}

Json cmd_bgg_kernel(const Args& a) {
  KernelOptions opts;
  opts.cap = a.cap;
  return to_json(a.serial ? kernel_basis_dense(a.n, a.r, opts) : kernel_basis(a.n, a.r, opts));
}

Json cmd_bgg_apply(const Args& a) {
  RationalFunction f = expr_arg(a);
  if (!f.is_polynomial()) throw DomainError("bgg-apply needs a polynomial");
  MultiPoly p = f.numerator() * MultiPoly(Rational(1 / f.denominator().constant_term()));
  XiPolynomial out = bgg_apply(p, a.n, a.r);
  Json j;
  j["r"] = a.r;
  j["result"] = to_json(out);
  j["zero"] = out.is_zero();
  return j;
}

Json cmd_pluecker(const Args& a) {
  QMatrix p = point_matrix(a);
  PlueckerVector w = minors_chart(p);
  Json j = to_json(w);
  bool relations = true;
  for (const auto& rel : chart_relations(a.n)) {
    Rational s = 0;
    for (std::size_t c = 0; c < rel.size(); ++c) s += rel[c] * w.coords[c];
    relations = relations && s == 0;
  }
  j["linear_relations_satisfied"] = relations;
  j["independent_coordinates"] = independent_coordinates(a.n);
  if (a.n == 2) {
    const auto& c = w.coords;
    j["quadric"] = to_json(Rational(c[0] * c[4] - c[1] * c[3] + c[2] * c[2]));
  }
  return j;
}

Json cmd_rank_one_line(const Args& a) {
  QMatrix p = point_matrix(a);
  if (a.xi.empty()) throw UsageError("--xi is required");
  QVector xi = parse_rational_list(a.xi);
  if (xi.size() != static_cast<std::size_t>(a.n)) throw UsageError("--xi needs n entries");
  return to_json(rank_one_line(p, xi));
}

Json cmd_sp6_check(const Args&) {
  Json gens = Json::array();
  bool all = true;
  auto fields = sp6_generators();
  for (const auto& x : fields) {
    auto c = conformal_check(x);
    all = all && c.conformal;
    gens.push_back({{"name", x.name}, {"conformal", c.conformal}, {"mu", to_json(c.mu)}});
  }
  Json literal = Json::array();
  for (const auto& x : sp6_linear_generators_literal())
    if (!conformal_check(x).conformal) literal.push_back(x.name);
  Json j;
  j["all_conformal"] = all;
  j["rank"] = field_rank(fields);
  j["stretching_mu"] = to_json(conformal_check(stretching_field(3)).mu);
  j["generators"] = std::move(gens);
  j["literal_linear_not_conformal"] = std::move(literal);
  return j;
}

Json cmd_phi(const Args& a) { return to_json(phi_obstruction(expr_arg(a), a.n)); }

// ---------------------------------------------------------------------------

void print_human(const Json& j, const std::string& indent = "") {
  auto text_of = [](const Json& v) { return v.is_object() && v.contains("text") && v.contains("terms"); };
  for (const auto& [key, v] : j.items()) {
    std::cout << indent << key << ":";
    if (text_of(v)) {
      std::cout << " " << v["text"].get<std::string>() << "\n";
    } else if (v.is_string()) {
      std::cout << " " << v.get<std::string>() << "\n";
    } else if (v.is_object()) {
      std::cout << "\n";
      print_human(v, indent + "  ");
    } else if (v.is_array() &&
               std::all_of(v.begin(), v.end(), [&](const Json& x) { return x.is_string() || text_of(x); })) {
      std::cout << (v.empty() ? " (none)\n" : "\n");
      for (const auto& x : v) std::cout << indent << "  " << (x.is_string() ? x : x["text"]).get<std::string>() << "\n";
    } else {
      std::cout << " " << v.dump() << "\n";
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on Lagrangian Grassmannians and Monge-Ampere equations", "mage"};
  app.require_subcommand(1);
  Args args;

  using Handler = std::function<Json(const Args&)>;
  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto add = [&](const std::string& name, const std::string& help, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_flag("--json", args.json, "JSON output");
    commands.emplace_back(sub, std::move(h));
    return sub;
  };
  auto with_n = [&](CLI::App* s) { s->add_option("--n", args.n, "dimension")->check(CLI::Range(1, kMaxDimension)); };
  auto with_expr = [&](CLI::App* s) { s->add_option("--expr", args.expr, "expression, or @file")->required(); };

  auto* s = add("classify", "type, discriminant and characteristic roots (n = 2)", cmd_classify);
  with_n(s);
  with_expr(s);
  s->add_option("--point", args.point, "p11=a/b,...");
  s->add_flag("--approx", args.approx, "add floating approximations of the roots");
  s = add("symbol", "iterated symbol Smbl^k", cmd_symbol);
  with_n(s);
  with_expr(s);
  s->add_option("--k", args.k, "order")->check(CLI::PositiveNumber);
  s = add("is-ma", "complete exceptionality test", cmd_is_ma);
  with_n(s);
  with_expr(s);
  s = add("check-system", "two-equation system for p22 = h (expr is h)", cmd_check_system);
  with_n(s);
  with_expr(s);
  s = add("fundamental-forms", "I, II and trace-free II of the graph of F = 0", cmd_fundamental_forms);
  with_n(s);
  with_expr(s);
  s->add_option("--lambda", args.lambda, "conformal weight exp(2 lambda)");
  s->add_option("--normal", args.normal, "coordinate of the normal rule g(N, d/dp_t) = 1");
  s = add("hyperplane-test", "is {F = 0} a hyperplane section", cmd_hyperplane_test);
  with_n(s);
  with_expr(s);
  s = add("bgg-kernel", "polynomial kernel of the first BGG operator", cmd_bgg_kernel);
  with_n(s);
  s->add_option("--r", args.r, "order parameter")->check(CLI::PositiveNumber);
  s->add_option("--cap", args.cap, "maximum number of monomial columns");
  s->add_flag("--serial", args.serial, "dense serial reference solver");
  s = add("bgg-apply", "apply the first BGG operator", cmd_bgg_apply);
  with_n(s);
  with_expr(s);
  s->add_option("--r", args.r, "order parameter")->check(CLI::PositiveNumber);
  s = add("pluecker", "minors chart of a symmetric matrix", cmd_pluecker);
  with_n(s);
  s->add_option("--point", args.point, "p11=a/b,...")->required();
  s = add("rank-one-line", "minors along P + t xi xi^T", cmd_rank_one_line);
  with_n(s);
  s->add_option("--point", args.point, "p11=a/b,...")->required();
  s->add_option("--xi", args.xi, "covector, comma separated")->required();
  add("sp6-check", "conformal symmetries of T_3", cmd_sp6_check);
  s = add("phi", "obstruction to being a hyperplane section", cmd_phi);
  with_n(s);
  with_expr(s);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  for (auto& [sub, handler] : commands) {
    if (!sub->parsed()) continue;
    const std::string name = sub->get_name();
    Json out;
    out["schema"] = "mage/1";
    out["command"] = name;
    int code = 0;
    auto start = std::chrono::steady_clock::now();
    try {
      Json result = handler(args);
      out["status"] = "ok";
      out["result"] = std::move(result);
    } catch (const UsageError& e) {
      out["status"] = "error";
      out["error"] = e.what();
      code = kExitUsage;
    } catch (const Error& e) {
      out["status"] = "error";
      out["error"] = e.what();
      code = kExitDomain;
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    out["timing_ms"] = ms;
    if (args.json) {
      std::cout << out.dump(2) << "\n";
    } else if (code == 0) {
      print_human(out["result"]);
    }
    if (code != 0) std::cerr << "mage " << name << ": " << out["error"].get<std::string>() << "\n";
    return code;
  }
  return kExitUsage;
}
