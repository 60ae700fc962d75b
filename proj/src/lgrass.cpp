#include "mage/lgrass.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "mage/detail/bareiss.hpp"
#include "mage/errors.hpp"
#include "mage/variables.hpp"

namespace mage {

namespace {

void check_n(int n) {
  if (n < 1 || n > kMaxDimension) throw Error("n must be between 1 and 9");
}

void subsets(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i <= n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

struct PolyOps {
  static bool is_zero(const MultiPoly& x) { return x.is_zero(); }
  static MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b) {
    auto q = divide_exact(a, b);
    if (!q) throw Error("internal: inexact fraction-free step");
    return std::move(*q);
  }
};

template <class T, class Fn>
const T& cached(int n, Fn&& build) {
  static std::mutex mu;
  static std::map<int, T> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build()).first;
  return it->second;
}

}  // namespace

const std::vector<MinorIndex>& chart_indices(int n) {
  check_n(n);
  return cached<std::vector<MinorIndex>>(n, [n] {
    std::vector<MinorIndex> out;
    for (int k = 0; k <= n; ++k) {
      std::vector<std::vector<int>> subs;
      std::vector<int> cur;
      subsets(n, k, 1, cur, subs);
      for (std::size_t a = 0; a < subs.size(); ++a)
        for (std::size_t b = a; b < subs.size(); ++b) out.push_back({subs[a], subs[b]});
    }
    return out;
  });
}

std::size_t chart_index_of(int n, const MinorIndex& idx) {
  MinorIndex key = idx;
  if (key.cols < key.rows) std::swap(key.rows, key.cols);
  const auto& all = chart_indices(n);
  for (std::size_t i = 0; i < all.size(); ++i)
    if (all[i] == key) return i;
  throw Error("not a chart coordinate");
}

QMatrix symmetric_from_point(int n, const std::map<std::string, Rational>& values) {
  QMatrix p(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      auto it = values.find(second_jet_name(i, j));
      Rational v = it == values.end() ? Rational(0) : it->second;
      p(i - 1, j - 1) = v;
      p(j - 1, i - 1) = v;
    }
  return p;
}

bool is_symmetric(const QMatrix& p) { return p.rows() == p.cols() && p == p.transpose(); }

PlueckerVector minors_chart(const QMatrix& p) {
  if (!is_symmetric(p)) throw Error("minors_chart needs a symmetric matrix");
  const int n = static_cast<int>(p.rows());
  PlueckerVector w;
  w.n = n;
  for (const auto& idx : chart_indices(n)) {
    QMatrix sub(idx.rows.size(), idx.cols.size());
    for (std::size_t a = 0; a < idx.rows.size(); ++a)
      for (std::size_t b = 0; b < idx.cols.size(); ++b) sub(a, b) = p(idx.rows[a] - 1, idx.cols[b] - 1);
    w.coords.push_back(determinant(sub));
  }
  return w;
}

MultiPoly poly_determinant(std::vector<std::vector<MultiPoly>> m) {
  const std::size_t k = m.size();
  if (k == 0) return MultiPoly(Rational(1));
  auto shape = detail::bareiss_echelon<MultiPoly, PolyOps>(m, k);
  if (shape.pivots.size() < k) return MultiPoly();
  MultiPoly d = m[k - 1][k - 1];
  if (shape.swap_sign < 0) d = -d;
  return d;
}

const std::vector<MultiPoly>& symbolic_minors(int n) {
  return cached<std::vector<MultiPoly>>(n, [n] {
    std::vector<MultiPoly> out;
    for (const auto& idx : chart_indices(n)) {
      std::vector<std::vector<MultiPoly>> sub(idx.rows.size());
      for (std::size_t a = 0; a < idx.rows.size(); ++a)
        for (std::size_t b = 0; b < idx.cols.size(); ++b)
          sub[a].push_back(MultiPoly::variable(second_jet_name(idx.rows[a], idx.cols[b])));
      out.push_back(poly_determinant(std::move(sub)));
    }
    return out;
  });
}

RankOneLine rank_one_line(const QMatrix& p, const QVector& xi) {
  if (!is_symmetric(p)) throw Error("rank_one_line needs a symmetric matrix");
  const int n = static_cast<int>(p.rows());
  if (xi.size() != p.rows()) throw Error("covector length does not match n");
  RankOneLine line;
  line.n = n;
  line.degenerate = std::all_of(xi.begin(), xi.end(), [](const Rational& x) { return x == 0; });
  MultiPoly t = MultiPoly::variable("t");
  line.affine = true;
  for (const auto& idx : chart_indices(n)) {
    std::vector<std::vector<MultiPoly>> sub(idx.rows.size());
    for (std::size_t a = 0; a < idx.rows.size(); ++a)
      for (std::size_t b = 0; b < idx.cols.size(); ++b) {
        int i = idx.rows[a] - 1, j = idx.cols[b] - 1;
        MultiPoly entry = t;
        entry *= Rational(xi[static_cast<std::size_t>(i)] * xi[static_cast<std::size_t>(j)]);
        sub[a].push_back(entry + MultiPoly(p(static_cast<std::size_t>(i), static_cast<std::size_t>(j))));
      }
    MultiPoly m = poly_determinant(std::move(sub));
    QVector coeffs(m.degree_in("t") + 1);
    for (const auto& [k, c] : m.coefficients_in("t")) coeffs[k] = c.constant_term();
    if (coeffs.size() > 2) line.affine = false;
    line.coefficients.push_back(std::move(coeffs));
  }
  return line;
}

const std::vector<QVector>& chart_relations(int n) {
  return cached<std::vector<QVector>>(n, [n] {
    const auto& minors = symbolic_minors(n);
    // Rows: monomials appearing in any minor; columns: chart coordinates.
    std::map<Exponents, std::size_t, GrlexGreater> row_of;
    std::vector<MultiPoly> aligned;
    auto reg = std::make_shared<const VarNames>(second_jet_names(n));
    for (const auto& m : minors) aligned.push_back(m.embed(reg));
    for (const auto& m : aligned)
      for (const auto& [e, c] : m.terms()) row_of.emplace(e, 0);
    std::size_t r = 0;
    for (auto& [e, idx] : row_of) idx = r++;
    QMatrix a(row_of.size(), aligned.size());
    for (std::size_t col = 0; col < aligned.size(); ++col)
      for (const auto& [e, c] : aligned[col].terms()) a(row_of.at(e), col) = c;
    return nullspace(a);
  });
}

std::size_t independent_coordinates(int n) { return chart_indices(n).size() - chart_relations(n).size(); }

QVector canonical_hyperplane(int n, const QVector& c) {
  if (c.size() != chart_indices(n).size()) throw Error("hyperplane coefficient count does not match the chart");
  QVector out = c;
  for (const auto& rel : chart_relations(n)) {
    std::size_t piv = 0;
    while (rel[piv] == 0) ++piv;
    if (out[piv] == 0) continue;
    Rational f = out[piv];
    for (std::size_t j = 0; j < out.size(); ++j)
      if (rel[j] != 0) out[j] -= f * rel[j];
  }
  return out;
}

MultiPoly hyperplane_section(int n, const QVector& c) {
  QVector canon = canonical_hyperplane(n, c);
  if (std::all_of(canon.begin(), canon.end(), [](const Rational& x) { return x == 0; }))
    throw DomainError("hyperplane coefficients vanish modulo the chart relations");
  const auto& minors = symbolic_minors(n);
  MultiPoly f;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    MultiPoly term = minors[i];
    term *= c[i];
    f += term;
  }
  return f;
}

MultiPoly hyperplane_section(int n, const std::vector<MultiPoly>& c) {
  const auto& minors = symbolic_minors(n);
  if (c.size() != minors.size()) throw Error("hyperplane coefficient count does not match the chart");
  MultiPoly f;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!c[i].is_zero()) f += c[i] * minors[i];
  return f;
}

std::size_t tangent_rank(const QMatrix& v) {
  if (!is_symmetric(v)) throw Error("tangent vectors are symmetric matrices");
  return rank(v);
}

QMatrix rational_inverse(const PlueckerVector& w) {
  const int n = w.n;
  if (w.coords.size() != chart_indices(n).size()) throw Error("Pluecker vector has the wrong length");
  const Rational& lambda = w.coords[0];
  if (lambda == 0) throw DomainError("outside the big cell: the constant coordinate vanishes");
  QMatrix p(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      Rational v = w.coords[chart_index_of(n, {{i}, {j}})] / lambda;
      p(i - 1, j - 1) = v;
      p(j - 1, i - 1) = v;
    }
  return p;
}

}  // namespace mage
