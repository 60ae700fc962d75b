#include "mage/bgg.hpp"

#include <algorithm>
#include <map>
#include <memory>

#include "mage/errors.hpp"
#include "mage/lgrass.hpp"
#include "mage/qmatrix.hpp"
#include "mage/variables.hpp"

namespace mage {

XiPolynomial bgg_apply(const MultiPoly& f, int n, int r) {
  if (r < 1) throw Error("bgg_apply needs r >= 1");
  XiPolynomial s = XiPolynomial::constant(n, f);
  for (int i = 0; i <= r; ++i) s = s.rank_one_derivative();
  return s;
}

namespace {

Rational binomial(std::uint32_t n, std::uint32_t k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

std::size_t count_monomials(std::size_t vars, std::size_t degree) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), vars + degree, degree);
  return b.fits_ulong_p() ? b.get_ui() : static_cast<std::size_t>(-1);
}

// All exponent vectors in `vars` variables with total degree <= d, greatest first.
std::vector<Exponents> monomials_up_to(std::size_t vars, std::uint32_t d) {
  std::vector<Exponents> out;
  Exponents e(vars, 0);
  auto rec = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
    if (i == vars) {
      out.push_back(e);
      return;
    }
    for (std::uint32_t k = 0; k <= left; ++k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
    e[i] = 0;
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), GrlexGreater{});
  return out;
}

struct Problem {
  int n = 0;
  std::uint32_t order = 0;  // r + 1
  std::shared_ptr<const VarNames> vars;
  std::vector<std::pair<int, int>> slots;  // (i, j) of each chart variable, 0-based
  std::vector<Exponents> columns;
};

Problem make_problem(int n, int r, const KernelOptions& opts) {
  if (n < 2 || n > kMaxDimension) throw Error("kernel_basis needs 2 <= n <= 9");
  if (r < 1) throw Error("kernel_basis needs r >= 1");
  std::size_t need = kernel_columns(n, r);
  if (need > opts.cap)
    throw DomainError("kernel problem needs " + std::to_string(need) + " columns, above the cap of " +
                      std::to_string(opts.cap));
  Problem p;
  p.n = n;
  p.order = static_cast<std::uint32_t>(r + 1);
  p.vars = std::make_shared<const VarNames>(second_jet_names(n));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) p.slots.emplace_back(i, j);
  p.columns = monomials_up_to(p.vars->size(), static_cast<std::uint32_t>(n * r));
  return p;
}

// Image of the monomial p^e: (order)! sum_{|j| = order} prod C(e_a, j_a) p^(e - j) nu^j with
// nu_ij = xi_i xi_j. Keys are the p-exponents followed by the xi-exponents.
std::map<Exponents, Rational> column_image(const Problem& p, const Exponents& e) {
  std::map<Exponents, Rational> out;
  const std::size_t d = e.size();
  if (total_degree(e) < p.order) return out;
  Rational fact = 1;
  for (std::uint32_t k = 2; k <= p.order; ++k) fact *= k;
  Exponents j(d, 0);
  auto rec = [&](auto&& self, std::size_t a, std::uint32_t left) -> void {
    if (a == d) {
      if (left) return;
      Exponents key(d + static_cast<std::size_t>(p.n), 0);
      Rational c = fact;
      for (std::size_t b = 0; b < d; ++b) {
        key[b] = e[b] - j[b];
        if (j[b]) {
          c *= binomial(e[b], j[b]);
          key[d + static_cast<std::size_t>(p.slots[b].first)] += j[b];
          key[d + static_cast<std::size_t>(p.slots[b].second)] += j[b];
        }
      }
      out[key] += c;
      return;
    }
    for (std::uint32_t k = 0; k <= std::min(left, e[a]); ++k) {
      j[a] = k;
      self(self, a + 1, left - k);
    }
    j[a] = 0;
  };
  rec(rec, 0, p.order);
  return out;
}

// Torus weight of a monomial together with its degree.
std::vector<std::uint32_t> block_key(const Problem& p, const Exponents& e) {
  std::vector<std::uint32_t> key(static_cast<std::size_t>(p.n) + 1, 0);
  key[0] = total_degree(e);
  for (std::size_t a = 0; a < e.size(); ++a) {
    key[1 + static_cast<std::size_t>(p.slots[a].first)] += e[a];
    key[1 + static_cast<std::size_t>(p.slots[a].second)] += e[a];
  }
  return key;
}

// Kernel vectors of the operator restricted to the given columns, as polynomials.
std::vector<MultiPoly> solve_block(const Problem& p, const std::vector<std::size_t>& cols, bool parallel) {
  std::map<Exponents, std::size_t> row_of;
  std::vector<std::map<Exponents, Rational>> images;
  images.reserve(cols.size());
  for (auto c : cols) {
    images.push_back(column_image(p, p.columns[c]));
    for (const auto& kv : images.back()) row_of.emplace(kv.first, 0);
  }
  std::size_t next = 0;
  for (auto& kv : row_of) kv.second = next++;
  QMatrix m(row_of.size(), cols.size());
  for (std::size_t k = 0; k < cols.size(); ++k)
    for (const auto& [key, c] : images[k]) m(row_of.at(key), k) = c;
  std::vector<QVector> ker;
  if (row_of.empty()) {
    for (std::size_t k = 0; k < cols.size(); ++k) {
      QVector v(cols.size());
      v[k] = 1;
      ker.push_back(std::move(v));
    }
  } else {
    ker = parallel ? nullspace_parallel(m) : nullspace(m);
  }
  std::vector<MultiPoly> out;
  for (const auto& v : ker) {
    std::vector<std::pair<Exponents, Rational>> terms;
    for (std::size_t k = 0; k < cols.size(); ++k)
      if (v[k] != 0) terms.emplace_back(p.columns[cols[k]], v[k]);
    out.push_back(MultiPoly::from_terms(*p.vars, terms));
  }
  return out;
}

KernelBasis finish(const Problem& p, int r, std::vector<MultiPoly> basis, std::size_t blocks) {
  std::sort(basis.begin(), basis.end(), [](const MultiPoly& a, const MultiPoly& b) {
    return GrlexGreater{}(a.leading_exponents(), b.leading_exponents());
  });
  KernelBasis k;
  k.n = p.n;
  k.r = r;
  k.degree_bound = static_cast<std::uint32_t>(p.n * r);
  k.dimension = basis.size();
  k.columns = p.columns.size();
  k.blocks = blocks;
  for (const auto& f : basis) k.max_degree = std::max(k.max_degree, f.total_degree());
  for (auto& f : basis) f = f.compact();
  k.basis = std::move(basis);
  return k;
}

}  // namespace

std::size_t kernel_columns(int n, int r) {
  return count_monomials(static_cast<std::size_t>(n * (n + 1) / 2), static_cast<std::size_t>(n * r));
}

KernelBasis kernel_basis(int n, int r, const KernelOptions& opts) {
  Problem p = make_problem(n, r, opts);
  std::map<std::vector<std::uint32_t>, std::vector<std::size_t>> grouped;
  for (std::size_t c = 0; c < p.columns.size(); ++c) grouped[block_key(p, p.columns[c])].push_back(c);
  std::vector<std::vector<std::size_t>> blocks;
  for (auto& kv : grouped) blocks.push_back(std::move(kv.second));
  // Largest blocks first so the dynamic schedule balances.
  std::vector<std::size_t> order(blocks.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return blocks[a].size() > blocks[b].size(); });
  std::vector<std::vector<MultiPoly>> found(blocks.size());
  const long nb = static_cast<long>(blocks.size());
#pragma omp parallel for schedule(dynamic) if (opts.parallel)
  for (long i = 0; i < nb; ++i) {
    std::size_t b = order[static_cast<std::size_t>(i)];
    found[b] = solve_block(p, blocks[b], false);
  }
  std::vector<MultiPoly> basis;
  for (auto& f : found)
    for (auto& g : f) basis.push_back(std::move(g));
  return finish(p, r, std::move(basis), blocks.size());
}

KernelBasis kernel_basis_dense(int n, int r, const KernelOptions& opts) {
  Problem p = make_problem(n, r, opts);
  std::vector<std::size_t> all(p.columns.size());
  for (std::size_t c = 0; c < all.size(); ++c) all[c] = c;
  return finish(p, r, solve_block(p, all, opts.parallel), 1);
}

bool in_kernel_span(const MultiPoly& f, const KernelBasis& k) {
  auto reg = std::make_shared<const VarNames>(second_jet_names(k.n));
  for (const auto& v : f.used_variables())
    if (std::find(reg->begin(), reg->end(), v) == reg->end()) return false;
  if (f.total_degree() > k.degree_bound) return false;
  MultiPoly rest = f.compact().embed(reg);
  for (const auto& b : k.basis) {
    if (rest.is_zero()) break;
    MultiPoly be = b.embed(reg);
    auto it = rest.terms().find(be.leading_exponents());
    if (it == rest.terms().end()) continue;
    be *= Rational(it->second / be.leading_coefficient());
    rest -= be;
  }
  return rest.is_zero();
}

std::vector<std::string> minor_coordinate_names(int n) {
  std::vector<std::string> out;
  for (std::size_t c = 0; c < chart_indices(n).size(); ++c) out.push_back("w" + std::to_string(c));
  return out;
}

SectionFunction section_function(const MultiPoly& form_in_w, int n, int r) {
  auto names = minor_coordinate_names(n);
  const auto& minors = symbolic_minors(n);
  std::map<std::string, MultiPoly> bind;
  for (std::size_t c = 0; c < names.size(); ++c) bind.emplace(names[c], minors[c]);
  for (const auto& v : form_in_w.used_variables())
    if (!bind.count(v)) throw Error("section_function: '" + v + "' is not a minors coordinate for n = " + std::to_string(n));
  SectionFunction s;
  s.f = form_in_w.compose(bind).compact();
  s.in_kernel = s.f.total_degree() <= static_cast<std::uint32_t>(n * r) && bgg_apply(s.f, n, r).is_zero();
  return s;
}

}  // namespace mage
