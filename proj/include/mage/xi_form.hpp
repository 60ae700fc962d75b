#pragma once

#include <map>
#include <string>
#include <vector>

#include "mage/multipoly.hpp"
#include "mage/rational_function.hpp"
#include "mage/variables.hpp"

namespace mage {

/// Polynomial in the covector variables xi1..xin whose coefficients live in `Coeff`
/// (MultiPoly or RationalFunction in the chart variables). Keys are xi-exponent vectors of
/// length n, ordered greatest first; zero coefficients are never stored.
template <class Coeff>
class XiForm {
 public:
  using TermMap = std::map<Exponents, Coeff, GrlexGreater>;

  XiForm() = default;
  explicit XiForm(int n) : n_(n) {}
  /// Degree-0 form.
  static XiForm constant(int n, const Coeff& c) {
    XiForm f(n);
    f.add(Exponents(static_cast<std::size_t>(n), 0), c);
    return f;
  }

  int n() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Highest xi-degree present (0 for the zero form).
  std::uint32_t degree() const { return terms_.empty() ? 0 : total_degree(terms_.begin()->first); }
  bool is_homogeneous(std::uint32_t d) const {
    for (const auto& [e, c] : terms_)
      if (total_degree(e) != d) return false;
    return true;
  }

  Coeff coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coeff() : it->second;
  }

  void add(const Exponents& e, const Coeff& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  XiForm& operator+=(const XiForm& o) {
    if (n_ == 0) n_ = o.n_;
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
  }
  XiForm& operator-=(const XiForm& o) {
    if (n_ == 0) n_ = o.n_;
    for (const auto& [e, c] : o.terms_) add(e, -c);
    return *this;
  }
  friend XiForm operator+(XiForm a, const XiForm& b) { return a += b; }
  friend XiForm operator-(XiForm a, const XiForm& b) { return a -= b; }
  friend XiForm operator*(const XiForm& a, const XiForm& b) {
    XiForm out(a.n_ ? a.n_ : b.n_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(ea.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        out.add(e, ca * cb);
      }
    return out;
  }
  XiForm scaled(const Coeff& s) const {
    XiForm out(n_);
    if (s.is_zero()) return out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * s);
    return out;
  }
  friend bool operator==(const XiForm& a, const XiForm& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const XiForm& a, const XiForm& b) { return !(a == b); }

  /// Applies f to every coefficient, dropping zeros.
  template <class Fn>
  XiForm map(Fn&& f) const {
    XiForm out(n_);
    for (const auto& [e, c] : terms_) out.add(e, f(c));
    return out;
  }

  /// Directional derivative along the rank-one direction p_ij -> xi_i xi_j (i <= j):
  /// D(sum c_a xi^a) = sum_a sum_{i<=j} (dc_a/dp_ij) xi^a xi_i xi_j.
  XiForm rank_one_derivative() const {
    XiForm out(n_);
    for (int i = 1; i <= n_; ++i)
      for (int j = i; j <= n_; ++j) {
        const std::string var = second_jet_name(i, j);
        for (const auto& [e, c] : terms_) {
          Coeff d = c.derivative(var);
          if (d.is_zero()) continue;
          Exponents ne = e;
          ++ne[static_cast<std::size_t>(i - 1)];
          ++ne[static_cast<std::size_t>(j - 1)];
          out.add(ne, d);
        }
      }
    return out;
  }

 private:
  int n_ = 0;
  TermMap terms_;
};

/// All xi-exponent vectors of total degree d in n variables, greatest first.
std::vector<Exponents> xi_monomials(int n, std::uint32_t d);

/// Human-readable form, e.g. "p22*xi1^2 - 2*p12*xi1*xi2 + p11*xi2^2".
template <class Coeff>
std::string to_string(const XiForm<Coeff>& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += covector_name(static_cast<int>(i + 1));
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    std::string cs = to_string(c);
    bool negative = !cs.empty() && cs[0] == '-' && cs.find_first_of("+-", 1) == std::string::npos;
    if (negative) cs = cs.substr(1);
    bool compound = cs.find(' ') != std::string::npos;
    if (compound && !mono.empty()) cs = "(" + cs + ")";
    std::string term = mono.empty() ? cs : (cs == "1" ? mono : cs + "*" + mono);
    if (first) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? " - " + term : " + " + term;
    }
    first = false;
  }
  return out;
}

using SymbolForm = XiForm<RationalFunction>;
using XiPolynomial = XiForm<MultiPoly>;

}  // namespace mage
