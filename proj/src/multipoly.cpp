#include "mage/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <tuple>

#include "mage/errors.hpp"

namespace mage {

namespace {

struct VarKey {
  int cls;
  long i;
  long j;
  std::string prefix;
  std::string name;
};

bool digits_only(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

VarKey key_of(std::string_view name) {
  VarKey k{5, 0, 0, {}, std::string(name)};
  if (name.size() == 3 && name[0] == 'p' && digits_only(name.substr(1))) {
    k.cls = 0;
    k.i = name[1] - '0';
    k.j = name[2] - '0';
  } else if (name.size() >= 3 && name.substr(0, 2) == "xi" && digits_only(name.substr(2))) {
    k.cls = 1;
    k.i = std::stol(std::string(name.substr(2)));
  } else if (name.size() >= 2 && name[0] == 'x' && digits_only(name.substr(1))) {
    k.cls = 2;
    k.i = std::stol(std::string(name.substr(1)));
  } else if (name == "u") {
    k.cls = 3;
  } else if (name.size() == 2 && name[0] == 'p' && digits_only(name.substr(1))) {
    k.cls = 4;
    k.i = name[1] - '0';
  } else {
    std::size_t split = name.size();
    while (split > 0 && std::isdigit(static_cast<unsigned char>(name[split - 1]))) --split;
    k.prefix = std::string(name.substr(0, split));
    // Long digit runs would overflow; they simply compare by the full name afterwards.
    if (split < name.size() && name.size() - split < 18) k.i = std::stol(std::string(name.substr(split)));
  }
  return k;
}

const std::shared_ptr<const VarNames>& empty_registry() {
  static const auto empty = std::make_shared<const VarNames>();
  return empty;
}

bool same_registry(const std::shared_ptr<const VarNames>& a, const std::shared_ptr<const VarNames>& b) {
  return a == b || *a == *b;
}

}  // namespace

bool variable_less(std::string_view a, std::string_view b) {
  if (a == b) return false;
  VarKey ka = key_of(a), kb = key_of(b);
  return std::tie(ka.cls, ka.prefix, ka.i, ka.j, ka.name) < std::tie(kb.cls, kb.prefix, kb.i, kb.j, kb.name);
}

VarNames merge_variables(const VarNames& a, const VarNames& b) {
  VarNames out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out),
                 [](const std::string& x, const std::string& y) { return variable_less(x, y); });
  return out;
}

std::uint32_t total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), std::uint32_t{0}); }

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  std::uint32_t da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

// ---------------------------------------------------------------------------

MultiPoly::MultiPoly() : vars_(empty_registry()) {}

MultiPoly::MultiPoly(const Rational& c) : vars_(empty_registry()) {
  if (c != 0) terms_.emplace(Exponents{}, c);
}

MultiPoly::MultiPoly(std::shared_ptr<const VarNames> vars, TermMap terms)
    : vars_(std::move(vars)), terms_(std::move(terms)) {}

MultiPoly MultiPoly::variable(const std::string& name) {
  if (name.empty()) throw Error("empty variable name");
  TermMap t;
  t.emplace(Exponents{1}, Rational(1));
  return MultiPoly(std::make_shared<const VarNames>(VarNames{name}), std::move(t));
}

MultiPoly MultiPoly::monomial(const VarNames& vars, Exponents exps, const Rational& coef) {
  return from_terms(vars, {{std::move(exps), coef}});
}

MultiPoly MultiPoly::from_terms(VarNames vars, const std::vector<std::pair<Exponents, Rational>>& terms) {
  if (!std::is_sorted(vars.begin(), vars.end(), [](const auto& a, const auto& b) { return variable_less(a, b); }) ||
      std::adjacent_find(vars.begin(), vars.end()) != vars.end())
    throw Error("variable registry must be sorted and duplicate-free");
  TermMap map;
  for (const auto& [e, c] : terms) {
    if (e.size() != vars.size()) throw Error("exponent vector length does not match the registry");
    if (c == 0) continue;
    auto [it, inserted] = map.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) map.erase(it);
    }
  }
  return MultiPoly(std::make_shared<const VarNames>(std::move(vars)), std::move(map));
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && mage::total_degree(terms_.begin()->first) == 0);
}

Rational MultiPoly::constant_term() const {
  if (terms_.empty()) return 0;
  const auto& last = *terms_.rbegin();
  return mage::total_degree(last.first) == 0 ? last.second : Rational(0);
}

std::uint32_t MultiPoly::total_degree() const {
  return terms_.empty() ? 0 : mage::total_degree(terms_.begin()->first);
}

std::optional<std::size_t> MultiPoly::index_of(std::string_view var) const {
  auto it = std::lower_bound(vars_->begin(), vars_->end(), var,
                             [](const std::string& a, std::string_view b) { return variable_less(a, b); });
  if (it != vars_->end() && *it == var) return static_cast<std::size_t>(it - vars_->begin());
  return std::nullopt;
}

std::uint32_t MultiPoly::degree_in(std::string_view var) const {
  auto idx = index_of(var);
  if (!idx) return 0;
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[*idx]);
  return d;
}

VarNames MultiPoly::used_variables() const {
  std::vector<bool> used(vars_->size(), false);
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) used[i] = true;
  VarNames out;
  for (std::size_t i = 0; i < used.size(); ++i)
    if (used[i]) out.push_back((*vars_)[i]);
  return out;
}

const Exponents& MultiPoly::leading_exponents() const {
  if (terms_.empty()) throw Error("leading term of the zero polynomial");
  return terms_.begin()->first;
}

const Rational& MultiPoly::leading_coefficient() const {
  if (terms_.empty()) throw Error("leading term of the zero polynomial");
  return terms_.begin()->second;
}

MultiPoly MultiPoly::compact() const {
  VarNames used = used_variables();
  if (used.size() == vars_->size()) return *this;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0, k = 0; i < vars_->size() && k < used.size(); ++i)
    if ((*vars_)[i] == used[k]) {
      keep.push_back(i);
      ++k;
    }
  TermMap out;
  for (const auto& [e, c] : terms_) {
    Exponents ne(keep.size());
    for (std::size_t k = 0; k < keep.size(); ++k) ne[k] = e[keep[k]];
    out.emplace_hint(out.end(), std::move(ne), c);
  }
  auto reg = used.empty() ? empty_registry() : std::make_shared<const VarNames>(std::move(used));
  return MultiPoly(std::move(reg), std::move(out));
}

MultiPoly MultiPoly::embed(const std::shared_ptr<const VarNames>& superset) const {
  if (same_registry(vars_, superset)) return MultiPoly(superset, terms_);
  std::vector<std::size_t> pos(vars_->size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < vars_->size(); ++i) {
    while (k < superset->size() && (*superset)[k] != (*vars_)[i]) ++k;
    if (k == superset->size()) throw Error("embed: variable '" + (*vars_)[i] + "' missing from target registry");
    pos[i] = k;
  }
  TermMap out;
  for (const auto& [e, c] : terms_) {
    Exponents ne(superset->size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
    // Order-preserving: embedding keeps the relative grlex order.
    out.emplace_hint(out.end(), std::move(ne), c);
  }
  return MultiPoly(superset, std::move(out));
}

std::pair<MultiPoly, MultiPoly> align(const MultiPoly& a, const MultiPoly& b) {
  if (same_registry(a.vars_, b.vars_)) return {a, MultiPoly(a.vars_, b.terms_)};
  if (a.vars_->empty() && a.is_constant()) return {a.embed(b.vars_), b};
  if (b.vars_->empty() && b.is_constant()) return {a, b.embed(a.vars_)};
  auto merged = std::make_shared<const VarNames>(merge_variables(*a.vars_, *b.vars_));
  return {a.embed(merged), b.embed(merged)};
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

void MultiPoly::add_scaled(const MultiPoly& o, const Rational& scale) {
  if (o.terms_.empty()) return;
  if (!same_registry(vars_, o.vars_)) {
    auto [x, y] = align(*this, o);
    *this = std::move(x);
    add_scaled(y, scale);
    return;
  }
  for (const auto& [e, c] : o.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c * scale);
    } else {
      it->second += c * scale;
      if (it->second == 0) terms_.erase(it);
    }
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  add_scaled(o, Rational(1));
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  add_scaled(o, Rational(-1));
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a0, const MultiPoly& b0) {
  if (a0.is_zero() || b0.is_zero()) return MultiPoly();
  auto [a, b] = align(a0, b0);
  MultiPoly::TermMap out;
  const std::size_t nv = a.vars_->size();
  Exponents e(nv);
  Rational prod;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < nv; ++i) e[i] = ea[i] + eb[i];
      prod = ca * cb;
      auto it = out.find(e);
      if (it == out.end()) {
        out.emplace(e, prod);
      } else {
        it->second += prod;
        if (it->second == 0) out.erase(it);
      }
    }
  }
  return MultiPoly(a.vars_, std::move(out));
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (MultiPoly::TermMap::size_type(a.term_count()) != b.term_count()) return false;
  if (same_registry(a.vars_, b.vars_)) return a.terms_ == b.terms_;
  MultiPoly ca = a.compact(), cb = b.compact();
  return *ca.vars_ == *cb.vars_ && ca.terms_ == cb.terms_;
}

MultiPoly pow(const MultiPoly& base, long exponent) {
  if (exponent < 0) throw DomainError("negative exponent on a polynomial: use RationalFunction");
  MultiPoly result(Rational(1));
  MultiPoly sq = base;
  unsigned long e = static_cast<unsigned long>(exponent);
  while (e) {
    if (e & 1u) result *= sq;
    e >>= 1u;
    if (e) sq = sq * sq;
  }
  return result;
}

MultiPoly MultiPoly::derivative(std::string_view var) const {
  if (var.empty()) throw Error("derivative with respect to an empty variable name");
  auto idx = index_of(var);
  if (!idx) return MultiPoly(vars_, {});
  TermMap out;
  for (const auto& [e, c] : terms_) {
    if (e[*idx] == 0) continue;
    Exponents ne = e;
    --ne[*idx];
    Rational nc = c * e[*idx];
    auto it = out.find(ne);
    if (it == out.end()) {
      out.emplace(std::move(ne), std::move(nc));
    } else {
      it->second += nc;
      if (it->second == 0) out.erase(it);
    }
  }
  return MultiPoly(vars_, std::move(out));
}

std::map<std::uint32_t, MultiPoly> MultiPoly::coefficients_in(std::string_view var) const {
  std::map<std::uint32_t, MultiPoly> out;
  auto idx = index_of(var);
  if (!idx) {
    if (!is_zero()) out.emplace(0, *this);
    return out;
  }
  std::map<std::uint32_t, TermMap> parts;
  for (const auto& [e, c] : terms_) {
    Exponents ne = e;
    ne[*idx] = 0;
    parts[e[*idx]].emplace(std::move(ne), c);
  }
  for (auto& [d, t] : parts) out.emplace(d, MultiPoly(vars_, std::move(t)));
  return out;
}

MultiPoly MultiPoly::evaluate(const std::map<std::string, Rational>& values) const {
  std::vector<std::optional<Rational>> bound(vars_->size());
  bool any = false;
  for (std::size_t i = 0; i < vars_->size(); ++i) {
    auto it = values.find((*vars_)[i]);
    if (it != values.end()) {
      bound[i] = it->second;
      any = true;
    }
  }
  if (!any) return *this;
  TermMap out;
  for (const auto& [e, c] : terms_) {
    Exponents ne = e;
    Rational nc = c;
    for (std::size_t i = 0; i < e.size() && nc != 0; ++i) {
      if (!bound[i] || e[i] == 0) continue;
      Rational p;
      mpz_pow_ui(p.get_num_mpz_t(), bound[i]->get_num_mpz_t(), e[i]);
      mpz_pow_ui(p.get_den_mpz_t(), bound[i]->get_den_mpz_t(), e[i]);
      nc *= p;
      ne[i] = 0;
    }
    if (nc == 0) continue;
    auto it = out.find(ne);
    if (it == out.end()) {
      out.emplace(std::move(ne), std::move(nc));
    } else {
      it->second += nc;
      if (it->second == 0) out.erase(it);
    }
  }
  return MultiPoly(vars_, std::move(out));
}

MultiPoly MultiPoly::compose(const std::map<std::string, MultiPoly>& bindings) const {
  std::vector<const MultiPoly*> sub(vars_->size(), nullptr);
  bool any = false;
  for (std::size_t i = 0; i < vars_->size(); ++i) {
    auto it = bindings.find((*vars_)[i]);
    if (it != bindings.end()) {
      sub[i] = &it->second;
      any = true;
    }
  }
  if (!any) return *this;
  // Powers of each substituted polynomial are cached per variable.
  std::vector<std::vector<MultiPoly>> powers(vars_->size());
  auto power = [&](std::size_t i, std::uint32_t k) -> const MultiPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.emplace_back(Rational(1));
    while (cache.size() <= k) cache.push_back(cache.back() * *sub[i]);
    return cache[k];
  };
  MultiPoly result;
  for (const auto& [e, c] : terms_) {
    Exponents kept = e;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (sub[i]) kept[i] = 0;
    MultiPoly term = MultiPoly(vars_, TermMap{{kept, c}});
    for (std::size_t i = 0; i < e.size(); ++i)
      if (sub[i] && e[i]) term = term * power(i, e[i]);
    result += term;
  }
  return result;
}

MultiPoly MultiPoly::monic() const {
  if (terms_.empty()) return *this;
  Rational lc = leading_coefficient();
  if (lc == 1) return *this;
  MultiPoly r = *this;
  r *= Rational(1 / lc);
  return r;
}

// ---------------------------------------------------------------------------
// Division and gcd

std::optional<MultiPoly> divide_exact(const MultiPoly& a0, const MultiPoly& b0) {
  if (b0.is_zero()) throw DomainError("division by the zero polynomial");
  if (a0.is_zero()) return MultiPoly();
  if (b0.is_constant()) {
    MultiPoly q = a0;
    q *= Rational(1 / b0.constant_term());
    return q;
  }
  auto [a, b] = align(a0, b0);
  const std::size_t nv = a.vars_->size();
  const Exponents& lb = b.leading_exponents();
  const Rational lcb = b.leading_coefficient();
  MultiPoly::TermMap quotient;
  MultiPoly::TermMap rem = a.terms_;
  Exponents shift(nv);
  while (!rem.empty()) {
    const auto& [lr, lcr] = *rem.begin();
    for (std::size_t i = 0; i < nv; ++i) {
      if (lr[i] < lb[i]) return std::nullopt;
      shift[i] = lr[i] - lb[i];
    }
    Rational t = lcr / lcb;
    quotient.emplace(shift, t);
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e(nv);
      for (std::size_t i = 0; i < nv; ++i) e[i] = eb[i] + shift[i];
      auto it = rem.find(e);
      if (it == rem.end()) {
        rem.emplace(std::move(e), -t * cb);
      } else {
        it->second -= t * cb;
        if (it->second == 0) rem.erase(it);
      }
    }
  }
  return MultiPoly(a.vars_, std::move(quotient));
}

namespace {

MultiPoly exact(const MultiPoly& a, const MultiPoly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw Error("internal: expected exact polynomial division");
  return std::move(*q);
}

// gcd when one side is a single term: the monomial part common to every term.
MultiPoly monomial_gcd(const MultiPoly& mono, const MultiPoly& other) {
  auto [m, o] = align(mono, other);
  Exponents e = m.leading_exponents();
  for (const auto& [eo, c] : o.terms())
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(e[i], eo[i]);
  return MultiPoly::monomial(m.vars(), e, Rational(1));
}

// Variable present in both, with the least combined degree.
std::optional<std::string> pick_main_variable(const MultiPoly& a, const MultiPoly& b) {
  std::optional<std::string> best;
  std::uint32_t best_deg = 0;
  for (const auto& v : a.used_variables()) {
    std::uint32_t db = b.degree_in(v);
    if (db == 0) continue;
    std::uint32_t d = std::max(a.degree_in(v), db);
    if (!best || d < best_deg) {
      best = v;
      best_deg = d;
    }
  }
  return best;
}

// Scales f to integer coefficients with gcd 1, which keeps pseudo-remainders from swelling.
MultiPoly integer_primitive(const MultiPoly& f) {
  if (f.is_zero()) return f;
  Integer num_gcd = 0, den_lcm = 1;
  for (const auto& [e, c] : f.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  MultiPoly out = f;
  out *= scale;
  return out;
}

MultiPoly primitive_part(const MultiPoly& f, std::string_view var) {
  return integer_primitive(exact(f, content_in(f, var)));
}

MultiPoly gcd_impl(const MultiPoly& a, const MultiPoly& b);

MultiPoly univariate_gcd(const MultiPoly& a, const MultiPoly& b, const std::string& x) {
  MultiPoly ca = content_in(a, x), cb = content_in(b, x);
  MultiPoly g = gcd_impl(ca, cb);
  MultiPoly r0 = exact(a, ca), r1 = exact(b, cb);
  if (r0.degree_in(x) < r1.degree_in(x)) std::swap(r0, r1);
  while (!r1.is_zero() && r1.degree_in(x) > 0) {
    MultiPoly r = pseudo_remainder(r0, r1, x);
    r0 = std::move(r1);
    r1 = r.is_zero() ? r : primitive_part(r, x);
  }
  MultiPoly pp = r1.is_zero() ? primitive_part(r0, x) : MultiPoly(Rational(1));
  return (g * pp).monic();
}

MultiPoly gcd_impl(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return MultiPoly(Rational(1));
  if (a.is_monomial()) return monomial_gcd(a, b);
  if (b.is_monomial()) return monomial_gcd(b, a);
  if (a == b) return a.monic();
  // Variables present on one side only: the gcd divides the content there.
  for (const auto& v : a.used_variables())
    if (!b.depends_on(v)) return gcd_impl(content_in(a, v), b);
  for (const auto& v : b.used_variables())
    if (!a.depends_on(v)) return gcd_impl(a, content_in(b, v));
  if (a.total_degree() >= b.total_degree()) {
    if (divide_exact(a, b)) return b.monic();
  } else if (divide_exact(b, a)) {
    return a.monic();
  }
  auto x = pick_main_variable(a, b);
  return univariate_gcd(a, b, *x);
}

}  // namespace

MultiPoly content_in(const MultiPoly& f, std::string_view var) {
  auto coeffs = f.coefficients_in(var);
  MultiPoly g;
  // Smallest coefficients first keeps the recursive gcds cheap.
  std::vector<const MultiPoly*> order;
  for (const auto& [d, c] : coeffs) order.push_back(&c);
  std::sort(order.begin(), order.end(),
            [](const MultiPoly* x, const MultiPoly* y) { return x->term_count() < y->term_count(); });
  for (const MultiPoly* c : order) {
    g = gcd_impl(g, *c);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, std::string_view var) {
  if (b.is_zero()) throw DomainError("pseudo-remainder by zero");
  std::uint32_t db = b.degree_in(var);
  auto bc = b.coefficients_in(var);
  MultiPoly lcb = bc.rbegin()->second;
  MultiPoly xv = MultiPoly::variable(std::string(var));
  MultiPoly r = a;
  while (!r.is_zero()) {
    std::uint32_t dr = r.degree_in(var);
    if (dr < db) break;
    MultiPoly lcr = r.coefficients_in(var).rbegin()->second;
    r = lcb * r - lcr * pow(xv, dr - db) * b;
  }
  return r;
}

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() && b.is_zero()) return MultiPoly();
  return gcd_impl(a.compact(), b.compact());
}

// ---------------------------------------------------------------------------

std::string to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    Rational mag = abs(c);
    bool neg = c < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool constant = total_degree(e) == 0;
    bool wrote = false;
    if (constant || mag != 1) {
      os << to_string(mag);
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (wrote) os << "*";
      os << p.vars()[i];
      if (e[i] > 1) os << "^" << e[i];
      wrote = true;
    }
  }
  return os.str();
}

}  // namespace mage
