#include "mage/rational.hpp"

#include <cctype>

#include "mage/errors.hpp"

namespace mage {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw ParseError("malformed rational '" + std::string(text) + "'", 0);
    Integer d(std::string(den), 10);
    if (d == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
    value = Rational(Integer(std::string(num), 10), d);
    value.canonicalize();
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot), frac = s.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac)))
      throw ParseError("malformed decimal '" + std::string(text) + "'", 0);
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Integer digits(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
    value = Rational(digits, scale);
    value.canonicalize();
  } else {
    if (!all_digits(s)) throw ParseError("malformed rational '" + std::string(text) + "'", 0);
    value = Rational(Integer(std::string(s), 10));
  }
  return negative ? Rational(-value) : value;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  const Integer& n = q.get_num();
  const Integer& d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  Integer rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return Rational(rn, rd);
}

}  // namespace mage
