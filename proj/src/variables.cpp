#include "mage/variables.hpp"

#include <algorithm>
#include <cctype>

#include "mage/errors.hpp"

namespace mage {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

int checked_index(std::string_view ident, std::string_view digits, int n) {
  if (digits.size() > 1) throw Error("malformed jet variable '" + std::string(ident) + "'");
  int k = digits[0] - '0';
  if (k < 1 || k > n)
    throw Error("index out of range in '" + std::string(ident) + "' for n = " + std::to_string(n));
  return k;
}

}  // namespace

VariableKind classify_variable(std::string_view ident, int n) {
  if (n < 1 || n > kMaxDimension) throw Error("dimension must be between 1 and 9");
  VariableKind v;
  v.name = std::string(ident);
  if (ident == "u") {
    v.kind = VarClass::unknown_u;
  } else if (ident.size() > 2 && ident.substr(0, 2) == "xi" && all_digits(ident.substr(2))) {
    v.kind = VarClass::covector;
    v.i = checked_index(ident, ident.substr(2), n);
  } else if (ident.size() > 1 && ident[0] == 'x' && all_digits(ident.substr(1))) {
    v.kind = VarClass::base_x;
    v.i = checked_index(ident, ident.substr(1), n);
  } else if (ident.size() > 1 && ident[0] == 'p' && all_digits(ident.substr(1))) {
    auto d = ident.substr(1);
    if (d.size() == 1) {
      v.kind = VarClass::first_jet;
      v.i = checked_index(ident, d, n);
    } else if (d.size() == 2) {
      int a = checked_index(ident, d.substr(0, 1), n), b = checked_index(ident, d.substr(1, 1), n);
      v.kind = VarClass::second_jet;
      v.i = std::min(a, b);
      v.j = std::max(a, b);
      v.name = second_jet_name(v.i, v.j);
    } else {
      throw Error("malformed jet variable '" + std::string(ident) + "'");
    }
  }
  return v;
}

std::string second_jet_name(int i, int j) {
  if (i > j) std::swap(i, j);
  return "p" + std::to_string(i) + std::to_string(j);
}

std::string covector_name(int i) { return "xi" + std::to_string(i); }

std::vector<std::string> second_jet_names(int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) out.push_back(second_jet_name(i, j));
  return out;
}

std::vector<std::string> covector_names(int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back(covector_name(i));
  return out;
}

}  // namespace mage
