#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace mage {

enum class VarClass { base_x, unknown_u, first_jet, second_jet, covector, parameter };

/// Role of an identifier in the jet chart. Second-jet indices satisfy i <= j.
struct VariableKind {
  VarClass kind = VarClass::parameter;
  int i = 0;
  int j = 0;
  std::string name;  // canonical spelling (p21 becomes p12)

  friend bool operator==(const VariableKind&, const VariableKind&) = default;
};

/// Resolves an identifier for dimension n. Throws Error on out-of-range or malformed
/// jet indices.
VariableKind classify_variable(std::string_view ident, int n);

constexpr int kMaxDimension = 9;

std::string second_jet_name(int i, int j);
std::string covector_name(int i);
/// p11, p12, ..., pnn in registry order.
std::vector<std::string> second_jet_names(int n);
std::vector<std::string> covector_names(int n);

}  // namespace mage
