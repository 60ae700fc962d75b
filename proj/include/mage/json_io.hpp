#pragma once

#include <string>

#include <json.hpp>

#include "mage/bgg.hpp"
#include "mage/conformal.hpp"
#include "mage/lgrass.hpp"
#include "mage/quadratic_surd.hpp"
#include "mage/symbols.hpp"

namespace mage {

using Json = nlohmann::ordered_json;

/// Exact values are strings ("3", "-1/2", "(p12^2 - 1)/p11", "2*xi1^4"), except polynomials:
/// {"vars": [...], "terms": [{"exps": [...], "coef": "a/b"}], "text": "..."}.
Json to_json(const Rational& x);
Json to_json(const MultiPoly& p);
/// Throws ParseError on malformed input; "text" is ignored.
MultiPoly multipoly_from_json(const Json& j);
Json to_json(const RationalFunction& f);
Json to_json(const QuadraticSurd& x);
Json to_json(const CharacteristicRoot& root, bool approx);
Json to_json(const RFMatrix& m);
Json to_json(const QMatrix& m);
template <class Coeff>
Json to_json(const XiForm<Coeff>& f) {
  return to_string(f);
}

Json to_json(const ClassificationResult& c, bool approx);
Json to_json(const ExceptionalityReport& r);
Json to_json(const PlueckerVector& w);
Json to_json(const RankOneLine& line);
Json to_json(const KernelBasis& k);
Json to_json(const FundamentalForms& f);
Json to_json(const PhiReport& p);
Json to_json(const ConformalCheck& c);

/// Inverse of to_json for kernel bases.
KernelBasis kernel_basis_from_json(const Json& j);

/// "p11=1/2,p12=0,..." -> point. Throws ParseError.
Point parse_point(const std::string& text);
/// "1,-2,3/4" -> vector of rationals. Throws ParseError.
QVector parse_rational_list(const std::string& text);

}  // namespace mage
