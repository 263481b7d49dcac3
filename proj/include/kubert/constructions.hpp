#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "kubert/isogeny.hpp"
#include "kubert/multipoly.hpp"

namespace kubert {

/// Parameters that make the curve singular: reported, not rejected.
class DegenerateInput : public DomainError {
 public:
  using DomainError::DomainError;
};

using ParamMap = std::map<std::string, Rational>;

/// l in {3,4,5,6}; params by name: l=3 (a1, u1, z); l=4 (u, v);
/// l=5 row 1-2 (z), row 3 (t, m); l=6 (v0, z).
struct ConstructionInput {
  int l = 5;
  int row = 0;
  ParamMap params;
  bool as_printed = false;
};

/// A point (x, y_b) on a tabulated quotient model y_b^2 = f(x).
struct ConstructedPoint {
  int l = 0;
  ParamMap curve_params;  // {"c"} or {"a1", "a3"}
  Rational x, y_b;
  QPoly model;  // the tabulated f
  std::optional<std::string> note;
};

/// l=5 tabulated quotient 4x^3 + (c^2-30c+1)x^2 - 2c(3c+1)(4c-7)x - c(4c^4-4c^3-40c^2+91c-4).
QPoly tabulated_model_l5(const Rational& c);
/// 4x^3 + a1^2 x^2 - 18 a1 a3 x - a3(4a1^3 + 27a3)
QPoly tabulated_model_l3(const Rational& a1, const Rational& a3);
/// (x + c)(4x^2 + x + c)
QPoly tabulated_model_l4(const Rational& c);
/// (4x - (19c^2+14c-1))(x^2 + 2c(2c+1)x + c(4c^3+4c^2+c+4))
QPoly tabulated_model_l6(const Rational& c);

/// Row 1 uses c = -(z^2+3)/4, the value forced by A_5(c) = z^2 at u0 = -1;
/// `as_printed` substitutes the misprinted (z^2-3)/4 instead.
ConstructedPoint construct_l5(int row, const ParamMap& params, bool as_printed = false);
ConstructedPoint construct_l3(const Rational& a1, const Rational& u1, const Rational& z);
ConstructedPoint construct_l4(const Rational& u, const Rational& v);
ConstructedPoint construct_l6(const Rational& v0, const Rational& z);
ConstructedPoint construct(const ConstructionInput& in);

/// Both sides of f(x_l) = A_l G_l^2 as exact multivariate polynomials
/// (for l=3 multiplied through by u1^6 to clear denominators).
std::pair<MultiPoly, MultiPoly> defining_identity(int l);
bool verify_defining_identity(int l);

struct NontrivialPointCertificate {
  ConstructionInput input;
  int l = 0;
  ParamMap curve_params;
  WeierstrassCurve<Rational> curve_F;
  CurvePoint<Rational> point;
  Rational x, y_b;
  bool model_matches = false;
  bool on_curve = false;
  bool infinite_order = false;
  bool nontrivial = false;
  std::optional<int> torsion_order;
  std::optional<CurvePoint<Rational>> preimage;  // witness when the point is trivial
  QPoly fiber;
  std::optional<std::string> excluded_reason;

  bool valid() const { return on_curve && infinite_order && nontrivial && !excluded_reason; }
};

/// Runs the construction, builds the quotient by Vélu, checks the tabulated
/// model against it, and certifies the point. Precondition violations throw;
/// singular curves and torsion outputs come back with `excluded_reason`.
NontrivialPointCertificate certify(const ConstructionInput& in);

}  // namespace kubert
