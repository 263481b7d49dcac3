#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "kubert/galois.hpp"

namespace kubert {

using json = nlohmann::json;

/// ["num", "den"], both decimal integer strings.
json rational_to_json(const Rational& q);
Rational rational_from_json(const json& j);

/// {"var": name, "coeffs": [[num, den], ...]} lowest degree first.
json poly_to_json(const QPoly& f, const std::string& var = "x");
QPoly poly_from_json(const json& j);

/// Canonical ASCII form "(num/den)*x^k + ..." in descending degree; "0" for zero.
std::string poly_to_ascii(const QPoly& f, const std::string& var = "x");
/// Reads the canonical form and ordinary input such as "x^5 - x - 1" or "3/2*x^2 + (1/4)".
QPoly parse_poly(std::string_view text, const std::string& var = "x");

json params_to_json(const ParamMap& params);
ParamMap params_from_json(const json& j);

json curve_to_json(const WeierstrassCurve<Rational>& E);
WeierstrassCurve<Rational> curve_from_json(const json& j);
json point_to_json(const CurvePoint<Rational>& P);
CurvePoint<Rational> point_from_json(const json& j);

std::string normalization_name(VeluNormalization n);
VeluNormalization parse_normalization(const std::string& name);

/// Serializes the public record; the per-pair Vélu terms are rebuilt on load.
json isogeny_to_json(const IsogenyData<Rational>& iso);
IsogenyData<Rational> isogeny_from_json(const json& j);

json input_to_json(const ConstructionInput& in);
ConstructionInput input_from_json(const json& j);
json certificate_to_json(const NontrivialPointCertificate& cert);
NontrivialPointCertificate certificate_from_json(const json& j);

json family_to_json(const FamilyPolynomial& f);
FamilyPolynomial family_from_json(const json& j);

std::string certainty_name(Certainty c);
json galois_to_json(const GaloisReport& rep);
GaloisReport galois_from_json(const json& j);

}  // namespace kubert
