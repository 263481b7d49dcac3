#include "kubert/serialize.hpp"

#include <cctype>

namespace kubert {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw DomainError(std::string("JSON record lacks '") + key + "'");
  return j.at(key);
}

template <class T>
T field_as(const json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const json::exception& e) {
    throw DomainError(std::string("JSON field '") + key + "': " + e.what());
  }
}

json optional_point(const std::optional<CurvePoint<Rational>>& p) { return p ? point_to_json(*p) : json(nullptr); }

class PolyParser {
 public:
  PolyParser(std::string_view text, const std::string& var) : s_(text), var_(var) {}

  QPoly parse() {
    skip();
    if (pos_ == s_.size()) throw error("empty polynomial");
    QPoly acc;
    bool first = true;
    while (true) {
      skip();
      if (pos_ == s_.size()) break;
      Rational sign(1);
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = -1;
        ++pos_;
      } else if (!first) {
        throw error("expected '+' or '-'");
      }
      acc += sign * term();
      first = false;
    }
    return acc;
  }

 private:
  QPoly term() {
    Rational coeff(1);
    int power = 0;
    while (true) {
      skip();
      if (pos_ < s_.size() && s_.compare(pos_, var_.size(), var_) == 0) {
        pos_ += var_.size();
        skip();
        int e = 1;
        if (peek() == '^') {
          ++pos_;
          skip();
          e = static_cast<int>(integer_token().get_si());
        }
        power += e;
      } else if (peek() == '(') {
        ++pos_;
        skip();
        Rational sign(1);
        if (peek() == '-' || peek() == '+') {
          if (peek() == '-') sign = -1;
          ++pos_;
        }
        coeff *= sign * rational_token();
        skip();
        if (peek() != ')') throw error("expected ')'");
        ++pos_;
      } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff *= rational_token();
      } else {
        throw error("unexpected character");
      }
      skip();
      if (peek() != '*') break;
      ++pos_;
    }
    return QPoly::monomial(coeff, static_cast<std::size_t>(power));
  }

  Integer integer_token() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw error("expected an integer");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  Rational rational_token() {
    Integer num = integer_token();
    skip();
    if (peek() == '/') {
      ++pos_;
      skip();
      return make_rational(num, integer_token());
    }
    return Rational(num);
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  DomainError error(const std::string& what) const {
    return DomainError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view s_;
  std::string var_;
  std::size_t pos_ = 0;
};

}  // namespace

json rational_to_json(const Rational& q) { return json::array({q.get_num().get_str(), q.get_den().get_str()}); }

Rational rational_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
    throw DomainError("rational must be [\"num\", \"den\"]");
  try {
    return make_rational(Integer(j[0].get<std::string>()), Integer(j[1].get<std::string>()));
  } catch (const std::invalid_argument&) {
    throw DomainError("rational components must be decimal integers");
  }
}

json poly_to_json(const QPoly& f, const std::string& var) {
  json coeffs = json::array();
  for (const Rational& a : f.coeffs()) coeffs.push_back(rational_to_json(a));
  return {{"var", var}, {"coeffs", coeffs}};
}

QPoly poly_from_json(const json& j) {
  const json& cs = field(j, "coeffs");
  if (!cs.is_array()) throw DomainError("coeffs must be an array");
  std::vector<Rational> v;
  for (const json& c : cs) v.push_back(rational_from_json(c));
  return QPoly(v);
}

std::string poly_to_ascii(const QPoly& f, const std::string& var) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int k = f.degree(); k >= 0; --k) {
    const Rational& a = f.coeffs()[k];
    if (sgn(a) == 0) continue;
    if (!out.empty()) out += " + ";
    out += "(" + a.get_num().get_str() + "/" + a.get_den().get_str() + ")*" + var + "^" + std::to_string(k);
  }
  return out;
}

QPoly parse_poly(std::string_view text, const std::string& var) {
  if (text == "0") return QPoly();
  return PolyParser(text, var).parse();
}

json params_to_json(const ParamMap& params) {
  json out = json::object();
  for (const auto& [k, v] : params) out[k] = rational_to_json(v);
  return out;
}

ParamMap params_from_json(const json& j) {
  if (!j.is_object()) throw DomainError("parameters must be an object");
  ParamMap out;
  for (const auto& [k, v] : j.items()) out[k] = rational_from_json(v);
  return out;
}

json curve_to_json(const WeierstrassCurve<Rational>& E) {
  return {{"a1", rational_to_json(E.a1)},
          {"a2", rational_to_json(E.a2)},
          {"a3", rational_to_json(E.a3)},
          {"a4", rational_to_json(E.a4)},
          {"a6", rational_to_json(E.a6)}};
}

WeierstrassCurve<Rational> curve_from_json(const json& j) {
  return WeierstrassCurve<Rational>(rational_from_json(field(j, "a1")), rational_from_json(field(j, "a2")),
                                    rational_from_json(field(j, "a3")), rational_from_json(field(j, "a4")),
                                    rational_from_json(field(j, "a6")));
}

json point_to_json(const CurvePoint<Rational>& P) {
  if (P.inf) return {{"inf", true}};
  return {{"inf", false}, {"x", rational_to_json(P.x)}, {"y", rational_to_json(P.y)}};
}

CurvePoint<Rational> point_from_json(const json& j) {
  if (field_as<bool>(j, "inf")) return CurvePoint<Rational>::infinity();
  return CurvePoint<Rational>::affine(rational_from_json(field(j, "x")), rational_from_json(field(j, "y")));
}

std::string normalization_name(VeluNormalization n) {
  switch (n) {
    case VeluNormalization::standard: return "standard";
    case VeluNormalization::kernel_trace: return "kernel_trace";
    case VeluNormalization::tabulated: return "tabulated";
  }
  return "?";
}

VeluNormalization parse_normalization(const std::string& name) {
  for (auto n : {VeluNormalization::standard, VeluNormalization::kernel_trace, VeluNormalization::tabulated})
    if (normalization_name(n) == name) return n;
  throw DomainError("unknown normalization '" + name + "'");
}

json isogeny_to_json(const IsogenyData<Rational>& iso) {
  json kx = json::array();
  for (const Rational& x : iso.kernel_x) kx.push_back(rational_to_json(x));
  CurvePoint<Rational> gen = iso.terms.empty() ? CurvePoint<Rational>::infinity()
                                               : CurvePoint<Rational>::affine(iso.terms[0].x, iso.terms[0].y);
  return {{"domain", curve_to_json(iso.domain)},
          {"codomain", curve_to_json(iso.codomain)},
          {"degree", iso.degree},
          {"kernel_generator", point_to_json(gen)},
          {"kernel_x", kx},
          {"normalization", normalization_name(iso.normalization)},
          {"shift", rational_to_json(iso.shift)},
          {"phi_x_num", poly_to_json(iso.phi_x_num)},
          {"phi_x_den", poly_to_json(iso.phi_x_den)}};
}

IsogenyData<Rational> isogeny_from_json(const json& j) {
  auto domain = curve_from_json(field(j, "domain"));
  auto gen = point_from_json(field(j, "kernel_generator"));
  auto iso = velu_quotient(domain, gen, field_as<int>(j, "degree"),
                           parse_normalization(field_as<std::string>(j, "normalization")));
  if (!(iso.codomain == curve_from_json(field(j, "codomain"))) || iso.phi_x_num != poly_from_json(field(j, "phi_x_num")) ||
      iso.phi_x_den != poly_from_json(field(j, "phi_x_den")) || iso.shift != rational_from_json(field(j, "shift")))
    throw DomainError("isogeny record is inconsistent with its kernel");
  return iso;
}

json input_to_json(const ConstructionInput& in) {
  return {{"l", in.l}, {"row", in.row}, {"params", params_to_json(in.params)}, {"as_printed", in.as_printed}};
}

ConstructionInput input_from_json(const json& j) {
  return {field_as<int>(j, "l"), field_as<int>(j, "row"), params_from_json(field(j, "params")),
          field_as<bool>(j, "as_printed")};
}

json certificate_to_json(const NontrivialPointCertificate& cert) {
  bool has_curve = !ring_traits<Rational>::is_zero(cert.curve_F.discriminant());
  return {{"input", input_to_json(cert.input)},
          {"l", cert.l},
          {"curve_params", params_to_json(cert.curve_params)},
          {"curve_F", has_curve ? curve_to_json(cert.curve_F) : json(nullptr)},
          {"point", point_to_json(cert.point)},
          {"x", rational_to_json(cert.x)},
          {"y_b", rational_to_json(cert.y_b)},
          {"model_matches", cert.model_matches},
          {"on_curve", cert.on_curve},
          {"infinite_order", cert.infinite_order},
          {"nontrivial", cert.nontrivial},
          {"torsion_order", cert.torsion_order ? json(*cert.torsion_order) : json(nullptr)},
          {"preimage", optional_point(cert.preimage)},
          {"fiber", poly_to_json(cert.fiber)},
          {"excluded_reason", cert.excluded_reason ? json(*cert.excluded_reason) : json(nullptr)},
          {"valid", cert.valid()}};
}

NontrivialPointCertificate certificate_from_json(const json& j) {
  NontrivialPointCertificate c;
  c.input = input_from_json(field(j, "input"));
  c.l = field_as<int>(j, "l");
  c.curve_params = params_from_json(field(j, "curve_params"));
  if (!field(j, "curve_F").is_null()) c.curve_F = curve_from_json(j.at("curve_F"));
  c.point = point_from_json(field(j, "point"));
  c.x = rational_from_json(field(j, "x"));
  c.y_b = rational_from_json(field(j, "y_b"));
  c.model_matches = field_as<bool>(j, "model_matches");
  c.on_curve = field_as<bool>(j, "on_curve");
  c.infinite_order = field_as<bool>(j, "infinite_order");
  c.nontrivial = field_as<bool>(j, "nontrivial");
  if (!field(j, "torsion_order").is_null()) c.torsion_order = field_as<int>(j, "torsion_order");
  if (!field(j, "preimage").is_null()) c.preimage = point_from_json(j.at("preimage"));
  c.fiber = poly_from_json(field(j, "fiber"));
  if (!field(j, "excluded_reason").is_null()) c.excluded_reason = field_as<std::string>(j, "excluded_reason");
  if (c.valid() != field_as<bool>(j, "valid")) throw DomainError("certificate 'valid' disagrees with its fields");
  return c;
}

json family_to_json(const FamilyPolynomial& f) {
  return {{"family", family_name(f.family)}, {"params", params_to_json(f.params)}, {"poly", poly_to_json(f.poly)}};
}

FamilyPolynomial family_from_json(const json& j) {
  auto fam = parse_family(field_as<std::string>(j, "family"));
  if (!fam) throw DomainError("unknown family '" + j.at("family").get<std::string>() + "'");
  FamilyPolynomial out{*fam, params_from_json(field(j, "params")), poly_from_json(field(j, "poly"))};
  if (*fam != Family::fiber && make_family(*fam, out.params).poly != out.poly)
    throw DomainError("family polynomial does not match its closed form");
  return out;
}

std::string certainty_name(Certainty c) { return c == Certainty::exact ? "exact" : "sampled"; }

json galois_to_json(const GaloisReport& rep) {
  json hist = json::object();
  for (const auto& [k, v] : rep.pattern_histogram) hist[k] = v;
  return {{"degree", rep.degree},
          {"irreducible", rep.irreducible},
          {"disc", rational_to_json(rep.disc)},
          {"disc_is_square", rep.disc_is_square},
          {"group_label", rep.group_label},
          {"certainty", certainty_name(rep.certainty)},
          {"primes_used", rep.primes_used},
          {"pattern_histogram", hist},
          {"construction_backed", rep.construction_backed},
          {"notes", rep.notes}};
}

GaloisReport galois_from_json(const json& j) {
  GaloisReport rep;
  rep.degree = field_as<int>(j, "degree");
  rep.irreducible = field_as<bool>(j, "irreducible");
  rep.disc = rational_from_json(field(j, "disc"));
  rep.disc_is_square = field_as<bool>(j, "disc_is_square");
  rep.group_label = field_as<std::string>(j, "group_label");
  std::string cert = field_as<std::string>(j, "certainty");
  if (cert != "exact" && cert != "sampled") throw DomainError("certainty must be exact or sampled");
  rep.certainty = cert == "exact" ? Certainty::exact : Certainty::sampled;
  rep.primes_used = field_as<int>(j, "primes_used");
  rep.pattern_histogram = field_as<std::map<std::string, int>>(j, "pattern_histogram");
  rep.construction_backed = field_as<bool>(j, "construction_backed");
  rep.notes = field_as<std::vector<std::string>>(j, "notes");
  return rep;
}

}  // namespace kubert
