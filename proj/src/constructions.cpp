#include "kubert/constructions.hpp"

#include <stdexcept>

namespace kubert {

namespace {

const Rational& get(const ParamMap& params, const std::string& name) {
  auto it = params.find(name);
  if (it == params.end()) throw DomainError("missing parameter '" + name + "'");
  return it->second;
}

QPoly cubic(const Rational& c0, const Rational& c1, const Rational& c2, const Rational& c3) {
  return QPoly({c0, c1, c2, c3});
}

// Builds the domain family, turning a singular curve into DegenerateInput.
void require_nonsingular(int l, const std::vector<Rational>& params) {
  try {
    kubert_curve(l, params);
  } catch (const DomainError& e) {
    throw DegenerateInput(e.what());
  }
}

Rational abs_of(const Rational& q) { return sgn(q) < 0 ? Rational(-q) : q; }

}  // namespace

QPoly tabulated_model_l5(const Rational& c) {
  Rational alpha = c * c - 30 * c + 1;
  Rational beta = -2 * c * (3 * c + 1) * (4 * c - 7);
  Rational gamma = -c * (4 * c * c * c * c - 4 * c * c * c - 40 * c * c + 91 * c - 4);
  return cubic(gamma, beta, alpha, Rational(4));
}

QPoly tabulated_model_l3(const Rational& a1, const Rational& a3) {
  return cubic(Rational(-a3 * (4 * a1 * a1 * a1 + 27 * a3)), Rational(-18 * a1 * a3), Rational(a1 * a1), Rational(4));
}

QPoly tabulated_model_l4(const Rational& c) {
  return QPoly({c, Rational(1)}) * QPoly({c, Rational(1), Rational(4)});
}

QPoly tabulated_model_l6(const Rational& c) {
  Rational alpha = 19 * c * c + 14 * c - 1;
  Rational beta = 2 * c * (2 * c + 1);
  Rational gamma = c * (4 * c * c * c + 4 * c * c + c + 4);
  return QPoly({Rational(-alpha), Rational(4)}) * QPoly({gamma, beta, Rational(1)});
}

ConstructedPoint construct_l5(int row, const ParamMap& params, bool as_printed) {
  Rational u0, c;
  std::optional<Rational> z;
  std::optional<std::string> note;
  switch (row) {
    case 1: {
      z = get(params, "z");
      u0 = -1;
      c = as_printed ? Rational((*z * *z - 3) / 4) : Rational(-(*z * *z + 3) / 4);
      if (as_printed) note = "row 1 as printed: c = (z^2-3)/4 does not satisfy A_5(c) = z^2 at u0 = -1";
      break;
    }
    case 2:
      z = get(params, "z");
      u0 = make_rational(-3, 4);
      c = 16 * *z * *z + 18;
      break;
    case 3: {
      const Rational& t = get(params, "t");
      const Rational& m = get(params, "m");
      u0 = (t * t - 1) / 4;
      Rational t2 = t * t, t3 = t2 * t, t4 = t2 * t2, t6 = t4 * t2;
      Rational num = 11 * t6 + 33 * t4 - 8 * m * t3 + 21 * t2 + 8 * m * t - 1;
      Rational den = t6 + 8 * t4 + 21 * t2 + 16 * m * m + 18;
      c = divide(num, den);
      break;
    }
    default: throw DomainError("l=5 construction row must be 1, 2 or 3");
  }
  require_nonsingular(5, {c});
  ConstructedPoint out;
  out.l = 5;
  out.curve_params = {{"c", c}};
  out.x = -(u0 + 1) * c * c + (11 * u0 + 8) * c + u0;
  Rational G = c * c - 11 * c - 1;
  if (!z) {
    Rational A = -(4 * u0 + 3) * (u0 + 1) * (u0 + 1) * c * c + 2 * (2 * u0 + 1) * (11 * u0 * u0 + 11 * u0 + 2) * c +
                 u0 * u0 * (4 * u0 + 1);
    z = rational_sqrt(A);
    if (!z) {
      note = "A_5(c) is not a rational square";
      z = Rational(0);
    }
  }
  out.y_b = abs_of(Rational(*z * G));
  out.model = tabulated_model_l5(c);
  out.note = note;
  return out;
}

ConstructedPoint construct_l3(const Rational& a1, const Rational& u1, const Rational& z) {
  if (sgn(u1) == 0) throw DomainError("l=3 construction needs u1 != 0");
  Rational u13 = u1 * u1 * u1;
  Rational s = u1 * a1 + 1;
  Rational a3 = (z * z - s * s) / (4 * u13);
  require_nonsingular(3, {a1, a3});
  ConstructedPoint out;
  out.l = 3;
  out.curve_params = {{"a1", a1}, {"a3", a3}};
  out.x = u1 * a3 + s / (u1 * u1);
  Rational G = (u13 * a3 - u1 * a1 - 2) / u13;
  out.y_b = abs_of(Rational(z * G));
  out.model = tabulated_model_l3(a1, a3);
  return out;
}

ConstructedPoint construct_l4(const Rational& u, const Rational& v) {
  Rational den = 4 * v + 8 * u * u;
  if (sgn(den) == 0) throw DomainError("l=4 construction needs 4v + 8u^2 != 0");
  Rational c = (u * u * (4 * u * u + 1) - v * v) / den;
  require_nonsingular(4, {c});
  ConstructedPoint out;
  out.l = 4;
  out.curve_params = {{"c", c}};
  out.x = u * u - c;
  out.y_b = abs_of(Rational(u * (v + 2 * c)));
  out.model = tabulated_model_l4(c);
  return out;
}

ConstructedPoint construct_l6(const Rational& v0, const Rational& z) {
  Rational w = 9 * v0 * v0;
  Rational den = (z + 3 + w) * (z - 3 - w);
  if (sgn(den) == 0) throw DomainError("l=6 construction needs (z+3+9v0^2)(z-3-9v0^2) != 0");
  Rational v2 = v0 * v0;
  Rational c = 2 * (9 * v2 * v2 + 18 * v2 - v2 * z + z + 5) / den;
  require_nonsingular(6, {c});
  ConstructedPoint out;
  out.l = 6;
  out.curve_params = {{"c", c}};
  out.x = (19 * c * c + 14 * c - 1 + v2 * (9 * c + 1) * (9 * c + 1)) / 4;
  out.model = tabulated_model_l6(c);
  auto y = rational_sqrt(evaluate(out.model, out.x));
  if (!y) throw std::logic_error("l=6 construction: f(x) is not a square");
  out.y_b = *y;
  return out;
}

ConstructedPoint construct(const ConstructionInput& in) {
  switch (in.l) {
    case 3: return construct_l3(get(in.params, "a1"), get(in.params, "u1"), get(in.params, "z"));
    case 4: return construct_l4(get(in.params, "u"), get(in.params, "v"));
    case 5: return construct_l5(in.row, in.params, in.as_printed);
    case 6: return construct_l6(get(in.params, "v0"), get(in.params, "z"));
    default: throw DomainError("constructions exist for l in {3,4,5,6}");
  }
}

std::pair<MultiPoly, MultiPoly> defining_identity(int l) {
  auto num = [](const std::vector<std::string>& vars, long a) { return MultiPoly::constant(vars, Rational(a)); };
  switch (l) {
    case 5: {
      const std::vector<std::string> v{"c", "u0"};
      MultiPoly c = MultiPoly::variable(v, "c"), u = MultiPoly::variable(v, "u0");
      auto k = [&](long a) { return num(v, a); };
      MultiPoly x = -(u + k(1)) * c * c + (k(11) * u + k(8)) * c + u;
      MultiPoly alpha = c * c - k(30) * c + k(1);
      MultiPoly beta = k(-2) * c * (k(3) * c + k(1)) * (k(4) * c - k(7));
      MultiPoly gamma = -c * (k(4) * c.pow(4) - k(4) * c.pow(3) - k(40) * c * c + k(91) * c - k(4));
      MultiPoly f = k(4) * x.pow(3) + alpha * x * x + beta * x + gamma;
      MultiPoly A = -(k(4) * u + k(3)) * (u + k(1)).pow(2) * c * c +
                    k(2) * (k(2) * u + k(1)) * (k(11) * u * u + k(11) * u + k(2)) * c + u * u * (k(4) * u + k(1));
      MultiPoly G = c * c - k(11) * c - k(1);
      return {f, A * G * G};
    }
    case 3: {
      const std::vector<std::string> v{"a1", "a3", "u1"};
      MultiPoly a1 = MultiPoly::variable(v, "a1"), a3 = MultiPoly::variable(v, "a3"),
                u1 = MultiPoly::variable(v, "u1");
      auto k = [&](long a) { return num(v, a); };
      // x = X / u1^2 with X = u1^3 a3 + a1 u1 + 1; both sides times u1^6
      MultiPoly X = u1.pow(3) * a3 + a1 * u1 + k(1);
      MultiPoly lhs = k(4) * X.pow(3) + a1 * a1 * u1 * u1 * X * X - k(18) * a1 * a3 * u1.pow(4) * X -
                      a3 * (k(4) * a1.pow(3) + k(27) * a3) * u1.pow(6);
      MultiPoly A = k(4) * u1.pow(3) * a3 + (u1 * a1 + k(1)).pow(2);
      MultiPoly G = u1.pow(3) * a3 - u1 * a1 - k(2);  // u1^3 G_3
      return {lhs, A * G * G};
    }
    case 6: {
      const std::vector<std::string> v{"c", "v0"};
      MultiPoly c = MultiPoly::variable(v, "c"), v0 = MultiPoly::variable(v, "v0");
      auto k = [&](long a) { return num(v, a); };
      const Rational quarter = make_rational(1, 4);
      MultiPoly alpha = k(19) * c * c + k(14) * c - k(1);
      MultiPoly beta = k(2) * c * (k(2) * c + k(1));
      MultiPoly gamma = c * (k(4) * c.pow(3) + k(4) * c * c + c + k(4));
      MultiPoly s = k(9) * c + k(1);
      MultiPoly x = quarter * (alpha + v0 * v0 * s * s);
      MultiPoly f = (k(4) * x - alpha) * (x * x + beta * x + gamma);
      MultiPoly w = k(3) * v0 * v0;
      MultiPoly A = k(9) * (w + k(1)).pow(2) * c * c + k(2) * (w + k(1)) * (w + k(5)) * c + (v0 * v0 - k(1)).pow(2);
      MultiPoly G = quarter * v0 * s * s;
      return {f, A * G * G};
    }
    case 4: {
      const std::vector<std::string> v{"c", "u"};
      MultiPoly c = MultiPoly::variable(v, "c"), u = MultiPoly::variable(v, "u");
      auto k = [&](long a) { return num(v, a); };
      MultiPoly x = u * u - c;
      MultiPoly f = (x + c) * (k(4) * x * x + x + c);
      return {f, u * u * (k(4) * c * c - k(8) * u * u * c + u * u * (k(4) * u * u + k(1)))};
    }
    default: throw DomainError("defining identities exist for l in {3,4,5,6}");
  }
}

bool verify_defining_identity(int l) {
  auto [lhs, rhs] = defining_identity(l);
  return identity_check(lhs, rhs, {IdentityMode::exact});
}

NontrivialPointCertificate certify(const ConstructionInput& in) {
  NontrivialPointCertificate cert;
  cert.input = in;
  cert.l = in.l;
  ConstructedPoint cp;
  try {
    cp = construct(in);
  } catch (const DegenerateInput& e) {
    cert.excluded_reason = std::string("singular curve: ") + e.what();
    return cert;
  }
  cert.curve_params = cp.curve_params;
  cert.x = cp.x;
  cert.y_b = cp.y_b;

  std::vector<Rational> fam_params;
  if (in.l == 3)
    fam_params = {cp.curve_params.at("a1"), cp.curve_params.at("a3")};
  else
    fam_params = {cp.curve_params.at("c")};
  auto fam = kubert_curve(in.l, fam_params);
  auto iso = velu_quotient(fam.curve, fam.A, in.l);
  const auto& F = iso.codomain;
  cert.curve_F = F;
  const QPoly f = F.b_form().cubic();
  cert.model_matches = f == cp.model;
  cert.on_curve = cp.y_b * cp.y_b == evaluate(f, cp.x);
  cert.point = from_b_point(F, cp.x, cp.y_b);

  auto reason = [&](const std::string& r) {
    if (!cert.excluded_reason) cert.excluded_reason = r;
  };
  if (cp.note) reason(*cp.note);
  if (!cert.model_matches) reason("tabulated model differs from the Velu quotient of the level-" +
                                  std::to_string(in.l) + " family");
  if (!cert.on_curve) {
    reason("point is not on the quotient curve");
    return cert;
  }
  cert.torsion_order = order_of_point(F, cert.point, 12);
  cert.infinite_order = !cert.torsion_order;
  cert.fiber = fiber_polynomial(iso, cp.x);
  auto pre = has_rational_preimage(iso, cert.point);
  cert.nontrivial = !pre.found;
  if (pre.found) cert.preimage = pre.witness;
  if (sgn(cp.y_b) == 0)
    reason("torsion point (y=0)");
  else if (cert.torsion_order)
    reason("torsion point of order " + std::to_string(*cert.torsion_order));
  if (!cert.nontrivial) reason("point is the image of a rational point");
  return cert;
}

}  // namespace kubert
