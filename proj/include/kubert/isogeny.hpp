#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kubert/curve.hpp"
#include "kubert/factor.hpp"

namespace kubert {

/// Which model of the quotient curve to return.
///
/// `standard` is Vélu's normalization (a1, a3 unchanged, a2 unchanged).
/// `kernel_trace` additionally translates x by the sum of x(T) over the
/// nonzero kernel points, so that the x-map has x^(l-1) coefficient
/// -trace(kernel) in its fiber polynomials, which is the model the tabulated
/// quotients for odd l are written in. `tabulated` picks `kernel_trace` for
/// odd l and `standard` for even l.
enum class VeluNormalization { standard, kernel_trace, tabulated };

template <class F>
struct KernelTerm {
  F x, y;    // representative of a +-pair of kernel points
  F t, u;    // Vélu contributions
  F gx, gy;  // partial derivatives of the curve equation at (x, y)
  bool two_torsion;
};

template <class F>
struct IsogenyData {
  WeierstrassCurve<F> domain, codomain;
  int degree = 0;
  std::vector<F> kernel_x;  // one per +-pair
  UniPoly<F> phi_x_num, phi_x_den;
  F shift{};  // codomain x = Vélu x + shift
  VeluNormalization normalization = VeluNormalization::standard;
  std::vector<KernelTerm<F>> terms;
};

/// Quotient by the cyclic subgroup generated by A, which must have exact order l.
template <class F>
IsogenyData<F> velu_quotient(const WeierstrassCurve<F>& E, const CurvePoint<F>& A, int l,
                             VeluNormalization norm = VeluNormalization::tabulated) {
  if (l < 2) throw DomainError("isogeny degree must be at least 2");
  if (order_of_point(E, A, l) != l) throw DomainError("kernel generator does not have order " + std::to_string(l));
  IsogenyData<F> out;
  out.domain = E;
  out.degree = l;
  if (norm == VeluNormalization::tabulated)
    norm = l % 2 == 1 ? VeluNormalization::kernel_trace : VeluNormalization::standard;
  out.normalization = norm;

  const auto bf = E.b_form();
  CurvePoint<F> Q = A;
  F t(0), w(0), trace(0);
  for (int i = 1; 2 * i <= l; ++i) {
    KernelTerm<F> k;
    k.x = Q.x;
    k.y = Q.y;
    k.two_torsion = 2 * i == l;
    k.gx = F(F(3) * Q.x * Q.x + F(2) * E.a2 * Q.x + E.a4 - E.a1 * Q.y);
    k.gy = F(F(F(-2) * Q.y) - E.a1 * Q.x - E.a3);
    if (k.two_torsion) {
      k.t = k.gx;
      k.u = F(0);
    } else {
      k.t = F(F(2) * k.gx - E.a1 * k.gy);
      k.u = F(k.gy * k.gy);
    }
    t = F(t + k.t);
    w = F(w + k.u + k.x * k.t);
    trace = F(trace + (k.two_torsion ? k.x : F(F(2) * k.x)));
    out.kernel_x.push_back(k.x);
    out.terms.push_back(std::move(k));
    Q = detail::add_unchecked(E, Q, A);
  }

  F a2 = E.a2, a3 = E.a3, a4 = F(E.a4 - F(5) * t), a6 = F(E.a6 - bf.b2 * t - F(7) * w);
  if (norm == VeluNormalization::kernel_trace) {
    out.shift = trace;
    F r = F(-trace);
    F a2n = F(a2 + F(3) * r);
    F a3n = F(a3 + r * E.a1);
    F a4n = F(a4 + F(2) * r * a2 + F(3) * r * r);
    F a6n = F(a6 + r * a4 + r * r * a2 + r * r * r);
    a2 = a2n;
    a3 = a3n;
    a4 = a4n;
    a6 = a6n;
  } else {
    out.shift = F(0);
  }
  out.codomain = WeierstrassCurve<F>(E.a1, a2, a3, a4, a6);

  // x-map as one fraction: (x + shift) + sum t/(x - xQ) + u/(x - xQ)^2
  const F one(1);
  const UniPoly<F> X = UniPoly<F>::x(one);
  UniPoly<F> den = UniPoly<F>::constant(one);
  for (const auto& k : out.terms) {
    UniPoly<F> lin = X - UniPoly<F>::constant(k.x);
    den = den * (k.two_torsion ? lin : lin * lin);
  }
  UniPoly<F> num = (X + UniPoly<F>::constant(out.shift)) * den;
  for (const auto& k : out.terms) {
    UniPoly<F> lin = X - UniPoly<F>::constant(k.x);
    if (k.two_torsion) {
      num = num + k.t * exact_quotient(den, lin);
    } else {
      UniPoly<F> rest = exact_quotient(den, lin * lin);
      num = num + k.t * (lin * rest) + k.u * rest;
    }
  }
  UniPoly<F> g = gcd(num, den);
  if (g.degree() > 0) {
    num = exact_quotient(num, g);
    den = exact_quotient(den, g);
  }
  out.phi_x_num = num;
  out.phi_x_den = den;
  return out;
}

template <class F>
CurvePoint<F> push_point(const IsogenyData<F>& isog, const CurvePoint<F>& P) {
  detail::require_on_curve(isog.domain, P);
  if (P.inf) return P;
  const auto& E = isog.domain;
  for (const auto& k : isog.terms)
    if (P.x == k.x) return CurvePoint<F>::infinity();
  F X = P.x, Y = P.y;
  const F yb = F(F(2) * P.y + E.a1 * P.x + E.a3);
  for (const auto& k : isog.terms) {
    F d = F(P.x - k.x);
    F d2 = F(d * d);
    F d3 = F(d2 * d);
    X = F(X + k.t / d + k.u / d2);
    Y = F(Y - k.u * yb / d3 - k.t * F(E.a1 * d + P.y - k.y) / d2 - F(E.a1 * k.u - k.gx * k.gy) / d2);
  }
  return CurvePoint<F>::affine(F(X + isog.shift), Y);
}

/// Monic degree-l polynomial whose roots are the x-coordinates of the preimages of x = xQ.
template <class F>
UniPoly<F> fiber_polynomial(const IsogenyData<F>& isog, const F& xQ) {
  UniPoly<F> f = isog.phi_x_num - xQ * isog.phi_x_den;
  if (f.degree() != isog.degree) throw DomainError("fiber polynomial has the wrong degree");
  return monic(f);
}

struct PreimageResult {
  bool found = false;
  CurvePoint<Rational> witness;
};

/// Searches for a rational P on the domain with push_point(P) = Q.
inline PreimageResult has_rational_preimage(const IsogenyData<Rational>& isog, const CurvePoint<Rational>& Q) {
  detail::require_on_curve(isog.codomain, Q);
  if (Q.inf) return {true, CurvePoint<Rational>::infinity()};
  const auto& E = isog.domain;
  for (const Rational& x0 : rational_roots(fiber_polynomial(isog, Q.x))) {
    // y^2 + (a1 x0 + a3) y - (x0^3 + a2 x0^2 + a4 x0 + a6) = 0
    Rational lin = E.a1 * x0 + E.a3;
    Rational rhs = x0 * x0 * x0 + E.a2 * x0 * x0 + E.a4 * x0 + E.a6;
    auto root = rational_sqrt(Rational(lin * lin + 4 * rhs));
    if (!root) continue;
    for (int sign : {1, -1}) {
      Rational y0 = (Rational(-lin) + sign * *root) / 2;
      auto P = CurvePoint<Rational>::affine(x0, y0);
      if (push_point(isog, P) == Q) return {true, P};
    }
  }
  return {false, CurvePoint<Rational>::infinity()};
}

}  // namespace kubert
