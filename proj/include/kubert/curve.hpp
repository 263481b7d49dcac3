#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kubert/ratfunc.hpp"

namespace kubert {

/// Affine point or the point at infinity.
template <class F>
struct CurvePoint {
  bool inf = true;
  F x{}, y{};

  static CurvePoint infinity() { return {}; }
  static CurvePoint affine(F x, F y) { return {false, std::move(x), std::move(y)}; }

  friend bool operator==(const CurvePoint& a, const CurvePoint& b) {
    if (a.inf || b.inf) return a.inf == b.inf;
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator!=(const CurvePoint& a, const CurvePoint& b) { return !(a == b); }
};

/// y^2 = 4x^3 + b2 x^2 + 2 b4 x + b6, reached by y_b = 2y + a1 x + a3.
template <class F>
struct BForm {
  F b2, b4, b6, b8;

  /// The right-hand side as a polynomial in x.
  UniPoly<F> cubic() const { return UniPoly<F>({b6, F(F(2) * b4), b2, F(4)}); }
};

/// Long Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
template <class F>
class WeierstrassCurve {
 public:
  F a1, a2, a3, a4, a6;

  WeierstrassCurve() = default;
  WeierstrassCurve(F a1_, F a2_, F a3_, F a4_, F a6_)
      : a1(std::move(a1_)), a2(std::move(a2_)), a3(std::move(a3_)), a4(std::move(a4_)), a6(std::move(a6_)) {
    if (ring_traits<F>::is_zero(discriminant())) throw DomainError("singular curve (discriminant 0)");
  }

  BForm<F> b_form() const {
    F b2 = F(a1 * a1 + F(4) * a2);
    F b4 = F(F(2) * a4 + a1 * a3);
    F b6 = F(a3 * a3 + F(4) * a6);
    F b8 = F(a1 * a1 * a6 + F(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4);
    return {b2, b4, b6, b8};
  }

  F discriminant() const {
    auto [b2, b4, b6, b8] = b_form();
    return F(F(-(b2 * b2 * b8)) - F(8) * b4 * b4 * b4 - F(27) * b6 * b6 + F(9) * b2 * b4 * b6);
  }

  bool contains(const CurvePoint<F>& P) const {
    if (P.inf) return true;
    const F& x = P.x;
    const F& y = P.y;
    F lhs = F(y * y + a1 * x * y + a3 * y);
    F rhs = F(x * x * x + a2 * x * x + a4 * x + a6);
    return lhs == rhs;
  }

  friend bool operator==(const WeierstrassCurve& a, const WeierstrassCurve& b) {
    return a.a1 == b.a1 && a.a2 == b.a2 && a.a3 == b.a3 && a.a4 == b.a4 && a.a6 == b.a6;
  }
};

template <class F>
CurvePoint<F> neg(const WeierstrassCurve<F>& E, const CurvePoint<F>& P) {
  if (P.inf) return P;
  return CurvePoint<F>::affine(P.x, F(F(-P.y) - E.a1 * P.x - E.a3));
}

namespace detail {
template <class F>
CurvePoint<F> add_unchecked(const WeierstrassCurve<F>& E, const CurvePoint<F>& P, const CurvePoint<F>& Q) {
  if (P.inf) return Q;
  if (Q.inf) return P;
  F lambda, nu;
  if (P.x == Q.x) {
    F ysum = F(P.y + Q.y + E.a1 * Q.x + E.a3);
    if (ring_traits<F>::is_zero(ysum)) return CurvePoint<F>::infinity();
    F num = F(F(3) * P.x * P.x + F(2) * E.a2 * P.x + E.a4 - E.a1 * P.y);
    lambda = F(num / ysum);
    nu = F(F(F(-(P.x * P.x * P.x)) + E.a4 * P.x + F(2) * E.a6 - E.a3 * P.y) / ysum);
  } else {
    F dx = F(Q.x - P.x);
    lambda = F(F(Q.y - P.y) / dx);
    nu = F(F(P.y * Q.x - Q.y * P.x) / dx);
  }
  F x3 = F(lambda * lambda + E.a1 * lambda - E.a2 - P.x - Q.x);
  F y3 = F(F(-(lambda + E.a1)) * x3 - nu - E.a3);
  return CurvePoint<F>::affine(std::move(x3), std::move(y3));
}

template <class F>
void require_on_curve(const WeierstrassCurve<F>& E, const CurvePoint<F>& P) {
  if (!E.contains(P)) throw DomainError("point is not on the curve");
}
}  // namespace detail

template <class F>
CurvePoint<F> add(const WeierstrassCurve<F>& E, const CurvePoint<F>& P, const CurvePoint<F>& Q) {
  detail::require_on_curve(E, P);
  detail::require_on_curve(E, Q);
  return detail::add_unchecked(E, P, Q);
}

template <class F>
CurvePoint<F> scalar_mul(const WeierstrassCurve<F>& E, long k, const CurvePoint<F>& P) {
  detail::require_on_curve(E, P);
  CurvePoint<F> base = k < 0 ? neg(E, P) : P;
  unsigned long n = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  CurvePoint<F> acc = CurvePoint<F>::infinity();
  while (n) {
    if (n & 1) acc = detail::add_unchecked(E, acc, base);
    n >>= 1;
    if (n) base = detail::add_unchecked(E, base, base);
  }
  return acc;
}

/// Least k <= bound with kP = O.
template <class F>
std::optional<int> order_of_point(const WeierstrassCurve<F>& E, const CurvePoint<F>& P, int bound) {
  detail::require_on_curve(E, P);
  CurvePoint<F> acc = P;
  for (int k = 1; k <= bound; ++k) {
    if (acc.inf) return k;
    acc = detail::add_unchecked(E, acc, P);
  }
  return std::nullopt;
}

/// Rational torsion has order at most 12 (Mazur), so surviving 12 multiples
/// proves infinite order.
inline bool is_infinite_order(const WeierstrassCurve<Rational>& E, const CurvePoint<Rational>& P) {
  return !order_of_point(E, P, 12).has_value();
}

template <class F>
std::pair<F, F> b_point(const WeierstrassCurve<F>& E, const CurvePoint<F>& P) {
  if (P.inf) throw DomainError("b_point of the point at infinity");
  return {P.x, F(F(2) * P.y + E.a1 * P.x + E.a3)};
}

template <class F>
CurvePoint<F> from_b_point(const WeierstrassCurve<F>& E, const F& x, const F& yb) {
  return CurvePoint<F>::affine(x, F(F(yb - E.a1 * x - E.a3) / F(2)));
}

/// Tate normal form E(b, c): y^2 + (1-c)xy - by = x^3 - bx^2, A = (0, 0).
template <class F>
WeierstrassCurve<F> tate_curve(const F& b, const F& c) {
  return WeierstrassCurve<F>(F(F(1) - c), F(-b), F(-b), F(0), F(0));
}

template <class F>
struct KubertFamily {
  int l;
  WeierstrassCurve<F> curve;
  CurvePoint<F> A;
};

inline const std::vector<int>& kubert_levels() {
  static const std::vector<int> levels{3, 4, 5, 6, 7, 8, 9, 10, 12};
  return levels;
}

/// Tate normal form (b, c) for level l as functions of one parameter t.
template <class F>
std::pair<F, F> kubert_tate_parameters(int l, const F& t) {
  const F one(1);
  auto div = [](const F& a, const F& b) { return ring_traits<F>::exact_div(a, b); };
  auto from_df = [](const F& d, const F& f) {
    F c = F(f * F(d - F(1)));
    return std::pair<F, F>{F(c * d), c};
  };
  switch (l) {
    case 4: return {t, F(0)};
    case 5: return {t, t};
    case 6: return {F(t + t * t), t};
    case 7: return {F(t * t * t - t * t), F(t * t - t)};
    case 8: {
      F b = F(F(F(2) * t - one) * F(t - one));
      return {b, div(b, t)};
    }
    case 9: return from_df(F(t * F(t - one) + one), t);
    case 10: return from_df(div(F(t * t), F(t - F(t - one) * F(t - one))), t);
    case 12: {
      F m = div(F(F(3) * t - F(3) * t * t - one), F(t - one));
      return from_df(F(m + t), div(m, F(one - t)));
    }
    default: throw DomainError("no one-parameter Tate form for level " + std::to_string(l));
  }
}

/// Kubert family with a rational point A = (0, 0) of exact order l.
/// l = 3 takes (a1, a3); every other level in {4..10, 12} takes one parameter.
template <class F>
KubertFamily<F> kubert_curve(int l, const std::vector<F>& params) {
  const bool known = l == 3 || (l >= 4 && l <= 10 && l != 11) || l == 12;
  if (!known) throw DomainError("unsupported level l = " + std::to_string(l));
  const std::size_t want = l == 3 ? 2 : 1;
  if (params.size() != want)
    throw DomainError("level " + std::to_string(l) + " takes " + std::to_string(want) + " parameter(s)");
  WeierstrassCurve<F> E;
  if (l == 3) {
    E = WeierstrassCurve<F>(params[0], F(0), params[1], F(0), F(0));
  } else {
    F b, c;
    try {
      std::tie(b, c) = kubert_tate_parameters(l, params[0]);
    } catch (const DomainError&) {
      throw DomainError("parameter is a pole of the level " + std::to_string(l) + " parametrization");
    }
    E = tate_curve(b, c);
  }
  auto A = CurvePoint<F>::affine(F(0), F(0));
  if (order_of_point(E, A, l) != l) throw DomainError("(0,0) does not have order " + std::to_string(l));
  return {l, E, A};
}

}  // namespace kubert
