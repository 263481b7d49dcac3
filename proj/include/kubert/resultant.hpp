#pragma once

#include <utility>

#include "kubert/unipoly.hpp"

namespace kubert {

namespace detail {
template <class R>
R ring_pow(const R& base, int e, const R& like) {
  R acc = ring_traits<R>::one(like);
  for (int i = 0; i < e; ++i) acc = R(acc * base);
  return acc;
}
}  // namespace detail

/// Resultant over an integral domain by the subresultant PRS. Only ring
/// operations and exact division of coefficients are used, so this runs
/// over Z, Q, F_p, K(t) and K(t)[X] alike. Sylvester order: f first.
template <class R>
R resultant(UniPoly<R> a, UniPoly<R> b) {
  if (a.is_zero() || b.is_zero()) throw DomainError("resultant of a zero polynomial");
  const R like = a.lc();
  R sign = ring_traits<R>::one(like);
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) sign = R(-sign);
  }
  if (b.degree() == 0) return R(sign * detail::ring_pow(b.lc(), a.degree(), like));
  R g = ring_traits<R>::one(like), h = ring_traits<R>::one(like);
  while (true) {
    const int delta = a.degree() - b.degree();
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) sign = R(-sign);
    UniPoly<R> r = pseudo_remainder(a, b);
    a = std::move(b);
    if (r.is_zero()) return ring_traits<R>::zero(like);
    R divisor = R(g * detail::ring_pow(h, delta, like));
    std::vector<R> q;
    q.reserve(r.coeffs().size());
    for (const R& v : r.coeffs()) q.push_back(ring_traits<R>::exact_div(v, divisor));
    b = UniPoly<R>(std::move(q));
    g = a.lc();
    // h <- g^delta / h^(delta-1)
    h = ring_traits<R>::exact_div(detail::ring_pow(g, delta, like), detail::ring_pow(h, delta - 1, like));
    if (b.degree() == 0) {
      const int da = a.degree();
      R last = ring_traits<R>::exact_div(detail::ring_pow(b.lc(), da, like), detail::ring_pow(h, da - 1, like));
      return R(sign * last);
    }
  }
}

/// Resultant over Q, computed on primitive integer models.
Rational resultant(const QPoly& f, const QPoly& g);

/// (-1)^(n(n-1)/2) res(f, f') / lc(f).
template <class F>
F discriminant(const UniPoly<F>& f) {
  if (f.degree() < 2) throw DomainError("discriminant needs degree >= 2");
  const int n = f.degree();
  F r = ring_traits<F>::exact_div(resultant(f, derivative(f)), f.lc());
  if ((n * (n - 1) / 2) % 2 == 1) r = F(-r);
  return r;
}

Rational discriminant(const QPoly& f);

}  // namespace kubert
