#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "kubert/field.hpp"

namespace kubert {

/// Dense univariate polynomial, coefficients lowest degree first.
///
/// The coefficient type only needs ring operations for +, -, * and the
/// pseudo-remainder; division, gcd and friends additionally require
/// `ring_traits<F>::is_field`.
template <class F>
class UniPoly {
 public:
  using coeff_type = F;

  UniPoly() = default;
  explicit UniPoly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
  UniPoly(std::initializer_list<F> coeffs) : c_(coeffs) { trim(); }

  static UniPoly constant(const F& a) { return UniPoly(std::vector<F>{a}); }
  /// a * x^k
  static UniPoly monomial(const F& a, std::size_t k) {
    std::vector<F> c(k + 1, ring_traits<F>::zero(a));
    c[k] = a;
    return UniPoly(std::move(c));
  }
  /// The indeterminate over the field of `like`.
  static UniPoly x(const F& like = F()) { return monomial(ring_traits<F>::one(like), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<F>& coeffs() const { return c_; }

  /// Coefficient of x^k (zero beyond the degree).
  F coeff(std::size_t k) const {
    if (k < c_.size()) return c_[k];
    return c_.empty() ? F() : ring_traits<F>::zero(c_.back());
  }
  const F& lc() const { return c_.back(); }

  UniPoly operator-() const {
    std::vector<F> r;
    r.reserve(c_.size());
    for (const F& a : c_) r.push_back(F(-a));
    return UniPoly(std::move(r));
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    const auto& lg = a.c_.size() >= b.c_.size() ? a.c_ : b.c_;
    const auto& sm = a.c_.size() >= b.c_.size() ? b.c_ : a.c_;
    std::vector<F> r(lg);
    for (std::size_t i = 0; i < sm.size(); ++i) r[i] = F(r[i] + sm[i]);
    return UniPoly(std::move(r));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<F> r(a.c_.size() + b.c_.size() - 1, ring_traits<F>::zero(a.lc()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (ring_traits<F>::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = F(r[i + j] + a.c_[i] * b.c_[j]);
    }
    return UniPoly(std::move(r));
  }
  friend UniPoly operator*(const F& s, const UniPoly& a) {
    std::vector<F> r;
    r.reserve(a.c_.size());
    for (const F& v : a.c_) r.push_back(F(s * v));
    return UniPoly(std::move(r));
  }
  UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
  UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

 private:
  void trim() {
    while (!c_.empty() && ring_traits<F>::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<F> c_;
};

using QPoly = UniPoly<Rational>;
using ZPoly = UniPoly<Integer>;
using FpPoly = UniPoly<Fp>;

template <class F>
std::pair<UniPoly<F>, UniPoly<F>> divrem(const UniPoly<F>& f, const UniPoly<F>& g) {
  if (g.is_zero()) throw DomainError("polynomial division by zero");
  if (f.degree() < g.degree()) return {UniPoly<F>(), f};
  std::vector<F> r = f.coeffs();
  const int dg = g.degree();
  std::vector<F> q(f.degree() - dg + 1, ring_traits<F>::zero(g.lc()));
  const F& lead = g.lc();
  for (int k = f.degree() - dg; k >= 0; --k) {
    F t = ring_traits<F>::exact_div(r[k + dg], lead);
    q[k] = t;
    if (ring_traits<F>::is_zero(t)) continue;
    for (int j = 0; j <= dg; ++j) r[k + j] = F(r[k + j] - t * g.coeffs()[j]);
  }
  r.resize(dg);
  return {UniPoly<F>(std::move(q)), UniPoly<F>(std::move(r))};
}

template <class F>
UniPoly<F> operator/(const UniPoly<F>& f, const UniPoly<F>& g) {
  return divrem(f, g).first;
}
template <class F>
UniPoly<F> operator%(const UniPoly<F>& f, const UniPoly<F>& g) {
  return divrem(f, g).second;
}

/// Pseudo-remainder: lc(g)^(deg f - deg g + 1) f = q g + r. Needs only ring operations.
template <class F>
UniPoly<F> pseudo_remainder(const UniPoly<F>& f, const UniPoly<F>& g) {
  if (g.is_zero()) throw DomainError("pseudo-remainder by zero polynomial");
  if (f.degree() < g.degree()) return f;
  std::vector<F> r = f.coeffs();
  const int dg = g.degree();
  const F& lead = g.lc();
  int e = f.degree() - dg + 1;
  for (int k = static_cast<int>(r.size()) - 1; k >= dg; --k) {
    F t = r[k];
    for (auto& v : r) v = F(v * lead);
    for (int j = 0; j <= dg; ++j) r[k - dg + j] = F(r[k - dg + j] - t * g.coeffs()[j]);
    --e;
  }
  r.resize(dg);
  UniPoly<F> rem(std::move(r));
  // remaining factor so that the multiplier is exactly lc(g)^(deg f - deg g + 1)
  for (; e > 0; --e) rem = lead * rem;
  return rem;
}

/// Exact quotient; throws when g does not divide f.
template <class F>
UniPoly<F> exact_quotient(const UniPoly<F>& f, const UniPoly<F>& g) {
  auto [q, r] = divrem(f, g);
  if (!r.is_zero()) throw DomainError("inexact polynomial division");
  return q;
}

template <class F>
UniPoly<F> monic(const UniPoly<F>& f) {
  if (f.is_zero()) return f;
  F inv = ring_traits<F>::exact_div(ring_traits<F>::one(f.lc()), f.lc());
  return inv * f;
}

/// Monic gcd; gcd(0, 0) = 0.
template <class F>
UniPoly<F> gcd(UniPoly<F> a, UniPoly<F> b) {
  while (!b.is_zero()) {
    UniPoly<F> r = divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

template <class F>
struct XgcdResult {
  UniPoly<F> g, s, t;  // s*a + t*b = g, g monic
};

template <class F>
XgcdResult<F> xgcd(const UniPoly<F>& a, const UniPoly<F>& b) {
  const F& like = !a.is_zero() ? a.lc() : b.lc();
  UniPoly<F> r0 = a, r1 = b;
  UniPoly<F> s0 = UniPoly<F>::constant(ring_traits<F>::one(like)), s1;
  UniPoly<F> t0, t1 = UniPoly<F>::constant(ring_traits<F>::one(like));
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UniPoly<F> s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  F inv = ring_traits<F>::exact_div(ring_traits<F>::one(r0.lc()), r0.lc());
  return {inv * r0, inv * s0, inv * t0};
}

template <class F>
UniPoly<F> derivative(const UniPoly<F>& f) {
  if (f.degree() < 1) return {};
  std::vector<F> d;
  d.reserve(f.degree());
  for (int k = 1; k <= f.degree(); ++k)
    d.push_back(F(ring_traits<F>::from_int(k, f.lc()) * f.coeffs()[k]));
  return UniPoly<F>(std::move(d));
}

template <class F, class X>
X evaluate(const UniPoly<F>& f, const X& at) {
  X acc{};
  for (int k = f.degree(); k >= 0; --k) acc = X(acc * at + X(f.coeffs()[k]));
  return acc;
}

template <class F>
F evaluate(const UniPoly<F>& f, const F& at) {
  F acc = ring_traits<F>::zero(at);
  for (int k = f.degree(); k >= 0; --k) acc = F(acc * at + f.coeffs()[k]);
  return acc;
}

/// f(g(x))
template <class F>
UniPoly<F> compose(const UniPoly<F>& f, const UniPoly<F>& g) {
  UniPoly<F> acc;
  for (int k = f.degree(); k >= 0; --k) acc = acc * g + UniPoly<F>::constant(f.coeffs()[k]);
  return acc;
}

template <class F>
UniPoly<F> pow(const UniPoly<F>& base, unsigned e) {
  UniPoly<F> acc = UniPoly<F>::constant(ring_traits<F>::one(base.is_zero() ? F() : base.lc()));
  for (unsigned i = 0; i < e; ++i) acc = acc * base;
  return acc;
}

/// base^e mod m for a big exponent.
template <class F>
UniPoly<F> pow_mod(UniPoly<F> base, Integer e, const UniPoly<F>& m) {
  UniPoly<F> acc = UniPoly<F>::constant(ring_traits<F>::one(m.lc()));
  base = base % m;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) acc = (acc * base) % m;
    e >>= 1;
    if (e > 0) base = (base * base) % m;
  }
  return acc;
}

/// Maps coefficients through `fn`.
template <class G, class F, class Fn>
UniPoly<G> map_coeffs(const UniPoly<F>& f, Fn&& fn) {
  std::vector<G> r;
  r.reserve(f.coeffs().size());
  for (const F& a : f.coeffs()) r.push_back(fn(a));
  return UniPoly<G>(std::move(r));
}

/// Descending-degree human-readable form, e.g. "x^3 - 2*x + 1/2".
template <class F>
std::string format(const UniPoly<F>& f, const std::string& var = "x") {
  if (f.is_zero()) return "0";
  std::string out;
  for (int k = f.degree(); k >= 0; --k) {
    const F& a = f.coeffs()[k];
    if (ring_traits<F>::is_zero(a)) continue;
    std::string s = ring_traits<F>::to_string(a);
    bool neg = !s.empty() && s[0] == '-' && s.find_first_of("+-", 1) == std::string::npos;
    if (neg) s.erase(0, 1);
    bool compound = s.find_first_of("+-", 0) != std::string::npos;
    if (compound) s = "(" + s + ")";
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (k == 0) {
      out += s;
      continue;
    }
    if (s != "1") out += s + "*";
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace kubert
