#pragma once

#include <string>
#include <utility>

#include "kubert/unipoly.hpp"

namespace kubert {

/// Element of K(t): a reduced fraction of polynomials with monic denominator.
template <class F>
class RatFunc {
 public:
  RatFunc() : den_(UniPoly<F>::constant(ring_traits<F>::one())) {}
  RatFunc(long n) : RatFunc(F(n)) {}
  RatFunc(const F& a) : num_(UniPoly<F>::constant(a)), den_(UniPoly<F>::constant(ring_traits<F>::one(a))) {}
  explicit RatFunc(UniPoly<F> num) : RatFunc(std::move(num), UniPoly<F>::constant(ring_traits<F>::one())) {}
  RatFunc(UniPoly<F> num, UniPoly<F> den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  /// The transcendental t itself.
  static RatFunc variable() { return RatFunc(UniPoly<F>::x()); }

  const UniPoly<F>& num() const { return num_; }
  const UniPoly<F>& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  RatFunc operator-() const { return RatFunc(-num_, den_, raw_tag{}); }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    // cross-cancel first to keep degrees small
    UniPoly<F> g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
    return RatFunc(exact_quotient(a.num_, g1) * exact_quotient(b.num_, g2),
                   exact_quotient(a.den_, g2) * exact_quotient(b.den_, g1));
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw DomainError("division by zero in K(t)");
    return a * RatFunc(b.den_, b.num_);
  }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

 private:
  struct raw_tag {};
  RatFunc(UniPoly<F> num, UniPoly<F> den, raw_tag) : num_(std::move(num)), den_(std::move(den)) {}

  void normalize() {
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = UniPoly<F>::constant(ring_traits<F>::one(den_.lc()));
      return;
    }
    UniPoly<F> g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_quotient(num_, g);
      den_ = exact_quotient(den_, g);
    }
    F inv = ring_traits<F>::exact_div(ring_traits<F>::one(den_.lc()), den_.lc());
    num_ = inv * num_;
    den_ = inv * den_;
  }

  UniPoly<F> num_;
  UniPoly<F> den_;
};

/// Q(t), the field the symbolic curve computations run over.
using QFunc = RatFunc<Rational>;

template <class F>
struct ring_traits<RatFunc<F>> {
  static constexpr bool is_field = true;
  static RatFunc<F> zero(const RatFunc<F>& = {}) { return RatFunc<F>(); }
  static RatFunc<F> one(const RatFunc<F>& = {}) { return RatFunc<F>(ring_traits<F>::one()); }
  static RatFunc<F> from_int(long n, const RatFunc<F>& = {}) { return RatFunc<F>(ring_traits<F>::from_int(n)); }
  static bool is_zero(const RatFunc<F>& a) { return a.is_zero(); }
  static RatFunc<F> exact_div(const RatFunc<F>& a, const RatFunc<F>& b) { return a / b; }
  static std::string to_string(const RatFunc<F>& a) { return format(a, "t"); }
};

/// UniPoly used as a coefficient domain (e.g. K[X] inside a resultant in x).
template <class F>
struct ring_traits<UniPoly<F>> {
  static constexpr bool is_field = false;
  static UniPoly<F> zero(const UniPoly<F>& = {}) { return {}; }
  static UniPoly<F> one(const UniPoly<F>& like = {}) {
    return UniPoly<F>::constant(ring_traits<F>::one(like.is_zero() ? F() : like.lc()));
  }
  static UniPoly<F> from_int(long n, const UniPoly<F>& like = {}) {
    return UniPoly<F>::constant(ring_traits<F>::from_int(n, like.is_zero() ? F() : like.lc()));
  }
  static bool is_zero(const UniPoly<F>& a) { return a.is_zero(); }
  static UniPoly<F> exact_div(const UniPoly<F>& a, const UniPoly<F>& b) { return exact_quotient(a, b); }
  static std::string to_string(const UniPoly<F>& a) { return format(a, "X"); }
};

template <class F>
std::string format(const RatFunc<F>& f, const std::string& var = "c") {
  if (f.is_polynomial()) return format(f.num(), var);
  return "(" + format(f.num(), var) + ")/(" + format(f.den(), var) + ")";
}

/// Specializes t to a value; throws if the denominator vanishes there.
inline Rational evaluate(const QFunc& f, const Rational& at) {
  Rational d = evaluate(f.den(), at);
  if (sgn(d) == 0) throw DomainError("rational function has a pole at the specialization");
  return Rational(evaluate(f.num(), at) / d);
}

}  // namespace kubert
