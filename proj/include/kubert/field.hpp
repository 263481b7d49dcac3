#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "kubert/rational.hpp"

namespace kubert {

/// Coefficient-ring interface used by the polynomial templates.
///
/// Every coefficient type is default-constructible to zero. Constants other
/// than zero are built from an existing element (`like`) because prime-field
/// elements carry their modulus at run time.
template <class T>
struct ring_traits;

template <>
struct ring_traits<Rational> {
  static constexpr bool is_field = true;
  static Rational zero(const Rational& = {}) { return Rational(0); }
  static Rational one(const Rational& = {}) { return Rational(1); }
  static Rational from_int(long n, const Rational& = {}) { return Rational(n); }
  static bool is_zero(const Rational& a) { return sgn(a) == 0; }
  static Rational exact_div(const Rational& a, const Rational& b) {
    if (is_zero(b)) throw DomainError("division by zero");
    return Rational(a / b);
  }
  static std::string to_string(const Rational& a) { return kubert::to_string(a); }
};

template <>
struct ring_traits<Integer> {
  static constexpr bool is_field = false;
  static Integer zero(const Integer& = {}) { return Integer(0); }
  static Integer one(const Integer& = {}) { return Integer(1); }
  static Integer from_int(long n, const Integer& = {}) { return Integer(n); }
  static bool is_zero(const Integer& a) { return sgn(a) == 0; }
  static Integer exact_div(const Integer& a, const Integer& b) {
    if (sgn(b) == 0) throw DomainError("division by zero");
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }
  static std::string to_string(const Integer& a) { return a.get_str(); }
};

/// Element of the prime field F_p, p < 2^32. A default-constructed element
/// is the zero of an unspecified field and adopts the modulus of whatever
/// it is combined with.
class Fp {
 public:
  Fp() = default;
  Fp(std::int64_t value, std::uint64_t p) : p_(p) {
    if (p == 0) throw std::invalid_argument("Fp: zero modulus");
    std::int64_t r = value % static_cast<std::int64_t>(p);
    if (r < 0) r += static_cast<std::int64_t>(p);
    v_ = static_cast<std::uint64_t>(r);
  }

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  friend Fp operator+(const Fp& a, const Fp& b) {
    std::uint64_t p = common(a, b);
    std::uint64_t s = a.v_ + b.v_;
    if (s >= p) s -= p;
    return raw(s, p);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    std::uint64_t p = common(a, b);
    return raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + p - b.v_, p);
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    std::uint64_t p = common(a, b);
    return raw(static_cast<std::uint64_t>((static_cast<unsigned __int128>(a.v_) * b.v_) % p), p);
  }
  friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
  Fp operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }
  friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_; }

  Fp pow(std::uint64_t e) const {
    Fp base = *this, acc = raw(1 % p_, p_);
    while (e) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }
  Fp inverse() const {
    if (v_ == 0) throw DomainError("Fp: inverse of zero");
    return pow(p_ - 2);
  }

 private:
  static Fp raw(std::uint64_t v, std::uint64_t p) {
    Fp r;
    r.v_ = v;
    r.p_ = p;
    return r;
  }
  static std::uint64_t common(const Fp& a, const Fp& b) {
    if (a.p_ == 0) return b.p_;
    if (b.p_ != 0 && a.p_ != b.p_) throw std::invalid_argument("Fp: mixed moduli");
    return a.p_;
  }

  std::uint64_t v_ = 0;
  std::uint64_t p_ = 0;
};

template <>
struct ring_traits<Fp> {
  static constexpr bool is_field = true;
  static Fp zero(const Fp& like = {}) { return like.modulus() ? Fp(0, like.modulus()) : Fp(); }
  static Fp one(const Fp& like) { return Fp(1, like.modulus()); }
  static Fp from_int(long n, const Fp& like) { return Fp(n, like.modulus()); }
  static bool is_zero(const Fp& a) { return a.is_zero(); }
  static Fp exact_div(const Fp& a, const Fp& b) { return a / b; }
  static std::string to_string(const Fp& a) { return std::to_string(a.value()); }
};

/// Residue of a rational in F_p; throws when p divides the denominator.
inline Fp reduce_mod(const Rational& q, std::uint64_t p) {
  Integer pm(static_cast<unsigned long>(p));
  Integer n = q.get_num() % pm, d = q.get_den() % pm;
  if (d == 0) throw DomainError("denominator divisible by p");
  long nv = n.get_si(), dv = d.get_si();
  return Fp(nv, p) / Fp(dv, p);
}

bool is_prime(std::uint64_t n);

}  // namespace kubert
