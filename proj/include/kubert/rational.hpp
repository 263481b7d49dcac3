#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kubert {

using Integer = mpz_class;
/// Exact rational number. gmpxx keeps it in lowest terms with a positive
/// denominator as long as every value goes through canonical construction.
using Rational = mpq_class;

/// Raised for mathematically invalid input (singular curves, zero
/// denominators, wrong torsion order). The CLI maps it to exit code 2.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(long num, long den = 1) {
  return make_rational(Integer(num), Integer(den));
}

/// Parses "a", "-a" or "a/b" (decimal integers).
Rational parse_rational(std::string_view text);

/// "num/den" with den omitted when it is 1.
std::string to_string(const Rational& q);

/// Nonnegative square root when `q` is the square of a rational.
std::optional<Rational> rational_sqrt(const Rational& q);

inline bool is_rational_square(const Rational& q) { return rational_sqrt(q).has_value(); }

/// a / b, throwing instead of trapping on b = 0.
inline Rational divide(const Rational& a, const Rational& b) {
  if (sgn(b) == 0) throw DomainError("division by zero");
  return Rational(a / b);
}

inline Rational pow(const Rational& base, unsigned exp) {
  Rational r(1);
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace kubert
