#include "kubert/resultant.hpp"

#include "kubert/factor.hpp"

namespace kubert {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Rational resultant(const QPoly& f, const QPoly& g) {
  if (f.is_zero() || g.is_zero()) throw DomainError("resultant of a zero polynomial");
  // f = (cf) * F with F primitive over Z, same for g
  auto [cf, F] = primitive_integer_part(f);
  auto [cg, G] = primitive_integer_part(g);
  Integer r = resultant(F, G);
  return Rational(Rational(r) * kubert::pow(cf, static_cast<unsigned>(g.degree())) *
                  kubert::pow(cg, static_cast<unsigned>(f.degree())));
}

Rational discriminant(const QPoly& f) {
  if (f.degree() < 2) throw DomainError("discriminant needs degree >= 2");
  const int n = f.degree();
  Rational r = resultant(f, derivative(f)) / f.lc();
  if ((n * (n - 1) / 2) % 2 == 1) r = -r;
  return r;
}

}  // namespace kubert
