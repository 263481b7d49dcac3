#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kubert/constructions.hpp"
#include "kubert/resultant.hpp"

namespace kubert {

enum class Family { pncl5, brumer, darmon, shanks, gras_quartic, ptilde_cubic, ptilde_quartic, fiber };

std::string family_name(Family f);
std::optional<Family> parse_family(const std::string& name);
/// Parameter names a family takes, in order.
std::vector<std::string> family_parameters(Family f);

struct FamilyPolynomial {
  Family family;
  ParamMap params;
  QPoly poly;
};

// Closed forms, generic in the coefficient field so the identities can run over Q(t).

template <class F>
UniPoly<F> p_ncl5_poly(const F& n, const F& c) {
  F c2 = F(c * c), c3 = F(c2 * c), c4 = F(c3 * c);
  return UniPoly<F>({c4, F(c4 - F(3) * c3), F(F(-c3) - n * c2 + F(3) * c2), F(c3 + F(2) * n * c - c2 - c), F(-n),
                     F(1)});
}

template <class F>
UniPoly<F> brumer_poly(const F& s, const F& u) {
  return UniPoly<F>({s, u, F(s * s - s - F(2) * u - F(1)), F(u - s + F(3)), F(s - F(3)), F(1)});
}

template <class F>
UniPoly<F> darmon_poly(const F& S, const F& T) {
  return UniPoly<F>({F(F(-S) - F(3)), F(T + F(2) * S + F(5)), F(F(-(S * S)) - S + F(2) * T + F(5)),
                     F(T + S + F(5)), F(-S), F(1)});
}

template <class F>
UniPoly<F> shanks_poly(const F& t) {
  return UniPoly<F>({F(-1), F(F(-t) - F(3)), F(-t), F(1)});
}

template <class F>
UniPoly<F> ptilde_cubic_poly(const F& u, const F& v, const F& n) {
  return UniPoly<F>({v, F(-n), u, F(1)});
}

template <class F>
UniPoly<F> ptilde_quartic_poly(const F& n, const F& c) {
  return UniPoly<F>({F(-c), n, F(F(1) - n), F(-2), F(1)});
}

template <class F>
UniPoly<F> gras_poly(const F& t) {
  return UniPoly<F>({F(1), t, F(-6), F(-t), F(1)});
}

FamilyPolynomial p_ncl5(const Rational& n, const Rational& c);
FamilyPolynomial brumer(const Rational& s, const Rational& u);
FamilyPolynomial darmon(const Rational& S, const Rational& T);
FamilyPolynomial shanks_cubic(const Rational& t);
FamilyPolynomial ptilde_cubic(const Rational& u, const Rational& v, const Rational& n);
FamilyPolynomial ptilde_quartic(const Rational& n, const Rational& c);
FamilyPolynomial gras_quartic(const Rational& t);
/// Builds any family from named parameters.
FamilyPolynomial make_family(Family f, const ParamMap& params);

/// x^5 P_{-u,s,5}(s/x) = s^4 B_{s,u}(x), formally in (x, s, u). `p_offset` is
/// added to the constant term of P (negative control).
bool check_brumer_substitution(const Rational& p_offset = Rational(0));
bool check_brumer_substitution(const Rational& s, const Rational& u, const Rational& p_offset = Rational(0));

/// B_{S+3, T+2S+5}(-x) = -D_{S,T}(x), formally in (x, S, T).
bool check_darmon_transform();
bool check_darmon_transform(const Rational& S, const Rational& T);

/// Res_x(P~_{n,c,4}(x), X - (t/2 x^2 - (t^2+32)/(8t))) normalized monic, with
/// (n, c) = ((t^2+32)/(2t^2), (3t^4-1024)/(16t^4)) and n shifted by `n_offset`.
template <class F>
UniPoly<F> gras_resultant(const F& t, const F& n_offset) {
  if (ring_traits<F>::is_zero(t)) throw DomainError("Gras resultant needs t != 0");
  using R = UniPoly<F>;  // polynomials in X
  const F one(1);
  auto div = [](const F& a, const F& b) { return ring_traits<F>::exact_div(a, b); };
  F t2 = F(t * t), t4 = F(t2 * t2);
  F n = F(div(F(t2 + F(32)), F(F(2) * t2)) + n_offset);
  F c = div(F(F(3) * t4 - F(1024)), F(F(16) * t4));
  UniPoly<F> pt = ptilde_quartic_poly(n, c);
  std::vector<R> pc;
  for (const F& a : pt.coeffs()) pc.push_back(R::constant(a));
  // X - t/2 x^2 + (t^2+32)/(8t) as a polynomial in x over Q(t)[X]
  R constant_term = R({div(F(t2 + F(32)), F(F(8) * t)), one});
  UniPoly<R> g({constant_term, R(), R::constant(div(F(-t), F(2)))});
  R res = resultant(UniPoly<R>(pc), g);
  return monic(res);
}

bool gras_resultant_identity(const Rational& n_offset = Rational(0));
bool gras_resultant_identity(const Rational& t, const Rational& n_offset);

/// ptilde_cubic(-t, -1, t+3) = shanks(t) in Q(t)[X].
bool check_shanks_reproduction();
/// disc(shanks(t)) = (t^2+3t+9)^2 in Q(t).
bool check_shanks_discriminant();

struct FrobeniusSample {
  std::vector<std::uint64_t> primes;
  std::vector<std::vector<int>> patterns;
  std::map<std::vector<int>, int> histogram;
};

std::string pattern_label(const std::vector<int>& pattern);

/// Factor-degree patterns of f mod p for the first `prime_budget` primes not
/// dividing lc(f) disc(f) of the primitive integer model.
FrobeniusSample frobenius_patterns(const QPoly& f, int prime_budget);

enum class Certainty { exact, sampled };

struct GaloisReport {
  int degree = 0;
  bool irreducible = false;
  Rational disc;
  bool disc_is_square = false;
  std::string group_label;  // C3 S3 C4 V4 D4 A4 S4 C5 D5 F20 A5 S5 C6 other
  Certainty certainty = Certainty::sampled;
  int primes_used = 0;
  std::map<std::string, int> pattern_histogram;
  bool construction_backed = false;
  std::vector<std::string> notes;
};

constexpr int kDefaultPrimeBudget = 60;
constexpr int kMinPrimeBudget = 20;

GaloisReport galois_group(const QPoly& f, int prime_budget = kDefaultPrimeBudget, bool construction_backed = false);

struct CyclicResult {
  FamilyPolynomial polynomial;
  GaloisReport report;
  NontrivialPointCertificate certificate;
};

/// The fiber polynomial of a certified nontrivial point with its Galois report.
/// Throws DomainError when the certificate is not valid.
CyclicResult cyclic_from_fiber(const ConstructionInput& input, int prime_budget = kDefaultPrimeBudget);

/// Compares an l=5 fiber quintic with P_{n,c,5}, n read off the x^4 coefficient.
/// On a mismatch, retries under x -> x + r for the rational roots r of the
/// first nonzero coefficient difference.
struct FiberMatch {
  bool matched = false;
  Rational n;
  Rational translation;
};
FiberMatch match_p_ncl5(const QPoly& fiber, const Rational& c);

}  // namespace kubert
