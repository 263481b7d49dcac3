#include "kubert/factor.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace kubert {

namespace {

// ---------------------------------------------------------------- Z[x] helpers

Integer mod_pos(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

Integer mod_sym(const Integer& a, const Integer& m) {
  Integer r = mod_pos(a, m);
  if (2 * r > m) r -= m;
  return r;
}

ZPoly zmod(const ZPoly& f, const Integer& m) {
  std::vector<Integer> c;
  c.reserve(f.coeffs().size());
  for (const auto& a : f.coeffs()) c.push_back(mod_pos(a, m));
  return ZPoly(std::move(c));
}

ZPoly zmod_sym(const ZPoly& f, const Integer& m) {
  std::vector<Integer> c;
  c.reserve(f.coeffs().size());
  for (const auto& a : f.coeffs()) c.push_back(mod_sym(a, m));
  return ZPoly(std::move(c));
}

// Division by a monic polynomial modulo m.
std::pair<ZPoly, ZPoly> zdivrem_monic(const ZPoly& f, const ZPoly& h, const Integer& m) {
  if (f.degree() < h.degree()) return {ZPoly(), zmod(f, m)};
  std::vector<Integer> r = zmod(f, m).coeffs();
  r.resize(f.degree() + 1);
  const int dh = h.degree();
  std::vector<Integer> q(f.degree() - dh + 1);
  for (int k = f.degree() - dh; k >= 0; --k) {
    Integer t = mod_pos(r[k + dh], m);
    q[k] = t;
    if (t == 0) continue;
    for (int j = 0; j <= dh; ++j) r[k + j] = mod_pos(r[k + j] - t * h.coeffs()[j], m);
  }
  r.resize(dh);
  return {ZPoly(std::move(q)), ZPoly(std::move(r))};
}

FpPoly zpoly_mod_p(const ZPoly& f, std::uint64_t p) {
  return map_coeffs<Fp>(f, [p](const Integer& a) {
    return Fp(mod_pos(a, Integer(static_cast<unsigned long>(p))).get_si(), p);
  });
}

ZPoly fppoly_to_z(const FpPoly& f) {
  return map_coeffs<Integer>(f, [](const Fp& a) { return Integer(static_cast<unsigned long>(a.value())); });
}

Integer max_abs_coeff(const ZPoly& f) {
  Integer m = 0;
  for (const auto& a : f.coeffs()) m = std::max<Integer>(m, abs(a));
  return m;
}

const std::vector<std::uint64_t>& small_primes() {
  static const std::vector<std::uint64_t> primes = [] {
    std::vector<std::uint64_t> v;
    for (std::uint64_t n = 2; v.size() < 2000; ++n)
      if (is_prime(n)) v.push_back(n);
    return v;
  }();
  return primes;
}

// -------------------------------------------------------------- F_p factoring

FpPoly pth_root(const FpPoly& f, std::uint64_t p) {
  std::vector<Fp> c;
  for (int k = 0; k <= f.degree(); k += static_cast<int>(p)) c.push_back(f.coeffs()[k]);
  return FpPoly(std::move(c));
}

void squarefree_mod_p(const FpPoly& f, std::uint64_t p, int scale, std::vector<std::pair<FpPoly, int>>& out) {
  if (f.degree() < 1) return;
  FpPoly c = gcd(f, derivative(f));
  FpPoly w = exact_quotient(f, c);
  int i = 1;
  while (w.degree() > 0) {
    FpPoly y = gcd(w, c);
    FpPoly fac = exact_quotient(w, y);
    if (fac.degree() > 0) out.emplace_back(monic(fac), i * scale);
    w = y;
    c = exact_quotient(c, y);
    ++i;
  }
  if (c.degree() > 0) squarefree_mod_p(pth_root(c, p), p, scale * static_cast<int>(p), out);
}

std::vector<std::pair<FpPoly, int>> distinct_degree(FpPoly f, std::uint64_t p) {
  std::vector<std::pair<FpPoly, int>> out;
  const Fp one(1, p);
  const FpPoly x = FpPoly::x(one);
  FpPoly h = x;
  for (int i = 1; f.degree() >= 2 * i; ++i) {
    h = pow_mod(h, Integer(static_cast<unsigned long>(p)), f);
    FpPoly g = gcd(h - x, f);
    if (g.degree() > 0) {
      out.emplace_back(g, i);
      f = exact_quotient(f, g);
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(monic(f), f.degree());
  return out;
}

void equal_degree(const FpPoly& g, int d, std::uint64_t p, std::mt19937_64& rng, std::vector<FpPoly>& out) {
  if (g.degree() == d) {
    out.push_back(monic(g));
    return;
  }
  const Fp one(1, p);
  std::uniform_int_distribution<std::uint64_t> coin(0, p - 1);
  Integer pd = 1;
  for (int i = 0; i < d; ++i) pd *= static_cast<unsigned long>(p);
  while (true) {
    std::vector<Fp> c(g.degree());
    for (auto& v : c) v = Fp(static_cast<std::int64_t>(coin(rng)), p);
    FpPoly a(std::move(c));
    if (a.degree() < 1) continue;
    FpPoly b;
    if (p == 2) {
      // trace map a + a^2 + ... + a^(2^(d-1))
      FpPoly term = a % g;
      b = term;
      for (int i = 1; i < d; ++i) {
        term = (term * term) % g;
        b = b + term;
      }
    } else {
      b = pow_mod(a, Integer((pd - 1) / 2), g) - FpPoly::constant(one);
    }
    FpPoly h = gcd(b, g);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      equal_degree(h, d, p, rng, out);
      equal_degree(exact_quotient(g, h), d, p, rng, out);
      return;
    }
  }
}

bool poly_less(const FpPoly& a, const FpPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int k = a.degree(); k >= 0; --k)
    if (a.coeffs()[k].value() != b.coeffs()[k].value()) return a.coeffs()[k].value() < b.coeffs()[k].value();
  return false;
}

bool qpoly_less(const QPoly& a, const QPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int k = a.degree(); k >= 0; --k)
    if (a.coeffs()[k] != b.coeffs()[k]) return a.coeffs()[k] < b.coeffs()[k];
  return false;
}

// ------------------------------------------------------------------ Hensel

struct HenselState {
  ZPoly g, h, s, t;
};

// One quadratic Hensel step: f = g h mod m, s g + t h = 1 mod m, h monic  ->  same mod m^2.
HenselState hensel_step(const ZPoly& f, const HenselState& in, const Integer& m) {
  const Integer m2 = m * m;
  const ZPoly& g = in.g;
  const ZPoly& h = in.h;
  const ZPoly& s = in.s;
  const ZPoly& t = in.t;
  ZPoly e = zmod(f - g * h, m2);
  auto [q, r] = zdivrem_monic(zmod(s * e, m2), h, m2);
  ZPoly g1 = zmod(g + t * e + q * g, m2);
  ZPoly h1 = zmod(h + r, m2);
  ZPoly b = zmod(s * g1 + t * h1 - ZPoly::constant(Integer(1)), m2);
  auto [c, d] = zdivrem_monic(zmod(s * b, m2), h1, m2);
  ZPoly s1 = zmod(s - d, m2);
  ZPoly t1 = zmod(t - t * b - c * g1, m2);
  return {g1, h1, s1, t1};
}

// Lifts f = lc(f) * prod(factors) from mod p to mod `target` (a power p^(2^j)).
std::vector<ZPoly> multifactor_lift(const ZPoly& f, const std::vector<FpPoly>& factors, std::uint64_t p,
                                    int steps) {
  std::vector<ZPoly> lifted;
  ZPoly current = f;  // known modulo the final modulus
  Integer final_mod(static_cast<unsigned long>(p));
  for (int i = 0; i < steps; ++i) final_mod *= final_mod;
  for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
    const Fp lcp = zpoly_mod_p(current, p).lc();
    FpPoly gp = lcp * factors[i];
    FpPoly hp = FpPoly::constant(Fp(1, p));
    for (std::size_t j = i + 1; j < factors.size(); ++j) hp = hp * factors[j];
    auto eg = xgcd(gp, hp);  // s gp + t hp = 1
    HenselState st{fppoly_to_z(gp), fppoly_to_z(hp), fppoly_to_z(eg.s), fppoly_to_z(eg.t)};
    Integer m(static_cast<unsigned long>(p));
    for (int k = 0; k < steps; ++k) {
      st = hensel_step(current, st, m);
      m *= m;
    }
    // normalize g to monic: divide by its leading coefficient mod m
    Integer inv;
    mpz_invert(inv.get_mpz_t(), st.g.lc().get_mpz_t(), final_mod.get_mpz_t());
    lifted.push_back(zmod(ZPoly::constant(inv) * st.g, final_mod));
    current = st.h;
  }
  lifted.push_back(zmod(current, final_mod));
  return lifted;
}

ZPoly primitive_part(const ZPoly& f) {
  Integer g = 0;
  for (const auto& a : f.coeffs()) g = gcd(g, a);
  if (g == 0) return f;
  if (f.lc() < 0) g = -g;
  return map_coeffs<Integer>(f, [&](const Integer& a) { return Integer(a / g); });
}

bool divides_over_z(const ZPoly& g, const ZPoly& f, ZPoly& quotient) {
  auto [q, r] = divrem(to_qpoly(f), to_qpoly(g));
  if (!r.is_zero()) return false;
  for (const auto& a : q.coeffs())
    if (a.get_den() != 1) return false;
  quotient = map_coeffs<Integer>(q, [](const Rational& a) { return a.get_num(); });
  return true;
}

// Irreducible factors (primitive, positive lc) of a squarefree primitive G.
std::vector<ZPoly> zassenhaus(const ZPoly& G) {
  const int n = G.degree();
  if (n <= 1) return {G};
  if (n > 16) throw DomainError("factor_over_q: degree above 16 is outside the supported range");

  // pick the good prime with the fewest modular factors among the first few
  std::uint64_t best_p = 0;
  std::vector<FpPoly> best;
  int good_seen = 0;
  for (std::uint64_t p : small_primes()) {
    if (p == 2) continue;
    if (mod_pos(G.lc(), Integer(static_cast<unsigned long>(p))) == 0) continue;
    FpPoly gp = zpoly_mod_p(G, p);
    if (gcd(gp, derivative(gp)).degree() > 0) continue;
    auto fl = factor_mod_p(gp);
    std::vector<FpPoly> facs;
    for (const auto& [g, m] : fl.factors) facs.push_back(g);
    if (best_p == 0 || facs.size() < best.size()) {
      best_p = p;
      best = facs;
    }
    if (best.size() == 1 || ++good_seen == 5) break;
  }
  if (best.size() <= 1) return {G};

  // coefficient bound for lc(G) * (any factor)
  Integer norm2sq = 0;
  for (const auto& a : G.coeffs()) norm2sq += a * a;
  Integer norm2;
  mpz_sqrt(norm2.get_mpz_t(), norm2sq.get_mpz_t());
  norm2 += 1;
  Integer bound = abs(G.lc()) * norm2;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(n));
  int steps = 0;
  Integer m(static_cast<unsigned long>(best_p));
  while (m <= 2 * bound) {
    m *= m;
    ++steps;
  }

  std::vector<ZPoly> lifted = multifactor_lift(G, best, best_p, steps);

  std::vector<ZPoly> result;
  std::vector<std::size_t> remaining(lifted.size());
  for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
  ZPoly rest = G;
  std::size_t size = 1;
  while (2 * size <= remaining.size()) {
    bool found = false;
    std::vector<std::size_t> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      ZPoly cand = ZPoly::constant(rest.lc());
      for (std::size_t i : pick) cand = zmod(cand * lifted[remaining[i]], m);
      ZPoly g = primitive_part(zmod_sym(cand, m));
      ZPoly q;
      if (g.degree() > 0 && divides_over_z(g, rest, q)) {
        result.push_back(g);
        rest = primitive_part(q);
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < remaining.size(); ++i)
          if (std::find(pick.begin(), pick.end(), i) == pick.end()) keep.push_back(remaining[i]);
        remaining = keep;
        found = true;
        break;
      }
      // next combination
      int k = static_cast<int>(size) - 1;
      while (k >= 0 && pick[k] == remaining.size() - size + k) --k;
      if (k < 0) break;
      ++pick[k];
      for (std::size_t j = k + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (!found) ++size;
  }
  if (rest.degree() > 0) result.push_back(rest);
  return result;
}

}  // namespace

template <class F>
std::vector<int> FactorList<F>::degree_pattern() const {
  std::vector<int> d;
  for (const auto& [g, m] : factors)
    for (int i = 0; i < m; ++i) d.push_back(g.degree());
  std::sort(d.begin(), d.end());
  return d;
}
template struct FactorList<Fp>;
template struct FactorList<Rational>;

std::pair<Rational, ZPoly> primitive_integer_part(const QPoly& f) {
  if (f.is_zero()) return {Rational(0), ZPoly()};
  Integer den_lcm = 1;
  for (const auto& a : f.coeffs()) den_lcm = lcm(den_lcm, Integer(a.get_den()));
  std::vector<Integer> c;
  Integer g = 0;
  for (const auto& a : f.coeffs()) {
    Integer v = a.get_num() * (den_lcm / a.get_den());
    g = gcd(g, v);
    c.push_back(v);
  }
  if (f.lc() < 0) g = -g;
  for (auto& v : c) v /= g;
  return {make_rational(g, den_lcm), ZPoly(std::move(c))};
}

QPoly to_qpoly(const ZPoly& f) {
  return map_coeffs<Rational>(f, [](const Integer& a) { return Rational(a); });
}

FpPoly reduce_mod(const QPoly& f, std::uint64_t p) {
  return map_coeffs<Fp>(f, [p](const Rational& a) { return kubert::reduce_mod(a, p); });
}

std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& f) {
  std::vector<std::pair<QPoly, int>> out;
  if (f.degree() < 1) return out;
  QPoly a = monic(f);
  QPoly b = derivative(a);
  QPoly c = gcd(a, b);
  QPoly w = exact_quotient(a, c);
  int i = 1;
  while (w.degree() > 0) {
    QPoly y = gcd(w, c);
    QPoly z = exact_quotient(w, y);
    if (z.degree() > 0) out.emplace_back(monic(z), i);
    w = y;
    c = exact_quotient(c, y);
    ++i;
  }
  return out;
}

bool is_squarefree(const QPoly& f) { return f.degree() < 1 || gcd(f, derivative(f)).degree() == 0; }

FactorList<Fp> factor_mod_p(const FpPoly& f) {
  if (f.is_zero()) throw DomainError("factor_mod_p: zero polynomial");
  const std::uint64_t p = f.lc().modulus();
  if (!is_prime(p)) throw DomainError("factor_mod_p: modulus " + std::to_string(p) + " is not prime");
  FactorList<Fp> out{f.lc(), {}};
  if (f.degree() == 0) return out;
  std::vector<std::pair<FpPoly, int>> sqf;
  squarefree_mod_p(monic(f), p, 1, sqf);
  std::mt19937_64 rng(0x6b75626572747431ULL ^ p);
  for (const auto& [part, mult] : sqf) {
    for (const auto& [block, d] : distinct_degree(part, p)) {
      std::vector<FpPoly> irr;
      equal_degree(block, d, p, rng, irr);
      for (auto& g : irr) out.factors.emplace_back(std::move(g), mult);
    }
  }
  // merge equal factors from different squarefree layers (cannot happen) and sort
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
  return out;
}

FactorList<Fp> factor_mod_p(const QPoly& f, std::uint64_t p) {
  if (!is_prime(p)) throw DomainError("factor_mod_p: modulus " + std::to_string(p) + " is not prime");
  FpPoly fp = reduce_mod(f, p);
  if (fp.degree() != f.degree()) throw DomainError("factor_mod_p: p divides the leading coefficient");
  return factor_mod_p(fp);
}

FactorList<Rational> factor_over_q(const QPoly& f) {
  FactorList<Rational> out{f.is_zero() ? Rational(0) : f.lc(), {}};
  if (f.degree() < 1) return out;
  for (const auto& [part, mult] : squarefree_decomposition(f)) {
    auto [content, G] = primitive_integer_part(part);
    for (const ZPoly& g : zassenhaus(G)) out.factors.emplace_back(monic(to_qpoly(g)), mult);
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return qpoly_less(a.first, b.first); });
  return out;
}

bool is_irreducible(const QPoly& f) {
  if (f.degree() < 1) return false;
  auto fl = factor_over_q(f);
  return fl.factors.size() == 1 && fl.factors[0].second == 1;
}

std::vector<Rational> rational_roots(const QPoly& f) {
  std::vector<Rational> roots;
  if (f.degree() < 1) return roots;
  QPoly work = monic(f);
  while (sgn(work.coeff(0)) == 0) {
    roots.push_back(Rational(0));
    work = exact_quotient(work, QPoly::x());
  }
  if (work.degree() >= 1) {
    QPoly sq = exact_quotient(work, gcd(work, derivative(work)));
    auto [content, G] = primitive_integer_part(sq);
    const int n = G.degree();
    const Integer a = G.lc();
    // g(y) = a^(n-1) G(y/a) is monic with integer coefficients; roots y = a x
    std::vector<Integer> gc(n + 1);
    Integer apow = 1;
    for (int k = n - 1; k >= 0; --k) {
      gc[k] = G.coeffs()[k] * apow;
      apow *= a;
    }
    gc[n] = 1;
    ZPoly g(gc);
    const Integer bound = 1 + max_abs_coeff(g);
    auto eval = [&](const Integer& y) {
      Integer acc = 0;
      for (int k = n; k >= 0; --k) acc = acc * y + g.coeffs()[k];
      return acc;
    };
    auto eval_d = [&](const Integer& y) {
      Integer acc = 0;
      for (int k = n; k >= 1; --k) acc = acc * y + g.coeffs()[k] * k;
      return acc;
    };
    for (std::uint64_t p : small_primes()) {
      if (p < 3) continue;
      FpPoly gp = zpoly_mod_p(g, p);
      if (gcd(gp, derivative(gp)).degree() > 0) continue;
      const Integer pz(static_cast<unsigned long>(p));
      for (std::uint64_t v = 0; v < p; ++v) {
        Integer r(static_cast<unsigned long>(v));
        if (mod_pos(eval(r), pz) != 0) continue;
        Integer m = pz;
        while (m <= 2 * bound) {
          Integer m2 = m * m, inv, d = mod_pos(eval_d(r), m2);
          mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), m2.get_mpz_t());
          r = mod_pos(r - eval(r) * inv, m2);
          m = m2;
        }
        r = mod_sym(r, m);
        if (eval(r) == 0) roots.push_back(make_rational(r, a));
      }
      break;
    }
  }
  // multiplicities from the original polynomial
  std::vector<Rational> distinct = roots;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<Rational> out;
  for (const auto& r : distinct) {
    QPoly lin{Rational(-r), Rational(1)};
    QPoly rest = monic(f);
    while (rest.degree() >= 1) {
      auto [q, rem] = divrem(rest, lin);
      if (!rem.is_zero()) break;
      out.push_back(r);
      rest = q;
    }
  }
  return out;
}

}  // namespace kubert
