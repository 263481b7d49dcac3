#include "doctest.h"

#include <random>

#include "kubert/factor.hpp"
#include "kubert/multipoly.hpp"
#include "kubert/ratfunc.hpp"
#include "kubert/resultant.hpp"

using namespace kubert;

namespace {

QPoly qp(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long a : c) v.emplace_back(a);
  return QPoly(v);
}

FpPoly fpp(std::initializer_list<long> c, std::uint64_t p) {
  std::vector<Fp> v;
  for (long a : c) v.emplace_back(a, p);
  return FpPoly(v);
}

// Sylvester matrix determinant by Gaussian elimination over Q.
Rational sylvester_resultant(const QPoly& f, const QPoly& g) {
  const int m = f.degree(), n = g.degree(), N = m + n;
  std::vector<std::vector<Rational>> M(N, std::vector<Rational>(N, Rational(0)));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) M[i][i + k] = f.coeffs()[m - k];
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) M[n + i][i + k] = g.coeffs()[n - k];
  Rational det(1);
  for (int c = 0; c < N; ++c) {
    int piv = c;
    while (piv < N && sgn(M[piv][c]) == 0) ++piv;
    if (piv == N) return Rational(0);
    if (piv != c) {
      std::swap(M[piv], M[c]);
      det = -det;
    }
    det *= M[c][c];
    for (int r = c + 1; r < N; ++r) {
      Rational f = M[r][c] / M[c][c];
      for (int k = c; k < N; ++k) M[r][k] -= f * M[c][k];
    }
  }
  return det;
}

QPoly random_qpoly(std::mt19937_64& rng, int deg, long range = 9) {
  std::uniform_int_distribution<long> d(-range, range);
  std::vector<Rational> c;
  for (int i = 0; i < deg; ++i) c.push_back(make_rational(d(rng), 1 + std::abs(d(rng)) % 3));
  c.emplace_back(1 + std::abs(d(rng)));
  return QPoly(c);
}

}  // namespace

TEST_CASE("rational basics") {
  CHECK(to_string(parse_rational("6/-4")) == "-3/2");
  CHECK(to_string(parse_rational("0/7")) == "0");
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("x"));
  CHECK(rational_sqrt(make_rational(25, 9)) == make_rational(5, 3));
  CHECK_FALSE(rational_sqrt(Rational(2)).has_value());
  CHECK(rational_sqrt(Rational(121)) == Rational(11));
  CHECK_FALSE(rational_sqrt(Rational(-4)).has_value());
}

TEST_CASE("prime field") {
  Fp a(3, 7), b(5, 7);
  CHECK((a * b).value() == 1);
  CHECK((a / b * b) == a);
  CHECK((-a).value() == 4);
  CHECK(reduce_mod(make_rational(1, 2), 7).value() == 4);
  CHECK_THROWS_AS(reduce_mod(make_rational(1, 7), 7), DomainError);
}

TEST_CASE("polynomial arithmetic") {
  CHECK(gcd(qp({-1, 0, 1}), qp({-1, 1})) == qp({-1, 1}));
  CHECK(qp({1, 1}) * qp({-1, 1}) == qp({-1, 0, 1}));
  CHECK(evaluate(qp({1, -30, 1}), Rational(1)) == Rational(-28));
  CHECK(compose(qp({0, 0, 1}), qp({1, 1})) == qp({1, 2, 1}));
  CHECK(derivative(qp({5, 0, 0, 2})) == qp({0, 0, 6}));
  CHECK(format(qp({1, -2, 0, 1})) == "x^3 - 2*x + 1");
  CHECK_THROWS_AS(divrem(qp({1, 1}), QPoly()), DomainError);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    QPoly f = random_qpoly(rng, 6), g = random_qpoly(rng, 3);
    auto [q, r] = divrem(f, g);
    CHECK(q * g + r == f);
    CHECK(r.degree() < g.degree());
    auto e = xgcd(f, g);
    CHECK(e.s * f + e.t * g == e.g);
  }
}

TEST_CASE("rational functions") {
  QFunc c = QFunc::variable();
  QFunc r = (c * c - QFunc(1)) / (c - QFunc(1));
  CHECK(r == c + QFunc(1));
  CHECK(r.is_polynomial());
  QFunc s = QFunc(1) / (QFunc(2) * c + QFunc(4));
  CHECK(s.den() == qp({2, 1}));
  CHECK(evaluate(s, Rational(0)) == make_rational(1, 4));
  CHECK_THROWS_AS(evaluate(s, Rational(-2)), DomainError);
}

TEST_CASE("resultant and discriminant") {
  CHECK(resultant(qp({1, 0, 1}), qp({-1, 1})) == Rational(2));
  CHECK(discriminant(qp({-1, 0, 1})) == Rational(4));
  CHECK(discriminant(qp({-1, -4, -1, 1})) == Rational(169));
  CHECK(discriminant(qp({-2, 0, 0, 1})) == Rational(-108));
  CHECK_THROWS_AS(discriminant(qp({1, 1})), DomainError);

  // linear case over Q[a, b] modelled as Q(a)[b]: res(x - a, x - b) = b - a
  using R = UniPoly<Rational>;
  UniPoly<R> f({R{Rational(0), Rational(-1)}, R{Rational(1)}});  // x - a
  UniPoly<R> g({R{Rational(-2)}, R{Rational(1)}});                // x - 2
  CHECK(resultant(f, g) == R{Rational(-2), Rational(1)});        // 2 - a, i.e. b - a at b = 2

  std::mt19937_64 rng(5);
  for (int i = 0; i < 40; ++i) {
    QPoly f = random_qpoly(rng, 1 + i % 5), g = random_qpoly(rng, 1 + (i / 5) % 4);
    CHECK(resultant(f, g) == sylvester_resultant(f, g));
    // Z instance agrees with the Q instance on integer inputs
    QPoly common = random_qpoly(rng, 1);
    CHECK(resultant(f * common, g * common) == Rational(0));
  }
}

TEST_CASE("factor mod p") {
  auto f5 = factor_mod_p(fpp({1, 0, 1}, 5));
  REQUIRE(f5.factors.size() == 2);
  CHECK(f5.factors[0].first == fpp({2, 1}, 5));
  CHECK(f5.factors[1].first == fpp({3, 1}, 5));
  CHECK(factor_mod_p(fpp({1, 0, 1}, 3)).factors.size() == 1);
  auto lin = factor_mod_p(qp({0, -1, 0, 0, 0, 1}), 5);
  CHECK(lin.degree_pattern() == std::vector<int>{1, 1, 1, 1, 1});
  CHECK_THROWS_AS(factor_mod_p(qp({1, 0, 1}), 9), DomainError);

  // repeated factors, p-th powers and p = 2
  FpPoly sq = pow(fpp({1, 1}, 3), 3u) * pow(fpp({1, 0, 1}, 3), 2u);
  auto fs = factor_mod_p(sq);
  CHECK(fs.product() == sq);
  CHECK(fs.degree_pattern() == std::vector<int>{1, 1, 1, 2, 2});
  FpPoly two = fpp({1, 1, 0, 0, 0, 0, 0, 1}, 2) * fpp({1, 1, 1}, 2) * fpp({1, 1, 1}, 2);
  auto f2 = factor_mod_p(two);
  CHECK(f2.product() == two);

  std::mt19937_64 rng(3);
  for (std::uint64_t p : {2, 3, 7, 101, 65537}) {
    for (int i = 0; i < 10; ++i) {
      std::uniform_int_distribution<long> d(0, 1000000);
      std::vector<Fp> c;
      for (int k = 0; k < 9; ++k) c.emplace_back(d(rng), p);
      c.emplace_back(1, p);
      FpPoly f(c);
      auto fl = factor_mod_p(f);
      CHECK(fl.product() == f);
      for (const auto& [g, m] : fl.factors) {
        // irreducible: no nontrivial gcd with x^(p^i) - x for 2i <= deg
        FpPoly x = FpPoly::x(Fp(1, p)), h = x;
        for (int k = 1; 2 * k <= g.degree(); ++k) {
          h = pow_mod(h, Integer(static_cast<unsigned long>(p)), g);
          CHECK(gcd(h - x, g).degree() == 0);
        }
      }
    }
  }
}

TEST_CASE("factor over Q") {
  auto f = factor_over_q(qp({-1, 0, 0, 0, 1}));
  REQUIRE(f.factors.size() == 3);
  CHECK(f.product() == qp({-1, 0, 0, 0, 1}));
  CHECK(f.degree_pattern() == std::vector<int>{1, 1, 2});
  CHECK(is_irreducible(qp({-1, -4, -1, 1})));
  QPoly a = qp({1, 1, 1}), b = qp({-2, 0, 0, 1});
  auto ab = factor_over_q(a * b);
  REQUIRE(ab.factors.size() == 2);
  CHECK(ab.factors[0].first == a);
  CHECK(ab.factors[1].first == b);

  // Swinnerton-Dyer type: x^4 - 10x^2 + 1 splits into quadratics mod every prime
  CHECK(is_irreducible(qp({1, 0, -10, 0, 1})));
  // non-monic, repeated and content
  QPoly g = QPoly::constant(make_rational(-3, 7)) * pow(qp({1, 3}), 2u) * qp({-5, 0, 2}) * qp({1, -1, 0, 4});
  auto fg = factor_over_q(g);
  CHECK(fg.product() == g);
  CHECK(fg.degree_pattern() == std::vector<int>{1, 1, 2, 3});

  std::mt19937_64 rng(17);
  for (int i = 0; i < 25; ++i) {
    QPoly p1 = random_qpoly(rng, 1 + i % 4), p2 = random_qpoly(rng, 2 + i % 3), p3 = random_qpoly(rng, 1 + i % 2);
    QPoly prod = p1 * p2 * p3;
    auto fl = factor_over_q(prod);
    CHECK(fl.product() == prod);
    CHECK(fl.factors.size() >= 1);
    for (const auto& [h, m] : fl.factors) {
      if (h.degree() >= 2 && h.degree() <= 3) CHECK(rational_roots(h).empty());
    }
  }
}

TEST_CASE("rational roots") {
  CHECK(rational_roots(qp({-1, 0, 1})) == std::vector<Rational>{Rational(-1), Rational(1)});
  CHECK(rational_roots(qp({1, 0, 1})).empty());
  QPoly f = QPoly{make_rational(-2, 3), Rational(1)} * qp({1, 1, 1});
  CHECK(rational_roots(f) == std::vector<Rational>{make_rational(2, 3)});
  QPoly g = pow(qp({3, 7}), 3u) * qp({0, 0, 1}) * qp({-5, 1});
  CHECK(rational_roots(g) ==
        std::vector<Rational>{make_rational(-3, 7), make_rational(-3, 7), make_rational(-3, 7), Rational(0),
                              Rational(0), Rational(5)});
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> d(-500, 500);
  for (int i = 0; i < 30; ++i) {
    std::vector<Rational> roots;
    QPoly p = random_qpoly(rng, 2);
    p = p * p + QPoly::constant(Rational(1));  // no real roots
    for (int k = 0; k < 3; ++k) {
      roots.push_back(make_rational(d(rng), 1 + std::abs(d(rng))));
      p = p * QPoly{Rational(-roots.back()), Rational(1)};
    }
    std::sort(roots.begin(), roots.end());
    CHECK(rational_roots(p) == roots);
  }
}

TEST_CASE("identity check") {
  std::vector<std::string> v{"c"};
  MultiPoly c = MultiPoly::variable(v, "c"), one = MultiPoly::constant(v, Rational(1));
  MultiPoly lhs = (c + one).pow(2), rhs = c * c + MultiPoly::constant(v, Rational(2)) * c + one;
  CHECK(identity_check(lhs, rhs, {IdentityMode::exact}));
  CHECK(identity_check(lhs, rhs, {IdentityMode::sampled}));
  CHECK_FALSE(identity_check(c * c, c * c + one, {IdentityMode::exact}));
  CHECK_FALSE(identity_check(c * c, c * c + one, {IdentityMode::sampled}));

  std::vector<std::string> vars{"a", "b", "c"};
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> e(0, 3), k(-3, 3);
  auto random_mp = [&] {
    MultiPoly p(vars);
    for (int t = 0; t < 4; ++t) p.add_term({e(rng), e(rng), e(rng)}, Rational(k(rng)));
    return p;
  };
  for (int i = 0; i < 100; ++i) {
    MultiPoly a = random_mp(), b = random_mp();
    MultiPoly r = (i % 2 == 0) ? a * b : random_mp();
    MultiPoly l = (i % 2 == 0) ? b * a : a * b;
    CHECK(identity_check(l, r, {IdentityMode::exact}) ==
          identity_check(l, r, {IdentityMode::sampled, 7, 50}));
  }
}
