#include "doctest.h"

#include <algorithm>
#include <random>

#include "kubert/curve.hpp"

using namespace kubert;

namespace {

using QCurve = WeierstrassCurve<Rational>;
using QPoint = CurvePoint<Rational>;

// Rational points with small-height x found by brute force.
std::vector<QPoint> small_points(const QCurve& E, int height) {
  std::vector<QPoint> pts;
  for (int q = 1; q <= height; ++q) {
    for (int p = -height; p <= height; ++p) {
      Rational x = make_rational(p, q);
      if (x.get_den() != q) continue;
      Rational lin = E.a1 * x + E.a3;
      Rational rhs = x * x * x + E.a2 * x * x + E.a4 * x + E.a6;
      auto r = rational_sqrt(Rational(lin * lin + 4 * rhs));
      if (!r) continue;
      pts.push_back(QPoint::affine(x, (Rational(-lin) + *r) / 2));
    }
  }
  return pts;
}

}  // namespace

TEST_CASE("group law basics") {
  auto fam = kubert_curve<Rational>(5, {Rational(1)});
  const auto& E = fam.curve;
  CHECK(add(E, fam.A, QPoint::infinity()) == fam.A);
  CHECK(add(E, fam.A, neg(E, fam.A)).inf);
  CHECK(scalar_mul(E, 5, fam.A).inf);
  CHECK(scalar_mul(E, -2, fam.A) == neg(E, scalar_mul(E, 2, fam.A)));
  CHECK(order_of_point(E, QPoint::infinity(), 1) == 1);
  CHECK_FALSE(is_infinite_order(E, fam.A));
  CHECK_FALSE(is_infinite_order(E, QPoint::infinity()));
  CHECK_THROWS_AS(add(E, QPoint::affine(Rational(1), Rational(2)), fam.A), DomainError);
}

TEST_CASE("level examples") {
  auto e5 = kubert_curve<Rational>(5, {Rational(1)});
  CHECK(e5.curve.a1 == 0);
  CHECK(e5.curve.a2 == -1);
  CHECK(e5.curve.a3 == -1);
  auto e3 = kubert_curve<Rational>(3, {Rational(0), Rational(6)});
  CHECK(scalar_mul(e3.curve, 2, e3.A) == QPoint::affine(Rational(0), Rational(-6)));
  CHECK(order_of_point(e3.curve, e3.A, 12) == 3);
  auto e4 = kubert_curve<Rational>(4, {make_rational(1, 3)});
  CHECK(order_of_point(e4.curve, e4.A, 12) == 4);
  auto e6 = kubert_curve<Rational>(6, {make_rational(4, 7)});
  CHECK(order_of_point(e6.curve, e6.A, 12) == 6);

  CHECK_THROWS_AS(kubert_curve<Rational>(3, {Rational(0), Rational(0)}), DomainError);
  CHECK_THROWS_AS(kubert_curve<Rational>(5, {Rational(0)}), DomainError);
  CHECK_THROWS_AS(kubert_curve<Rational>(11, {Rational(2)}), DomainError);
  CHECK_THROWS_AS(kubert_curve<Rational>(5, {Rational(2), Rational(3)}), DomainError);
  CHECK_THROWS_AS(kubert_curve<Rational>(8, {Rational(0)}), DomainError);
}

TEST_CASE("every level has (0,0) of exact order l") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long> num(-40, 40), den(1, 12);
  for (int l : kubert_levels()) {
    int good = 0, tries = 0;
    while (good < 20 && tries < 200) {
      ++tries;
      std::vector<Rational> params{make_rational(num(rng), den(rng))};
      if (l == 3) params.push_back(make_rational(num(rng), den(rng)));
      try {
        auto fam = kubert_curve(l, params);
        CHECK(order_of_point(fam.curve, fam.A, 16) == l);
        ++good;
      } catch (const DomainError&) {
      }
    }
    CHECK(good == 20);
  }
}

TEST_CASE("symbolic families over Q(c)") {
  const QFunc c = QFunc::variable();
  for (int l : kubert_levels()) {
    std::vector<QFunc> params{c};
    if (l == 3) params = {c, QFunc(1)};
    auto fam = kubert_curve(l, params);
    CHECK(order_of_point(fam.curve, fam.A, 16) == l);
  }
}

TEST_CASE("b-form") {
  auto e3 = kubert_curve<Rational>(3, {Rational(0), Rational(6)});
  auto bf = e3.curve.b_form();
  CHECK(bf.b2 == 0);
  CHECK(bf.b4 == 0);
  CHECK(bf.b6 == 36);
  CHECK(bf.b8 * 4 == bf.b2 * bf.b6 - bf.b4 * bf.b4);
  auto [x, yb] = b_point(e3.curve, e3.A);
  CHECK(yb == 6);
  CHECK(from_b_point(e3.curve, x, yb) == e3.A);

  const QFunc c = QFunc::variable();
  auto fam = kubert_curve<QFunc>(7, {c});
  auto bq = fam.curve.b_form();
  CHECK(QFunc(4) * bq.b8 == bq.b2 * bq.b6 - bq.b4 * bq.b4);
  auto P = scalar_mul(fam.curve, 3, fam.A);
  auto [px, pyb] = b_point(fam.curve, P);
  CHECK(pyb * pyb == evaluate(bq.cubic(), px));
  CHECK(from_b_point(fam.curve, px, pyb) == P);
}

TEST_CASE("associativity on rational points") {
  auto fam = kubert_curve<Rational>(4, {make_rational(-1, 3)});
  const auto& E = fam.curve;
  auto pts = small_points(E, 25);
  CHECK(std::find(pts.begin(), pts.end(), QPoint::affine(make_rational(2, 3), make_rational(1, 3))) != pts.end());
  std::vector<QPoint> gens;
  for (const auto& p : pts)
    if (is_infinite_order(E, p)) gens.push_back(p);
  REQUIRE(!gens.empty());
  std::vector<QPoint> pool;
  for (int i = -3; i <= 3; ++i)
    for (int j = 0; j < 4; ++j) pool.push_back(add(E, scalar_mul(E, i, gens[0]), scalar_mul(E, j, fam.A)));
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int k = 0; k < 200; ++k) {
    const auto &P = pool[pick(rng)], &Q = pool[pick(rng)], &R = pool[pick(rng)];
    CHECK(add(E, add(E, P, Q), R) == add(E, P, add(E, Q, R)));
    CHECK(add(E, P, Q) == add(E, Q, P));
    CHECK(E.contains(add(E, P, Q)));
  }
}

TEST_CASE("the l=5 row-1 z=1 quotient point is 5-torsion") {
  // b-form y^2 = 4x^3 + 32x^2 + 44x - 127 via a long model with a1 = 0, a3 = 0
  QCurve F(Rational(0), Rational(8), Rational(0), Rational(11), make_rational(-127, 4));
  auto P = from_b_point(F, Rational(2), Rational(11));
  CHECK(F.contains(P));
  CHECK(order_of_point(F, P, 12) == 5);
  CHECK_FALSE(is_infinite_order(F, P));
  CHECK(scalar_mul(F, 2, P).x == 13);
}

TEST_CASE("small-height fixtures of infinite order") {
  QCurve F3(Rational(0), Rational(0), Rational(0), Rational(0), Rational(-243));
  CHECK(is_infinite_order(F3, from_b_point(F3, Rational(7), Rational(20))));
  auto fam = kubert_curve<Rational>(4, {make_rational(-1, 3)});
  CHECK(is_infinite_order(fam.curve, QPoint::affine(make_rational(2, 3), make_rational(1, 3))));
}
