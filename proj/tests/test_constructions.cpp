#include "doctest.h"

#include <algorithm>
#include <random>

#include "kubert/constructions.hpp"

using namespace kubert;

namespace {
Rational r(long n, long d = 1) { return make_rational(n, d); }
}  // namespace

TEST_CASE("l=5 rows") {
  auto p = construct_l5(1, {{"z", r(1)}});
  CHECK(p.curve_params.at("c") == -1);
  CHECK(p.x == 2);
  CHECK(p.y_b == 11);
  CHECK(p.model == QPoly({r(-127), r(44), r(32), r(4)}));
  CHECK(evaluate(p.model, p.x) == 121);

  auto printed = construct_l5(1, {{"z", r(1)}}, true);
  CHECK(printed.curve_params.at("c") == r(-1, 2));
  CHECK(printed.x == r(1, 2));  // (5 - 3z^2)/4
  CHECK(evaluate(printed.model, printed.x) == r(-361, 16));
  CHECK(printed.note.has_value());

  auto row2 = construct_l5(2, {{"z", r(0)}});
  CHECK(row2.curve_params.at("c") == 18);
  CHECK(row2.x == r(-345, 4));
  CHECK(row2.y_b == 0);
  for (long z : {1L, 2L, -3L}) {
    auto q = construct_l5(2, {{"z", r(z)}});
    CHECK(q.x == -64 * z * z * z * z - 148 * z * z - r(345, 4));
    CHECK(q.y_b * q.y_b == evaluate(q.model, q.x));
  }

  std::mt19937_64 rng(6);
  std::uniform_int_distribution<long> d(-20, 20);
  for (int i = 0; i < 25; ++i) {
    Rational t = r(d(rng), 1 + std::abs(d(rng))), m = r(d(rng), 1 + std::abs(d(rng)));
    try {
      auto q = construct_l5(3, {{"t", t}, {"m", m}});
      CHECK_FALSE(q.note.has_value());
      CHECK(q.y_b * q.y_b == evaluate(q.model, q.x));
      Rational t2 = t * t, c = q.curve_params.at("c");
      CHECK(c * (t2 * t2 * t2 + 8 * t2 * t2 + 21 * t2 + 16 * m * m + 18) ==
            11 * t2 * t2 * t2 + 33 * t2 * t2 - 8 * m * t2 * t + 21 * t2 + 8 * m * t - 1);
    } catch (const DegenerateInput&) {
    }
  }
  CHECK_THROWS_AS(construct_l5(4, {{"z", r(1)}}), DomainError);
  CHECK_THROWS_AS(construct_l5(1, {{"t", r(1)}}), DomainError);
}

TEST_CASE("l=3, l=4, l=6 constructions") {
  auto p3 = construct_l3(r(0), r(1), r(5));
  CHECK(p3.curve_params.at("a3") == 6);
  CHECK(p3.x == 7);
  CHECK(p3.y_b == 20);
  CHECK(evaluate(p3.model, p3.x) == 400);
  auto deg3 = construct_l3(r(0), r(1), r(3));
  CHECK(deg3.curve_params.at("a3") == 2);
  CHECK(deg3.y_b == 0);
  CHECK_THROWS_AS(construct_l3(r(2), r(1), r(3)), DegenerateInput);  // z = u1 a1 + 1
  CHECK_THROWS_AS(construct_l3(r(2), r(0), r(3)), DomainError);

  auto p4 = construct_l4(r(1), r(1));
  CHECK(p4.curve_params.at("c") == r(1, 3));
  CHECK(p4.x == r(2, 3));
  CHECK(p4.y_b == r(5, 3));
  CHECK(evaluate(p4.model, p4.x) == r(25, 9));
  auto deg4 = construct_l4(r(0), r(3));
  CHECK(deg4.x == -deg4.curve_params.at("c"));
  CHECK(deg4.y_b == 0);
  CHECK_THROWS_AS(construct_l4(r(1), r(-2)), DomainError);

  auto p6 = construct_l6(r(1), r(16));
  CHECK(p6.curve_params.at("c") == r(4, 7));
  CHECK(p6.x == r(624, 49));
  CHECK(p6.y_b == r(29584, 343));
  CHECK(4 * p6.x - (19 * r(16, 49) + 14 * r(4, 7) - 1) == r(43 * 43, 49));
  auto deg6 = construct_l6(r(0), r(5));
  CHECK(deg6.y_b == 0);
  CHECK_THROWS_AS(construct_l6(r(1), r(12)), DomainError);
}

TEST_CASE("defining identities") {
  for (int l : {3, 4, 5, 6}) CHECK(verify_defining_identity(l));
  auto [lhs, rhs] = defining_identity(5);
  CHECK(identity_check(lhs, rhs, {IdentityMode::sampled, 3}));
  MultiPoly bumped = rhs + MultiPoly::constant(rhs.vars(), Rational(1));
  CHECK_FALSE(identity_check(lhs, bumped, {IdentityMode::exact}));
  CHECK_FALSE(identity_check(lhs, bumped, {IdentityMode::sampled, 3}));
  CHECK_THROWS_AS(defining_identity(7), DomainError);
}

TEST_CASE("certificates") {
  ConstructionInput l5{5, 1, {{"z", r(1)}}, false};
  auto c5 = certify(l5);
  CHECK(c5.model_matches);
  CHECK(c5.on_curve);
  CHECK(c5.nontrivial);
  CHECK(c5.torsion_order == 5);
  CHECK_FALSE(c5.valid());
  CHECK(c5.fiber.degree() == 5);
  CHECK(is_irreducible(c5.fiber));

  auto c3 = certify({3, 0, {{"a1", r(0)}, {"u1", r(1)}, {"z", r(5)}}, false});
  CHECK(c3.model_matches);
  CHECK(c3.infinite_order);
  // (7, 20) is the image of (-2, -2) on y^2 + 6y = x^3
  CHECK_FALSE(c3.nontrivial);
  REQUIRE(c3.preimage.has_value());
  CHECK(*c3.preimage == CurvePoint<Rational>::affine(r(-2), r(-2)));
  CHECK(*c3.excluded_reason == "point is the image of a rational point");
  // the fiber over x_{a1,a3,3} always splits: roots (a1 u1 + 1 +- z)/(2 u1^2) and u1 a3
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> d(-9, 9);
  for (int i = 0; i < 15; ++i) {
    Rational a1 = r(d(rng), 1 + std::abs(d(rng))), u1 = r(1 + std::abs(d(rng)), 1 + std::abs(d(rng)));
    Rational z = r(d(rng), 1 + std::abs(d(rng)));
    auto cb = certify({3, 0, {{"a1", a1}, {"u1", u1}, {"z", z}}, false});
    if (!cb.on_curve) continue;
    CHECK_FALSE(cb.nontrivial);
    auto roots = rational_roots(cb.fiber);
    CHECK(roots.size() == 3);
    Rational s = a1 * u1 + 1;
    CHECK(std::find(roots.begin(), roots.end(), Rational((s + z) / (2 * u1 * u1))) != roots.end());
    CHECK(std::find(roots.begin(), roots.end(), Rational(u1 * cb.curve_params.at("a3"))) != roots.end());
  }

  auto c6 = certify({6, 0, {{"v0", r(1)}, {"z", r(16)}}, false});
  CHECK(c6.model_matches);
  CHECK(c6.valid());

  auto c4 = certify({4, 0, {{"u", r(1)}, {"v", r(1)}}, false});
  CHECK_FALSE(c4.model_matches);
  CHECK_FALSE(c4.valid());
  CHECK(c4.excluded_reason.has_value());

  auto deg = certify({5, 2, {{"z", r(0)}}, false});
  REQUIRE(deg.excluded_reason.has_value());
  CHECK(*deg.excluded_reason == "torsion point (y=0)");

  auto printed = certify({5, 1, {{"z", r(1)}}, true});
  CHECK_FALSE(printed.on_curve);
  CHECK_FALSE(printed.valid());

  auto sing = certify({3, 0, {{"a1", r(2)}, {"u1", r(1)}, {"z", r(3)}}, false});
  REQUIRE(sing.excluded_reason.has_value());
  CHECK(sing.excluded_reason->rfind("singular curve", 0) == 0);

  // a second l=5 point of infinite order
  auto other = certify({5, 1, {{"z", r(3)}}, false});
  CHECK(other.valid());
}
