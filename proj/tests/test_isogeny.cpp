#include "doctest.h"

#include <random>

#include "kubert/isogeny.hpp"

using namespace kubert;

namespace {

using QCurve = WeierstrassCurve<Rational>;
using QPoint = CurvePoint<Rational>;
using CPoly = UniPoly<QFunc>;

QFunc cpoly(std::initializer_list<long> coeffs) {
  std::vector<Rational> v;
  for (long a : coeffs) v.emplace_back(a);
  return QFunc(QPoly(v));
}

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

TEST_CASE("l=5 quotient over Q(c)") {
  const QFunc c = QFunc::variable();
  auto fam = kubert_curve<QFunc>(5, {c});
  auto iso = velu_quotient(fam.curve, fam.A, 5);
  auto bf = iso.codomain.b_form();
  CHECK(bf.b2 == cpoly({1, -30, 1}));
  CHECK(QFunc(2) * bf.b4 == QFunc(-2) * c * cpoly({1, 3}) * cpoly({-7, 4}));
  CHECK(bf.b6 == -c * cpoly({-4, 91, -40, -4, 4}));
  CHECK(iso.shift == QFunc(2) * c);

  auto std5 = velu_quotient(fam.curve, fam.A, 5, VeluNormalization::standard);
  CHECK(std5.codomain.b_form().b2 == cpoly({1, -6, 1}));
  CHECK(iso.phi_x_num.degree() == 5);
  CHECK(iso.phi_x_den.degree() == 4);
  CHECK(gcd(iso.phi_x_num, iso.phi_x_den).degree() == 0);
  CHECK(!ring_traits<QFunc>::is_zero(iso.codomain.discriminant()));
}

TEST_CASE("l=6 quotient over Q(c) factors as tabulated") {
  const QFunc c = QFunc::variable();
  auto fam = kubert_curve<QFunc>(6, {c});
  auto iso = velu_quotient(fam.curve, fam.A, 6);
  CHECK(iso.normalization == VeluNormalization::standard);
  const CPoly x = CPoly::x(QFunc(1));
  CPoly lhs = iso.codomain.b_form().cubic();
  CPoly rhs = (QFunc(4) * x - CPoly::constant(cpoly({-1, 14, 19}))) *
              (x * x + QFunc(2) * c * cpoly({1, 2}) * x + CPoly::constant(c * cpoly({4, 1, 4, 4})));
  CHECK(lhs == rhs);
  CHECK(iso.phi_x_num.degree() == 6);
  CHECK(iso.phi_x_den.degree() == 5);
}

TEST_CASE("l=3 quotient") {
  const QFunc c = QFunc::variable();
  for (long a3v : {6L, -2L, 1L}) {
    auto fam = kubert_curve<QFunc>(3, {c, QFunc(a3v)});
    auto iso = velu_quotient(fam.curve, fam.A, 3);
    auto std3 = velu_quotient(fam.curve, fam.A, 3, VeluNormalization::standard);
    const QFunc a3(a3v);
    CPoly expect({-a3 * (QFunc(4) * c * c * c + QFunc(27) * a3), QFunc(-18) * c * a3, c * c, QFunc(4)});
    CHECK(iso.codomain.b_form().cubic() == expect);
    CHECK(std3.codomain.b_form().cubic() == expect);
  }
}

TEST_CASE("l=4 quotient differs from the tabulated curve") {
  // The tabulated cubic (x + c)(4x^2 + x + c) is the b-form of the level-4
  // family itself at parameter -c, not of its quotient.
  const QFunc c = QFunc::variable();
  const CPoly x = CPoly::x(QFunc(1));
  CPoly tab = (x + CPoly::constant(c)) * (QFunc(4) * x * x + x + CPoly::constant(c));
  auto domain = kubert_curve<QFunc>(4, {-c});
  CHECK(domain.curve.b_form().cubic() == tab);
  auto fam = kubert_curve<QFunc>(4, {c});
  for (auto norm : {VeluNormalization::standard, VeluNormalization::kernel_trace}) {
    auto iso = velu_quotient(fam.curve, fam.A, 4, norm);
    CHECK(iso.codomain.b_form().cubic() != tab);
  }
  auto iso = velu_quotient(fam.curve, fam.A, 4);
  CHECK(iso.phi_x_num.degree() == 4);
  CHECK(iso.phi_x_den.degree() == 3);
}

TEST_CASE("nonsingular codomains and kernel for every level") {
  const QFunc c = QFunc::variable();
  for (int l : {3, 4, 5, 6}) {
    std::vector<QFunc> params{c};
    if (l == 3) params = {c, QFunc(5)};
    auto fam = kubert_curve(l, params);
    auto iso = velu_quotient(fam.curve, fam.A, l);
    CHECK(!ring_traits<QFunc>::is_zero(iso.codomain.discriminant()));
    for (int i = 0; i < l; ++i) CHECK(push_point(iso, scalar_mul(fam.curve, i, fam.A)).inf);
  }
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<long> d(-30, 30);
  for (int l : kubert_levels()) {
    for (int k = 0; k < 3; ++k) {
      try {
        std::vector<Rational> params{make_rational(d(rng), 7)};
        if (l == 3) params.push_back(Rational(d(rng)));
        auto fam = kubert_curve(l, params);
        auto iso = velu_quotient(fam.curve, fam.A, l);
        CHECK(iso.phi_x_num.degree() == l);
        CHECK(iso.phi_x_den.degree() == l - 1);
        for (int i = 0; i < l; ++i) CHECK(push_point(iso, scalar_mul(fam.curve, i, fam.A)).inf);
      } catch (const DomainError&) {
      }
    }
  }
}

TEST_CASE("push_point is a homomorphism and fibers contain the source") {
  struct Case {
    int l;
    std::vector<Rational> params;
  };
  std::vector<Case> cases{{4, {make_rational(-1, 3)}},
                          {5, {make_rational(-1, 3)}},
                          {5, {Rational(3)}},
                          {6, {make_rational(2, 5)}},
                          {3, {Rational(1), Rational(2)}},
                          {7, {Rational(2)}}};
  std::mt19937_64 rng(12);
  int pairs = 0;
  for (const auto& cs : cases) {
    auto fam = kubert_curve(cs.l, cs.params);
    const auto& E = fam.curve;
    auto pts = small_points(E, 20);
    REQUIRE(!pts.empty());
    for (auto norm : {VeluNormalization::standard, VeluNormalization::kernel_trace}) {
      auto iso = velu_quotient(E, fam.A, cs.l, norm);
      std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
      for (int k = 0; k < 10; ++k, ++pairs) {
        QPoint P = add(E, pts[pick(rng)], scalar_mul(E, k % cs.l, fam.A));
        QPoint Q = scalar_mul(E, 1 + k % 3, pts[pick(rng)]);
        QPoint fP = push_point(iso, P), fQ = push_point(iso, Q);
        CHECK(iso.codomain.contains(fP));
        CHECK(push_point(iso, add(E, P, Q)) == add(iso.codomain, fP, fQ));
        if (!fP.inf) {
          CHECK(evaluate(iso.phi_x_num, P.x) / evaluate(iso.phi_x_den, P.x) == fP.x);
          auto roots = rational_roots(fiber_polynomial(iso, fP.x));
          CHECK(std::find(roots.begin(), roots.end(), P.x) != roots.end());
          auto pre = has_rational_preimage(iso, fP);
          CHECK(pre.found);
          CHECK(push_point(iso, pre.witness) == fP);
        }
      }
    }
  }
  CHECK(pairs >= 100);
}

TEST_CASE("preimage search on non-image points") {
  // l = 5, c = -1: the b-point (2, 11) on the quotient is not an image
  auto fam = kubert_curve<Rational>(5, {Rational(-1)});
  auto iso = velu_quotient(fam.curve, fam.A, 5);
  auto bf = iso.codomain.b_form();
  CHECK(bf.cubic() == QPoly({Rational(-127), Rational(44), Rational(32), Rational(4)}));
  auto Q = from_b_point(iso.codomain, Rational(2), Rational(11));
  CHECK(iso.codomain.contains(Q));
  auto fib = fiber_polynomial(iso, Q.x);
  CHECK(fib.degree() == 5);
  CHECK(is_irreducible(fib));
  CHECK_FALSE(has_rational_preimage(iso, Q).found);
  CHECK_THROWS_AS(push_point(iso, QPoint::affine(Rational(5), Rational(5))), DomainError);
  CHECK(push_point(iso, QPoint::infinity()).inf);
}
