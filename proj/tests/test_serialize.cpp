#include "doctest.h"

#include <random>

#include "kubert/serialize.hpp"

using namespace kubert;

namespace {

Rational r(long n, long d = 1) { return make_rational(n, d); }

QPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> deg(0, 7), num(-1000, 1000), den(1, 50);
  std::vector<Rational> v;
  for (long k = deg(rng); k >= 0; --k) v.push_back(make_rational(num(rng), den(rng)));
  return QPoly(v);
}

}  // namespace

TEST_CASE("rational and polynomial encodings") {
  CHECK(rational_to_json(r(-3, 4)) == json::array({"-3", "4"}));
  CHECK(rational_from_json(json::array({"6", "-8"})) == r(-3, 4));
  CHECK_THROWS_AS(rational_from_json(json::array({"1", "0"})), DomainError);
  CHECK_THROWS_AS(rational_from_json(json::array({"x", "2"})), DomainError);
  CHECK_THROWS_AS(rational_from_json(json::array({1, 2})), DomainError);

  QPoly f({r(1, 2), r(0), r(-3)});
  CHECK(poly_to_ascii(f) == "(-3/1)*x^2 + (1/2)*x^0");
  CHECK(poly_to_json(f).dump() == R"({"coeffs":[["1","2"],["0","1"],["-3","1"]],"var":"x"})");
  CHECK(poly_to_ascii(QPoly()) == "0");

  std::mt19937_64 rng(21);
  for (int i = 0; i < 100; ++i) {
    QPoly g = random_poly(rng);
    CHECK(parse_poly(poly_to_ascii(g)) == g);
    CHECK(poly_from_json(poly_to_json(g)) == g);
    CHECK(parse_poly(format(g, "x")) == g);
    CHECK(parse_poly(poly_to_ascii(g, "X"), "X") == g);
  }
  CHECK(parse_poly("x^5 - x - 1") == QPoly({r(-1), r(-1), r(0), r(0), r(0), r(1)}));
  CHECK(parse_poly("3/2*x^2 + (1/4)") == QPoly({r(1, 4), r(0), r(3, 2)}));
  CHECK(parse_poly("-x*x + 2*(-3)") == QPoly({r(-6), r(0), r(-1)}));
  CHECK(parse_poly("0").is_zero());
  CHECK_THROWS_AS(parse_poly(""), DomainError);
  CHECK_THROWS_AS(parse_poly("x^2 +"), DomainError);
  CHECK_THROWS_AS(parse_poly("y^2"), DomainError);
  CHECK_THROWS_AS(parse_poly("x 2"), DomainError);
}

TEST_CASE("curve, point and isogeny records") {
  auto fam = kubert_curve<Rational>(5, {r(-1)});
  json jc = curve_to_json(fam.curve);
  CHECK(curve_from_json(jc) == fam.curve);
  CHECK(point_from_json(point_to_json(fam.A)) == fam.A);
  CHECK(point_from_json(point_to_json(CurvePoint<Rational>::infinity())).inf);
  json singular = curve_to_json(fam.curve);
  for (const char* k : {"a1", "a2", "a3", "a4", "a6"}) singular[k] = rational_to_json(r(0));
  CHECK_THROWS_AS(curve_from_json(singular), DomainError);
  CHECK_THROWS_AS(curve_from_json(json::object()), DomainError);

  for (int l : {3, 4, 5, 6, 7}) {
    std::vector<Rational> params{r(2, 5)};
    if (l == 3) params = {r(1), r(2)};
    auto f = kubert_curve(l, params);
    auto iso = velu_quotient(f.curve, f.A, l);
    json j = isogeny_to_json(iso);
    auto back = isogeny_from_json(j);
    CHECK(isogeny_to_json(back) == j);
    CHECK(back.codomain == iso.codomain);
    CHECK(back.terms.size() == iso.terms.size());
  }
  auto iso = velu_quotient(fam.curve, fam.A, 5);
  json tampered = isogeny_to_json(iso);
  tampered["shift"] = rational_to_json(r(7));
  CHECK_THROWS_AS(isogeny_from_json(tampered), DomainError);
}

TEST_CASE("certificate records round-trip") {
  std::vector<ConstructionInput> inputs{{5, 1, {{"z", r(1)}}, false},
                                        {5, 1, {{"z", r(3)}}, false},
                                        {5, 1, {{"z", r(1)}}, true},
                                        {5, 2, {{"z", r(0)}}, false},
                                        {3, 0, {{"a1", r(0)}, {"u1", r(1)}, {"z", r(5)}}, false},
                                        {3, 0, {{"a1", r(2)}, {"u1", r(1)}, {"z", r(3)}}, false},
                                        {4, 0, {{"u", r(1)}, {"v", r(1)}}, false},
                                        {6, 0, {{"v0", r(1)}, {"z", r(16)}}, false}};
  for (const auto& in : inputs) {
    auto cert = certify(in);
    json j = certificate_to_json(cert);
    auto back = certificate_from_json(j);
    CHECK(certificate_to_json(back) == j);
    CHECK(back.valid() == cert.valid());
    CHECK(back.fiber == cert.fiber);
    CHECK(back.excluded_reason == cert.excluded_reason);
    CHECK(back.preimage == cert.preimage);
    CHECK(input_from_json(input_to_json(in)).params == in.params);
  }
  json j = certificate_to_json(certify(inputs[1]));
  j["valid"] = false;
  CHECK_THROWS_AS(certificate_from_json(j), DomainError);
  CHECK(certificate_to_json(certify(inputs[5]))["curve_F"].is_null());
}

TEST_CASE("family and Galois records round-trip") {
  for (const auto& f : {p_ncl5(r(1), r(2)), brumer(r(-3, 2), r(5)), darmon(r(1), r(1)), shanks_cubic(r(2)),
                        gras_quartic(r(1)), ptilde_cubic(r(1), r(2), r(3)), ptilde_quartic(r(1, 3), r(2))}) {
    json j = family_to_json(f);
    auto back = family_from_json(j);
    CHECK(back.family == f.family);
    CHECK(back.params == f.params);
    CHECK(back.poly == f.poly);
    CHECK(family_to_json(back) == j);
  }
  json bad = family_to_json(shanks_cubic(r(2)));
  bad["params"]["t"] = rational_to_json(r(3));
  CHECK_THROWS_AS(family_from_json(bad), DomainError);

  for (const QPoly& f : {shanks_cubic(r(2)).poly, gras_quartic(r(2)).poly, p_ncl5(r(1), r(2)).poly,
                         QPoly({r(-2), r(1), r(-2), r(1)})}) {
    auto rep = galois_group(f);
    json j = galois_to_json(rep);
    auto back = galois_from_json(j);
    CHECK(galois_to_json(back) == j);
    CHECK(back.group_label == rep.group_label);
    CHECK(back.pattern_histogram == rep.pattern_histogram);
  }
  json rep = galois_to_json(galois_group(shanks_cubic(r(2)).poly));
  CHECK(rep["group_label"] == "C3");
  CHECK(rep["certainty"] == "exact");
  CHECK(rep["disc"] == json::array({"361", "1"}));
  rep["certainty"] = "likely";
  CHECK_THROWS_AS(galois_from_json(rep), DomainError);
}
