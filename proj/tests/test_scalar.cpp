#include <random>

#include "doctest.h"
#include "qplane/parser.hpp"
#include "qplane/scalar.hpp"

using namespace qplane;

namespace {

Rational factorial(int n) {
  Rational r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Scalar random_scalar(std::mt19937& rng, bool allow_den) {
  std::uniform_int_distribution<int> coef(-3, 3), ed(-2, 2), hd(0, 2), n(1, 3);
  auto poly = [&] {
    LaurentPoly p;
    int k = n(rng);
    for (int i = 0; i < k; ++i) p += LaurentPoly::monomial(coef(rng), ed(rng), hd(rng));
    return p;
  };
  Scalar s(poly());
  if (allow_den) {
    LaurentPoly d = poly();
    if (!d.is_zero()) s = s / Scalar(d);
  }
  return s;
}

}  // namespace

TEST_CASE("scalar canonical forms") {
  Scalar E = Scalar::E(), h = Scalar::h();
  CHECK(E * Scalar::E_inv() == Scalar(1));
  CHECK((E * E - 1) / (E - 1) == E + 1);
  CHECK((h * E - h) / (E - 1) == h);
  CHECK(((E - 1) / h).to_string() == parse_scalar("(E - 1)/h").to_string());
  CHECK(parse_scalar("E^-1 - 1") == (1 - E) / E);
  CHECK((Scalar(2) / 4).to_string() == "1/2");
  CHECK_THROWS_AS(Scalar(0).inverse(), DivisionByZero);
}

TEST_CASE("scalar field axioms on random samples") {
  std::mt19937 rng(7);
  for (int i = 0; i < 150; ++i) {
    Scalar a = random_scalar(rng, true), b = random_scalar(rng, true), c = random_scalar(rng, i % 2);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a - a == Scalar(0));
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("poly_gcd recovers a planted common factor") {
  std::mt19937 rng(3);
  auto poly = [&] {
    std::uniform_int_distribution<int> coef(-3, 3), ed(0, 3), hd(0, 3);
    LaurentPoly p;
    for (int i = 0; i < 3; ++i) p += LaurentPoly::monomial(coef(rng), ed(rng), hd(rng));
    return p;
  };
  for (int i = 0; i < 40; ++i) {
    LaurentPoly a = poly(), b = poly(), g = poly();
    if (a.is_zero() || b.is_zero() || g.is_zero()) continue;
    LaurentPoly got = poly_gcd(a * g, b * g);
    LaurentPoly base = poly_gcd(a, b);
    // got = g * gcd(a, b) up to a rational factor
    CHECK((a * g).exact_div(got) * got == a * g);
    CHECK((b * g).exact_div(got) * got == b * g);
    CHECK(got.exact_div(g).exact_div(base).is_constant());
  }
  LaurentPoly hm1 = LaurentPoly::monomial(1, 0, 1) - LaurentPoly(1);
  LaurentPoly em1 = LaurentPoly::monomial(1, 1, 0) - LaurentPoly(1);
  CHECK(poly_gcd(hm1 * em1, em1 * em1).is_constant() == false);
  CHECK(poly_gcd(hm1, em1).is_constant());
}

TEST_CASE("series of exp(h) matches 1/k!") {
  auto s = to_series(Scalar::E(), 8);
  for (int k = 0; k <= 8; ++k) CHECK(s.coefficient(k) == 1 / factorial(k));
  auto t = to_series(Scalar::E_inv(), 6);
  for (int k = 0; k <= 6; ++k) CHECK(t.coefficient(k) == (k % 2 ? -1 : 1) / factorial(k));
}

TEST_CASE("removable pole at h = 0 is cancelled") {
  // (E - 1)/h = sum h^k/(k+1)!
  auto s = to_series((Scalar::E() - 1) / Scalar::h(), 6);
  for (int k = 0; k <= 6; ++k) CHECK(s.coefficient(k) == 1 / factorial(k + 1));
  CHECK_THROWS_AS(to_series(1 / Scalar::h(), 3), PoleAtOrigin);
  CHECK_THROWS_AS(to_series(1 / (Scalar::E() - 1), 3), PoleAtOrigin);
}

TEST_CASE("series arithmetic agrees with exact arithmetic") {
  std::mt19937 rng(11);
  for (int i = 0; i < 60; ++i) {
    Scalar a = random_scalar(rng, false), b = random_scalar(rng, false);
    CHECK(to_series(a * b, 5) == to_series(a, 5) * to_series(b, 5));
    CHECK(to_series(a + b, 5) == to_series(a, 5) + to_series(b, 5));
  }
  CHECK(to_series(Scalar::E() * Scalar::E_inv(), 7) == TruncatedSeries(1));
}

TEST_CASE("integer multiples of h") {
  CHECK(as_integer_multiple_of_h(-Scalar::h()) == -1L);
  CHECK(as_integer_multiple_of_h(3 * Scalar::h()) == 3L);
  CHECK(!as_integer_multiple_of_h(Scalar::h() / 2));
  CHECK(!as_integer_multiple_of_h(Scalar::E()));
}
