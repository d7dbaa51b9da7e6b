#include "doctest.h"
#include "qplane/covariance.hpp"
#include "qplane/parser.hpp"
#include "qplane/presentations.hpp"

using namespace qplane;

namespace {

TensorElement tensor(const char* text) {
  auto g = get_presentation("GAMMA");
  return tensor_normalize(parse_tensor(text, *g), slot_algebra(g));
}

AlgElement elem(const char* text) { return parse_element(text, *get_presentation("GAMMA")); }

}  // namespace

TEST_CASE("coaction examples") {
  auto d = coaction_tables(PhiVariant::Derived);
  auto pr = coaction_tables(PhiVariant::Printed);
  CHECK(delta_L(elem("dX"), d) == tensor("1 @ dX"));
  CHECK(delta_L(elem("X*dX"), d) == tensor("X @ dX + 1 @ X*dX"));
  CHECK(delta_L(elem("dY"), pr) == tensor("1 @ dY + (1 - E)/h*Y @ X*eXi"));
  CHECK(delta_R(elem("dX"), d) == tensor("dX @ 1"));
  CHECK(delta_R(elem("dY"), d) == tensor("dY @ eXi"));
  CHECK(delta_R(elem("Y*dY"), d) == tensor_multiply(coproduct(elem("Y"), d.lie), tensor("dY @ eXi"), slot_algebra(d.gamma)));
  CHECK_THROWS_AS(delta_L(elem("dX*dY"), d), OutOfDomain);
  CHECK_THROWS_AS(delta_L(elem("X"), d), OutOfDomain);
}

TEST_CASE("differential") {
  CHECK(differential(elem("X")) == elem("dX"));
  CHECK(differential(elem("X*Y - Y*X - h*Y")).is_zero());
  // d(eX eXi) = d(1) = 0
  CHECK(differential(elem("eX*eXi")).is_zero());
  CHECK(differential(differential(elem("Y*X*eX"))).is_zero());
}

TEST_CASE("consistency derivation") {
  auto rep = consistency_derivation();
  INFO(rep.to_text(true));
  CHECK(rep.ok());
}

TEST_CASE("bicovariance, derived coaction") {
  auto rep = check_bicovariance(PhiVariant::Derived, 30, 5);
  INFO(rep.to_text(true));
  CHECK(rep.ok());
  CHECK(rep.count(Status::Pass) >= 11);
}

TEST_CASE("printed coaction fails the defining property for Y") {
  auto rep = check_bicovariance(PhiVariant::Printed, 10, 5);
  REQUIRE(rep.find("defining-property(Y)"));
  CHECK(rep.find("defining-property(Y)")->status == Status::Fail);
  REQUIRE(rep.find("defining-property(X)"));
  CHECK(rep.find("defining-property(X)")->status == Status::Pass);
  CHECK(rep.find("coaction-parity")->status == Status::Fail);
  auto both = covariance_suite(true, true, 10, 5);
  CHECK(both.ok());
  CHECK(both.find("phiL-variant-comparison"));
}

TEST_CASE("graded Hopf structure on the calculus") {
  auto rep = graded_hopf_gamma(true, 30, 3);
  INFO(rep.to_text(true));
  CHECK(rep.ok());
  const auto* s = rep.find("kappa-hat-sign-experiment");
  REQUIRE(s);
  CHECK(s->witness.find("consistent convention: kappa-hat o d = + d o kappa") != std::string::npos);
}
