#include "doctest.h"
#include "qplane/coalgebra.hpp"
#include "qplane/parser.hpp"
#include "qplane/presentations.hpp"

using namespace qplane;

namespace {

TensorElement tensor(const char* text, const PresentationPtr& p) {
  return tensor_normalize(parse_tensor(text, *p), slot_algebra(p));
}

}  // namespace

TEST_CASE("coproduct examples") {
  auto t = hopf_tables("LIE");
  auto p = t.presentation;
  CHECK(coproduct(p->gen("X"), t) == tensor("X @ 1 + 1 @ X", p));
  CHECK(coproduct(AlgElement::unit(), t) == tensor("1 @ 1", p));
  CHECK(coproduct(parse_element("X*Y", *p), t) ==
        tensor("X*Y @ eXi + X @ Y + Y @ X*eXi + 1 @ (Y*X + h*Y)", p));
}

TEST_CASE("counit and antipode examples") {
  auto t = hopf_tables("LIE");
  auto p = t.presentation;
  CHECK(counit(p->gen("Y"), t) == Scalar(0));
  CHECK(counit(p->gen("eX"), t) == Scalar(1));
  CHECK(counit(parse_element("X*Y + 3", *p), t) == Scalar(3));
  CHECK(antipode(p->gen("X"), t) == -p->gen("X"));
  CHECK(antipode(parse_element("X*Y", *p), t) == p->normalize(parse_element("Y*eX*X", *p)));
  auto v = hopf_tables("VECT");
  CHECK(antipode(v.presentation->gen("T1"), v) == v.presentation->normalize(parse_element("-T1*Gi", *v.presentation)));
}

TEST_CASE("Koszul sign in the tensor square") {
  auto p = get_presentation("FORMS");
  auto alg = slot_algebra(p);
  auto a = tensor("1 @ w1", p);
  auto b = tensor("w2 @ 1", p);
  CHECK(tensor_multiply(a, b, alg) == tensor("-w2 @ w1", p));
  CHECK(tensor_multiply(b, a, alg) == tensor("w2 @ w1", p));
}

TEST_CASE("incomplete tables are rejected") {
  auto t = hopf_tables("HN");
  t.delta[t.presentation->letter("H")].reset();
  CHECK_THROWS_AS(coproduct(t.presentation->gen("H"), t), IncompleteTable);
}

TEST_CASE("Hopf axioms hold for every shipped presentation") {
  for (const char* name : {"LIE", "FORMS", "VECT", "HN"}) {
    auto rep = hopf_suite(name, 100, 42);
    INFO(rep.to_text(true));
    CHECK(rep.ok());
    CHECK(rep.count(Status::Fail) == 0);
  }
}

TEST_CASE("printed antipode of w2 violates the antipode law") {
  auto rep = check_hopf_axioms(hopf_tables("FORMS", AntipodeVariant::Printed), 10, 1);
  CHECK(!rep.ok());
  auto suite = hopf_suite("FORMS", 10, 1);
  REQUIRE(suite.find("printed-antipode(w2)"));
  CHECK(suite.find("printed-antipode(w2)")->status == Status::Finding);
}

TEST_CASE("a corrupted coproduct is detected") {
  auto t = hopf_tables("LIE");
  auto p = t.presentation;
  t.delta[p->letter("Y")] = tensor("Y @ eX + 1 @ Y", p);
  CHECK(!check_hopf_axioms(t, 20, 3).ok());
}
