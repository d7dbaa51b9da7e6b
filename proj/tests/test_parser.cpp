#include "doctest.h"
#include "qplane/coalgebra.hpp"
#include "qplane/parser.hpp"
#include "qplane/presentations.hpp"
#include "qplane/suites.hpp"

using namespace qplane;

TEST_CASE("element fixtures") {
  auto lie = get_presentation("LIE");
  CHECK(lie->normalize(parse_element("X*Y - Y*X - h*Y", *lie)).is_zero());
  CHECK(format(lie->normalize(parse_element("X*Y", *lie)), *lie) == "Y*X + h*Y");
  auto forms = get_presentation("FORMS");
  CHECK(forms->normalize(parse_element("w1*w2 + E*w2*w1", *forms)).is_zero());
  CHECK(format(AlgElement{}, *lie) == "0");
}

TEST_CASE("tensor fixtures") {
  auto t = hopf_tables("LIE");
  const auto& p = *t.presentation;
  CHECK(parse_tensor("Y @ eXi + 1 @ Y", p) == coproduct(p.gen("Y"), t));
  CHECK(format(coproduct(p.gen("X"), t), p) == "X @ 1 + 1 @ X");
  // '@' binds looser than '*'
  auto a = parse_tensor("Y @ X*eXi", p);
  REQUIRE(a.size() == 1);
  CHECK(a.terms().begin()->first[1] == p.word({"X", "eXi"}));
  CHECK(std::holds_alternative<AlgElement>(parse("X*Y", p)));
  CHECK(std::holds_alternative<TensorElement>(parse("X @ Y", p)));
}

TEST_CASE("scalar syntax inside elements") {
  auto p = get_presentation("GAMMA");
  auto e = parse_element("(E - 1)^2/h*dX + E^-1*dY*X", *p);
  CHECK(e.coefficient(p->word({"dX"})) == (Scalar::E() - 1) * (Scalar::E() - 1) / Scalar::h());
  CHECK(e.coefficient(p->word({"dY", "X"})) == Scalar::E_inv());
  CHECK(parse_element("dX^2", *p) == AlgElement::monomial(p->word({"dX", "dX"}), 1));
}

TEST_CASE("diagnostics carry spans inside the input") {
  auto p = get_presentation("LIE");
  try {
    parse_element("X*Y + Z", *p);
    FAIL("expected ForeignSymbol");
  } catch (const ForeignSymbol& e) {
    CHECK(e.symbol == "Z");
    CHECK(e.offset == 6);
    CHECK(e.length == 1);
  }
  for (const char* bad : {"X*(Y", "X**Y", "X +", ")", "X^", "X/Y", "X @", "X^-1"}) {
    INFO(bad);
    bool threw = false;
    try {
      parse(bad, *p);
    } catch (const ParseError& e) {
      threw = true;
      CHECK(e.offset + e.length <= std::string(bad).size());
    }
    CHECK(threw);
  }
}

TEST_CASE("round-trip over every presentation") {
  auto rep = parser_suite(150, 9);
  INFO(rep.to_text(false));
  CHECK(rep.ok());
  CHECK(rep.count(Status::Pass) == 3 * Catalog::instance().names().size() + 8);
}

TEST_CASE("relation fixtures normalize to zero") {
  auto rep = relation_suite();
  INFO(rep.to_text(false));
  CHECK(rep.ok());
  CHECK(rep.count(Status::Pass) == relation_fixtures().size());
  // A misprinted relation is caught.
  auto g = get_presentation("GAMMA");
  CHECK(!g->normalize(parse_element("Y*dY - dY*Y - (E + 1)*dY*Y", *g)).is_zero());
}

TEST_CASE("confluence suite reports the extra presentations as findings") {
  auto rep = confluence_suite(4);
  CHECK(rep.ok());
  CHECK(rep.find("confluence:DERIV/status"));
  CHECK(rep.find("confluence:VECT_ACT/status"));
  CHECK(rep.find("confluence:VECT_ACT/status")->status == Status::Finding);
}
