#include "doctest.h"
#include "qplane/parser.hpp"
#include "qplane/presentations.hpp"
#include "qplane/series_oracle.hpp"

using namespace qplane;

TEST_CASE("exponential expansion") {
  auto p = get_presentation("LIE");
  CHECK(expand_exponential(*p, "X", 1, 2) == parse_element("1 + X + 1/2*X*X", *p));
  CHECK(expand_exponential(*p, "X", -1, 3) == parse_element("1 - X + 1/2*X^2 - 1/6*X^3", *p));
}

TEST_CASE("filtration check rejects grade-lowering rules") {
  auto base = stated_presentation("ORACLE_XY");
  Presentation tmp("T", base->alphabet(), {});
  std::vector<CatalogRule> bad{{tmp.word({"X", "Y"}), parse_element("Y*X + Y", tmp), Provenance::Derived, ""}};
  auto p = std::make_shared<const Presentation>("T", base->alphabet(), bad);
  CHECK_THROWS_AS(OracleAlgebra(p, Grading{{0, 1}}, 4), std::invalid_argument);
}

TEST_CASE("exp(X) exp(-X) = 1 in the oracle") {
  auto r = Realization::for_presentation("LIE_EXP", 6);
  auto e = parse_element("eX*eXi", r.source());
  CHECK(r.algebra().truncate(r.image(e) - SeriesElement::unit()).is_zero());
}

TEST_CASE("quantum plane relation through grade 8") {
  auto rep = check_quantum_plane(8);
  CHECK(rep.ok());
  CHECK(rep.count(Status::Pass) == 2);
}

TEST_CASE("vector-field realization") {
  auto rep = check_vector_field_realization(4);
  INFO(rep.to_text(true));
  CHECK(rep.ok());
}

TEST_CASE("full oracle suite") {
  auto rep = run_oracle_suite(6);
  INFO(rep.to_text(true));
  CHECK(rep.ok());
  CHECK(rep.count(Status::Pass) >= 20);
}
