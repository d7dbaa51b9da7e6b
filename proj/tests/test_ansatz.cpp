#include "doctest.h"
#include "qplane/ansatz.hpp"

using namespace qplane;

namespace {

UnknownScalar u(const char* n) { return UnknownScalar::unknown(n); }
const UnknownScalar h{Scalar::h()};

}  // namespace

TEST_CASE("unknown polynomials") {
  auto p = (u("B2") - u("B3")) * (u("B2") + u("B3"));
  CHECK(p == u("B2") * u("B2") - u("B3") * u("B3"));
  CHECK(p.evaluate({{"B2", Scalar(3)}, {"B3", Scalar(2)}}) == Scalar(5));
  CHECK_THROWS_AS(p.evaluate({{"B2", Scalar(3)}}), MissingUnknown);
  CHECK(p.substitute({{"B2", Scalar(0)}}) == -(u("B3") * u("B3")));
  CHECK((u("A11") * Scalar(2) - h).monic().to_string() == "A11 - 1/2*h");
  CHECK_THROWS_AS(UnknownScalar::unknown("C1"), std::invalid_argument);
}

TEST_CASE("consistency system contains the expected constraints") {
  auto s = generate_consistency_system();
  CHECK(s.spans(u("B4") - u("B6") - h));
  CHECK(s.spans(u("B2") * (UnknownScalar(1) - u("A22"))));
  CHECK(s.spans(u("B3") - u("B5")));
  CHECK(s.spans(u("A12") - UnknownScalar(1)));
  CHECK(!s.spans(u("A12")));
  CHECK(!s.spans(u("B1")));
  // deterministic generation
  auto again = generate_consistency_system();
  REQUIRE(again.size() == s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    CHECK(again.constraints[i].value == s.constraints[i].value);
    CHECK(again.constraints[i].origin == s.constraints[i].origin);
  }
}

TEST_CASE("classical point satisfies the consistency system at h = 0") {
  std::map<std::string, Scalar> classical;
  for (const auto& n : unknown_names()) classical[n] = Scalar(0);
  for (const char* n : {"A11", "A12", "A21", "A22", "S11", "S22"}) classical[n] = Scalar(1);
  for (const auto& c : generate_consistency_system().constraints) {
    INFO(c.origin);
    CHECK(to_series(c.value.evaluate(classical), 2).coefficient(0) == 0);
  }
}

TEST_CASE("covariance system") {
  auto combined = generate_covariance_system(generate_consistency_system());
  CHECK(combined.spans(u("A11") - UnknownScalar(1)));
  auto sol = solution_assignment();
  CHECK(verify_solution(combined, sol).ok());
  auto full = complete_assignment(sol);
  CHECK(full.at("S11") == Scalar::E());
  CHECK(full.at("S22") == Scalar(1));
  CHECK(full.at("S12").is_zero());

  auto bad = sol;
  bad["B1"] = Scalar::h();
  auto rep = verify_solution(combined, bad);
  CHECK(!rep.ok());
  REQUIRE(!rep.checks.empty());
  CHECK(!rep.checks.front().id.empty());
  CHECK(!rep.checks.front().residual.empty());

  auto a22 = full;
  a22["A22"] = Scalar(1);
  a22["B2"] = Scalar(1);
  CHECK(!verify_solution(combined, a22).ok());

  auto missing = sol;
  missing.erase("B7");
  CHECK_THROWS_AS(verify_solution(combined, missing), MissingUnknown);
  auto nondiag = sol;
  nondiag["B2"] = Scalar(1);
  CHECK_THROWS_AS(complete_assignment(nondiag), MissingUnknown);
}

TEST_CASE("specialized ansatz reproduces the GAMMA rules") {
  auto rep = compare_with_gamma(solution_assignment());
  INFO(rep.to_text(true));
  CHECK(rep.ok());
  CHECK(rep.count(Status::Pass) == 6);
}

TEST_CASE("printed phi_L and printed intermediate system are flagged") {
  auto printed = generate_covariance_system({}, PhiVariant::Printed);
  CHECK(!verify_solution(printed, solution_assignment()).ok());
  auto s = generate_consistency_system();
  for (const auto& [text, value] : printed_intermediate_system())
    if (text == "A11 = 0" || text == "A12 = 0" || text == "A21 = 0") CHECK(!s.spans(value));
  auto rep = ansatz_suite();
  INFO(rep.to_text(true));
  CHECK(rep.ok());
  REQUIRE(rep.find("printed-intermediate-system"));
  CHECK(rep.find("printed-intermediate-system")->status == Status::Finding);
}
