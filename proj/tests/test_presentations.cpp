#include "doctest.h"
#include "qplane/parser.hpp"
#include "qplane/presentations.hpp"
#include "qplane/series_oracle.hpp"

using namespace qplane;

namespace {

bool has_rule(const Presentation& p, const char* lhs, const char* rhs) {
  AlgElement l = parse_element(lhs, p);
  AlgElement r = parse_element(rhs, p);
  for (const auto& rule : p.rules())
    if (AlgElement::monomial(rule.lhs, 1) == l) return rule.rhs == r;
  return false;
}

}  // namespace

TEST_CASE("catalog lists every presentation") {
  const auto& names = Catalog::instance().names();
  for (const char* n : {"LIE", "LIE_EXP", "GAMMA", "DERIV", "FORMS", "VECT", "VECT_ACT", "HN", "ORACLE_XY"})
    CHECK(std::find(names.begin(), names.end(), n) != names.end());
  CHECK_THROWS_AS(get_presentation("NOPE"), UnknownPresentation);
}

TEST_CASE("every derived candidate is certified") {
  for (const auto& d : Catalog::instance().derived_status()) {
    INFO(d.presentation << ": " << d.lhs << " -> " << d.rhs << "  " << d.detail);
    CHECK(d.accepted);
  }
}

TEST_CASE("group-like shift rules") {
  auto g = get_presentation("GAMMA");
  CHECK(has_rule(*g, "eX*Y", "E*Y*eX"));
  CHECK(has_rule(*g, "eXi*Y", "E^-1*Y*eXi"));
  CHECK(has_rule(*g, "eX*dX", "E^-1*dX*eX"));
  CHECK(has_rule(*g, "eXi*dX", "E*dX*eXi"));
  CHECK(has_rule(*g, "eX*dY", "dY*eX"));
  CHECK(has_rule(*g, "eX*X", "X*eX"));
  auto hn = get_presentation("HN");
  CHECK(has_rule(*hn, "K*H", "E^-1*H*K"));
  CHECK(has_rule(*hn, "Ki*H", "E*H*Ki"));
  CHECK(has_rule(*hn, "K*Ki", "1"));
  auto f = get_presentation("FORMS");
  CHECK(has_rule(*f, "eX*w1", "E^-1*w1*eX"));
  CHECK(has_rule(*f, "eX*w2", "w2*eX"));
}

TEST_CASE("rules are oriented and parity homogeneous") {
  for (const auto& name : Catalog::instance().names()) {
    auto p = get_presentation(name);
    for (const auto& r : p->rules())
      for (const auto& [w, c] : r.rhs.terms()) {
        CHECK(deglex_less(w, r.lhs));
        CHECK(p->parity(w) == p->parity(r.lhs));
      }
  }
}

TEST_CASE("bounded confluence of the verified presentations") {
  for (const char* name : {"LIE", "LIE_EXP", "GAMMA", "FORMS", "VECT", "HN"}) {
    auto p = get_presentation(name);
    auto pairs = critical_pairs(*p, 4);
    INFO(std::string(name));
    CHECK(pairs.empty());
  }
}

TEST_CASE("a deliberately broken rule set is not confluent") {
  auto g = stated_presentation("GAMMA");
  auto bad = g->extended("BAD", {{g->word({"eX", "Y"}), parse_element("Y*eX", *g), Provenance::Derived, ""},
                                 {g->word({"eXi", "Y"}), parse_element("Y*eXi", *g), Provenance::Derived, ""}});
  CHECK(!critical_pairs(bad, 3).empty());
}

TEST_CASE("normal forms are idempotent") {
  auto g = get_presentation("GAMMA");
  AlgElement e = parse_element("(Y*dX + eX*X*dY)*(X*Y - eXi*dX)", *g);
  AlgElement n = g->normalize(e);
  CHECK(g->normalize(n) == n);
  for (const auto& [w, c] : n.terms()) CHECK(is_normal_word(w, g->rule_set()));
}

TEST_CASE("derived rule candidates are rejected by the oracle when wrong") {
  auto v = certify_identity("GAMMA", parse_element("eX*Y", *get_presentation("GAMMA")),
                            parse_element("E^-1*Y*eX", *get_presentation("GAMMA")), 5);
  CHECK(!v.ok);
  auto w = certify_identity("HN", parse_element("K*H", *get_presentation("HN")),
                            parse_element("E*H*K", *get_presentation("HN")), 5);
  CHECK(!w.ok);
}
