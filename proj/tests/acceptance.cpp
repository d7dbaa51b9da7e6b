// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "qplane/ansatz.hpp"
#include "qplane/coalgebra.hpp"
#include "qplane/covariance.hpp"
#include "qplane/presentations.hpp"
#include "qplane/series_oracle.hpp"
#include "qplane/suites.hpp"

using namespace qplane;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

bool passed(const CheckReport& r, const std::string& id) {
  const auto* c = r.find(id);
  return c && c->status == Status::Pass;
}

bool has_finding(const CheckReport& r, const std::string& id) {
  const auto* c = r.find(id);
  return c && c->status == Status::Finding;
}

std::string first_failure(const CheckReport& r) {
  for (const auto& c : r.checks)
    if (c.status == Status::Fail) return c.id + (c.residual.empty() ? "" : " (" + c.residual + ")");
  return "";
}

Verdict relations() {
  Verdict v;
  auto r = relation_suite();
  v.require(r.ok(), "relation does not normalize to zero: " + first_failure(r));
  for (const char* p : {"LIE", "GAMMA", "DERIV", "FORMS", "VECT", "VECT_ACT", "HN"}) {
    bool any = false;
    for (const auto& f : relation_fixtures()) any = any || f.presentation == p;
    v.require(any, std::string("no relations for ") + p);
  }
  if (v.ok) v.detail = std::to_string(r.count(Status::Pass)) + " displayed relations normalize to 0";
  return v;
}

Verdict consistency() {
  Verdict v;
  auto r = consistency_derivation();
  v.require(passed(r, "d(lie-relation)"), "d(XY - YX - hY) does not reduce to 0");
  v.require(r.ok(), "consistency report: " + first_failure(r));
  if (v.ok) v.detail = "d(XY - YX - hY) reduces to 0 with the first-order relations";
  return v;
}

Verdict confluence() {
  Verdict v;
  for (const char* p : {"LIE", "GAMMA", "FORMS", "HN", "VECT"}) {
    auto r = check_confluence(*get_presentation(p), 4);
    v.require(r.ok(), std::string(p) + ": " + first_failure(r));
  }
  auto suite = confluence_suite(4);
  v.require(has_finding(suite, "confluence:DERIV/status"), "DERIV status not reported");
  if (v.ok) v.detail = "LIE, GAMMA, FORMS, HN, VECT+G confluent through degree 4; DERIV: " +
                       suite.find("confluence:DERIV/status")->witness;
  return v;
}

Verdict hopf() {
  Verdict v;
  for (const char* p : {"LIE", "FORMS", "VECT", "HN"}) {
    auto r = hopf_suite(p, 100, 42);
    v.require(r.ok(), std::string(p) + ": " + first_failure(r));
    for (const char* law : {"coassociativity", "counit-left", "counit-right", "antipode-left", "antipode-right"})
      v.require(passed(r, law), std::string(p) + ": " + law + " missing");
    if (std::string(p) == "VECT") v.require(passed(r, "grouplike(G)"), "Delta(G) = G x G");
    if (std::string(p) == "HN") v.require(passed(r, "grouplike(K)"), "Delta(K) = K x K");
  }
  if (v.ok) v.detail = "LIE, FORMS, VECT, HN on generators + 100 samples each; G and K group-like";
  return v;
}

Verdict bicovariance() {
  Verdict v;
  auto d = check_bicovariance(PhiVariant::Derived, 40, 42);
  auto p = check_bicovariance(PhiVariant::Printed, 40, 42);
  for (const char* id : {"left-comodule-counit", "left-comodule-coassociativity", "right-comodule-counit",
                         "right-comodule-coassociativity", "coactions-commute", "relations-invariant-left",
                         "relations-invariant-right", "defining-property(X)"})
    v.require(passed(d, id), std::string(id) + " fails");
  v.require(passed(d, "defining-property(X)") || passed(p, "defining-property(X)"), "defining property for X");
  v.require(passed(d, "defining-property(Y)") || passed(p, "defining-property(Y)"),
            "defining property for Y fails under both coaction variants");
  auto both = covariance_suite(true, true, 40, 42);
  v.require(has_finding(both, "phiL-variant-comparison"), "variant comparison not emitted");
  if (v.ok) v.detail = "comodule laws, commuting coactions, invariance pass; Y under the derived variant; " +
                       both.find("phiL-variant-comparison")->witness;
  return v;
}

Verdict graded() {
  Verdict v;
  auto r = graded_hopf_gamma(true, 40, 42);
  for (const char* id : {"counit(dX)", "counit(dY)", "graded/relations-coproduct", "graded/relations-counit",
                         "graded/relations-antipode"})
    v.require(passed(r, id), std::string(id) + " fails");
  v.require(r.ok(), first_failure(r));
  const auto* s = r.find("kappa-hat-sign-experiment");
  v.require(s && s->witness.find("consistent convention:") != std::string::npos, "sign experiment inconclusive");
  if (v.ok) v.detail = "counit values and relation invariance hold; " + s->witness.substr(s->witness.find("consistent convention:"));
  return v;
}

Verdict ansatz() {
  Verdict v;
  auto u = [](const char* n) { return UnknownScalar::unknown(n); };
  UnknownScalar h{Scalar::h()};
  auto cons = generate_consistency_system();
  auto combined = generate_covariance_system(cons, PhiVariant::Derived);
  v.require(cons.spans(u("B4") - u("B6") - h), "B4 - B6 = h not generated");
  v.require(cons.spans(u("B2") * (UnknownScalar(1) - u("A22"))), "B2(1 - A22) = 0 not generated");
  v.require(cons.spans(u("B3") - u("B5")), "B3 = B5 not generated");
  v.require(cons.spans(u("B5") - u("B8")),
            std::string("B5 = B8 not generated (the system implies B5 = -B8") +
                (cons.spans(u("B5") + u("B8")) ? ")" : " is not implied either)"));
  auto sol = solution_assignment();
  auto ver = verify_solution(combined, sol);
  v.require(ver.ok(), "solution leaves residuals: " + first_failure(ver));
  auto cmp = compare_with_gamma(sol);
  v.require(cmp.ok(), "specialized ansatz differs from GAMMA: " + first_failure(cmp));
  auto suite = ansatz_suite();
  v.require(has_finding(suite, "printed-intermediate-system"), "printed intermediate system not reported");
  if (v.ok) v.detail = "constraints generated; solution verified on " + std::to_string(combined.size()) +
                       " constraints; GAMMA rules reproduced";
  else if (ver.ok() && cmp.ok())
    v.detail += "; solution verified on " + std::to_string(combined.size()) + " constraints and GAMMA reproduced";
  return v;
}

Verdict oracle() {
  Verdict v;
  auto qp = check_quantum_plane(8);
  v.require(passed(qp, "quantum-plane"), "quantum plane through grade 8");
  auto suite = run_oracle_suite(6);
  v.require(suite.ok(), first_failure(suite));
  std::size_t derived = 0;
  for (const auto& c : suite.checks)
    if (c.id.rfind("derived ", 0) == 0 && c.status == Status::Pass) ++derived;
  std::size_t catalog_derived = 0;
  for (const auto& d : Catalog::instance().derived_status()) catalog_derived += d.accepted ? 1 : 0;
  v.require(catalog_derived > 0 && derived >= catalog_derived, "not every derived rule certified at cutoff 6");
  auto vf = check_vector_field_realization(4);
  v.require(passed(vf, "vector-fields-exact") && passed(vf, "vector-fields-series"), "vector-field relation at cutoff 4");
  for (const char* id : {"quantum-plane-negative-control", "negative-control(coefficient)", "negative-control(sign)",
                         "vector-fields-negative-control"})
    v.require(passed(suite, id), std::string(id) + " not detected");
  if (v.ok) v.detail = "quantum plane to grade 8; " + std::to_string(derived) +
                       " derived rules at cutoff 6; vector fields exact and at cutoff 4; controls rejected";
  return v;
}

Verdict parser() {
  Verdict v;
  auto r = parser_suite(1000, 42);
  v.require(r.ok(), first_failure(r));
  if (v.ok) v.detail = std::to_string(Catalog::instance().names().size()) +
                       " presentations x 1000 round-trips; fixtures parse to their stated values";
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
      {"relation suite", relations},     {"consistency derivation", consistency}, {"confluence", confluence},
      {"Hopf axioms", hopf},             {"bicovariance", bicovariance},          {"graded Hopf", graded},
      {"ansatz certification", ansatz},  {"oracle suite", oracle},                {"parser", parser},
  };
  int failed = 0;
  auto t0 = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.ok = false;
      v.detail = std::string("exception: ") + e.what();
    }
    failed += v.ok ? 0 : 1;
    std::cout << "criterion " << i + 1 << " (" << criteria[i].first << "): " << (v.ok ? "PASS" : "FAIL") << ": "
              << v.detail << "\n";
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria pass (" << s << " s)\n";
  return failed ? 1 : 0;
}
