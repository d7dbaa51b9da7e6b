#include <sstream>

#include "qplane/parser.hpp"
#include "qplane/presentations.hpp"
#include "qplane/series_oracle.hpp"

namespace qplane {

namespace {

std::string grade_text(int cutoff) { return "grade<=" + std::to_string(cutoff); }

// x = exp(X), y = x Y; returns the truncated residual of x y - E y x.
SeriesElement quantum_plane_residual(PresentationPtr base, int cutoff) {
  Grading g{{0, 1}};
  OracleAlgebra a(std::move(base), g, cutoff);
  SeriesElement x = a.exponential("X", 1, Scalar(1));
  SeriesElement y = a.multiply(x, a.gen("Y"));
  return a.truncate(a.multiply(x, y) - a.multiply(a.constant(Scalar::E()), a.multiply(y, x)));
}

std::vector<AlgElement> vect_to_hn_images(const Presentation& vect, const Presentation& hn, bool corrupt) {
  std::vector<AlgElement> img(vect.alphabet().size());
  // The relation is invariant under T2 -> f(N) T2, so the control corrupts T1.
  img[vect.letter("T1")] = parse_element(corrupt ? "(K - 1)/(E - 1)" : "(Ki - 1)/(E^-1 - 1)", hn);
  img[vect.letter("T2")] = parse_element("Ki*H", hn);
  img[vect.letter("G")] = parse_element("Ki", hn);
  img[vect.letter("Gi")] = parse_element("K", hn);
  return img;
}

}  // namespace

CheckReport check_quantum_plane(int cutoff) {
  CheckReport rep;
  rep.suite = "oracle";
  SeriesElement res = quantum_plane_residual(stated_presentation("ORACLE_XY"), cutoff);
  if (res.is_zero())
    rep.pass("quantum-plane", "x = e^X, y = e^X Y satisfy x y = E y x through " + grade_text(cutoff));
  else
    rep.fail("quantum-plane", "x y - E y x", "nonzero residual in oracle");

  // Negative control: with [X,Y] = hX the images must not satisfy the relation.
  Presentation tmp("ORACLE_BAD", stated_presentation("ORACLE_XY")->alphabet(), {});
  std::vector<CatalogRule> bad{{tmp.word({"X", "Y"}), parse_element("Y*X + h*X", tmp), Provenance::Derived, "control"}};
  auto corrupted = std::make_shared<const Presentation>("ORACLE_BAD", tmp.alphabet(), bad);
  SeriesElement bad_res = quantum_plane_residual(corrupted, cutoff);
  if (!bad_res.is_zero())
    rep.pass("quantum-plane-negative-control", "[X,Y] = hX leaves a nonzero residual, as it must");
  else
    rep.fail("quantum-plane-negative-control", "[X,Y] = hX", "corrupted relation was not detected");
  return rep;
}

CheckReport check_vector_field_realization(int cutoff) {
  CheckReport rep;
  rep.suite = "oracle";
  auto vect = get_presentation("VECT");
  auto hn = get_presentation("HN");
  AlgElement rel = parse_element("T2*T1 - E^-1*T1*T2 - T2", *vect);
  AlgElement zero;

  auto v = certify_identity("VECT", rel, zero, cutoff);
  if (v.ok) rep.pass("vector-fields-series", "T1 = (e^{-hN}-1)/(e^{-h}-1), T2 = e^{-hN} H: " + v.detail);
  else rep.fail("vector-fields-series", "T2 T1 - E^-1 T1 T2 - T2", v.detail);

  auto images = vect_to_hn_images(*vect, *hn, false);
  AlgElement mapped = substitute(rel, images, *hn);
  if (mapped.is_zero()) rep.pass("vector-fields-exact", "relation maps to 0 in HN under T1 -> (Ki-1)/(E^-1-1), T2 -> Ki H");
  else rep.fail("vector-fields-exact", "image of T2 T1 - E^-1 T1 T2 - T2", format(mapped, *hn));

  // Every VECT rule, stated or derived, must map to an identity of HN.
  std::string bad_rules;
  for (const auto& r : vect->rules()) {
    AlgElement d = substitute(AlgElement::monomial(r.lhs, 1) - r.rhs, images, *hn);
    if (!d.is_zero()) bad_rules += format_word(r.lhs, *vect) + " ";
  }
  if (bad_rules.empty()) rep.pass("vector-fields-rules-exact", std::to_string(vect->rules().size()) + " VECT rules map to identities");
  else rep.fail("vector-fields-rules-exact", bad_rules, "rules not preserved by the map to HN");

  AlgElement tg = vect->normalize(parse_element("T2*G - E^-1*G*T2", *vect));
  if (tg.is_zero()) rep.pass("vector-fields-T2G", "T2 G = E^-1 G T2 holds in VECT");
  else rep.fail("vector-fields-T2G", "T2 G - E^-1 G T2", format(tg, *vect));

  AlgElement bad = substitute(rel, vect_to_hn_images(*vect, *hn, true), *hn);
  if (!bad.is_zero()) rep.pass("vector-fields-negative-control", "T1 -> (K-1)/(E-1) violates the relation, as it must");
  else rep.fail("vector-fields-negative-control", "T1 -> (K-1)/(E-1)", "wrong realization was not detected");
  return rep;
}

CheckReport run_oracle_suite(int cutoff) {
  CheckReport rep;
  rep.suite = "oracle";
  rep.absorb(check_quantum_plane(std::max(cutoff, 8)), false);
  const Catalog& cat = Catalog::instance();
  for (const auto& name : cat.names()) {
    if (!has_realization(name)) continue;
    auto p = cat.get(name);
    for (const auto& r : p->rules()) {
      if (r.provenance != Provenance::Derived) continue;
      std::string id = "derived " + name + ": " + format_word(r.lhs, *p) + " -> " + format(r.rhs, *p);
      auto v = certify_identity(name, AlgElement::monomial(r.lhs, 1), r.rhs, cutoff);
      if (v.ok) rep.pass(id, v.detail);
      else rep.fail(id, format_word(r.lhs, *p), v.detail);
    }
  }
  for (const auto& d : cat.derived_status())
    if (!d.accepted) rep.fail("quarantined " + d.presentation + ": " + d.lhs + " -> " + d.rhs, d.lhs, d.detail);

  // Perturbed rules the oracle must reject: E replaced by its Taylor
  // polynomial of degree cutoff - 1 (wrong only at h^cutoff), and the shift
  // exponent with flipped sign.
  {
    auto p = cat.get("LIE_EXP");
    struct Control {
      const char* id;
      const char* lhs;
      const char* rhs;
    };
    std::string taylor = "(1";
    Rational fact = 1;
    for (int k = 1; k < cutoff; ++k) {
      fact *= k;
      taylor += " + h^" + std::to_string(k) + "/" + fact.get_str();
    }
    taylor += ")*Y*eX";
    const Control controls[] = {
        {"negative-control(coefficient)", "eX*Y", taylor.c_str()},
        {"negative-control(sign)", "eXi*Y", "E*Y*eXi"},
    };
    for (const auto& c : controls) {
      auto v = certify_identity("LIE_EXP", parse_element(c.lhs, *p), parse_element(c.rhs, *p), cutoff);
      std::string what = std::string(c.lhs) + " = " + c.rhs;
      if (!v.ok) rep.pass(c.id, "rejected: " + what);
      else rep.fail(c.id, what, "negative control not detected");
    }
  }

  // Differentials of exp(+-X): d(f(X)) = dX (f(X) - f(X - h))/h.
  {
    auto gamma = stated_presentation("GAMMA");
    Realization dummy = Realization::for_presentation("GAMMA", cutoff + 1);
    const OracleAlgebra& a = dummy.algebra();
    std::map<Letter, SeriesElement> d{{a.base().letter("X"), a.gen("dX")}, {a.base().letter("Y"), a.gen("dY")}};
    Grading g = a.grading();
    OracleAlgebra cmp(std::make_shared<const Presentation>(a.base()), g, cutoff);
    struct Case {
      const char* id;
      int sign;
      const char* claim;
      bool expect_ok;
    };
    const Case cases[] = {
        {"d(eX)", 1, "(1 - E^-1)/h*dX*eX", true},
        {"d(eXi)", -1, "(1 - E)/h*dX*eXi", true},
        {"d(eX)-negative-control", 1, "dX*eX", false},
    };
    for (const auto& c : cases) {
      SeriesElement lhs = apply_derivation(a, a.exponential("X", c.sign, Scalar(1)), d);
      SeriesElement rhs = dummy.image(parse_element(c.claim, *gamma));
      // The series of exp is one grade short after differentiation.
      bool ok = cmp.truncate(lhs - rhs).is_zero();
      std::string what = std::string(c.id) + " = " + c.claim;
      if (ok == c.expect_ok)
        rep.pass(c.id, c.expect_ok ? what + " through " + grade_text(cutoff) : "wrong image detected: " + what);
      else
        rep.fail(c.id, what, c.expect_ok ? "oracle disagrees" : "negative control not detected");
    }
  }
  rep.absorb(check_vector_field_realization(cutoff), false);
  return rep;
}

}  // namespace qplane
