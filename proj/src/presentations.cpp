#include "qplane/presentations.hpp"

#include <sstream>

#include "qplane/parser.hpp"
#include "qplane/series_oracle.hpp"

namespace qplane {

namespace {

Generator even(std::string n) { return {std::move(n), 0}; }
Generator odd(std::string n) { return {std::move(n), 1}; }

class Builder {
 public:
  Builder(std::string name, std::vector<Generator> alphabet)
      : name_(std::move(name)), alphabet_(alphabet), scratch_(name_, std::move(alphabet), {}) {}

  Builder& rule(std::string_view lhs, std::string_view rhs, std::string note,
                Provenance prov = Provenance::Source) {
    AlgElement l = parse_element(lhs, scratch_);
    if (l.size() != 1 || !l.terms().begin()->second.is_one())
      throw std::logic_error("rule left-hand side must be a single word: " + std::string(lhs));
    rules_.push_back({l.terms().begin()->first, parse_element(rhs, scratch_), prov, std::move(note)});
    return *this;
  }

  Builder& add(std::vector<CatalogRule> extra) {
    for (auto& r : extra) rules_.push_back(std::move(r));
    return *this;
  }

  const Presentation& alphabet_only() const { return scratch_; }

  PresentationPtr build(Presentation::Options o = {}) const {
    return std::make_shared<const Presentation>(name_, alphabet_, rules_, o);
  }

 private:
  std::string name_;
  std::vector<Generator> alphabet_;
  Presentation scratch_;
  std::vector<CatalogRule> rules_;
};

void lie_relation(Builder& b) { b.rule("X*Y", "Y*X + h*Y", "[X,Y] = hY"); }

void exp_pair(Builder& b) {
  b.rule("eX*eXi", "1", "e^X e^-X = 1");
  b.rule("eXi*eX", "1", "e^-X e^X = 1");
}

void gamma_relations(Builder& b) {
  lie_relation(b);
  b.rule("X*dX", "dX*X - h*dX", "[dX,X] = h dX");
  b.rule("X*dY", "dY*X", "[dY,X] = 0");
  b.rule("Y*dX", "dX*Y - h*dY", "Y dX = dX Y - h dY");
  b.rule("Y*dY", "E*dY*Y", "Y dY = e^h dY Y");
  b.rule("dX*dX", "0", "dX^2 = 0");
  b.rule("dY*dY", "0", "dY^2 = 0");
  b.rule("dY*dX", "-dX*dY", "dX dY = -dY dX");
}

void vect_relations(Builder& b) {
  b.rule("T2*T1", "E^-1*T1*T2 + T2", "T2 T1 = e^-h T1 T2 + T2");
  b.rule("G", "1 + (E^-1 - 1)*T1", "group-like G = 1 + (e^-h - 1) T1");
}

PresentationPtr build_stated(std::string_view name) {
  if (name == "LIE" || name == "ORACLE_XY") {
    Builder b(std::string(name), {even("Y"), even("X")});
    lie_relation(b);
    return b.build();
  }
  if (name == "LIE_EXP") {
    Builder b("LIE_EXP", {even("Y"), even("X"), even("eX"), even("eXi")});
    lie_relation(b);
    exp_pair(b);
    return b.build();
  }
  if (name == "GAMMA") {
    Builder b("GAMMA", {odd("dX"), odd("dY"), even("Y"), even("X"), even("eX"), even("eXi")});
    gamma_relations(b);
    exp_pair(b);
    return b.build();
  }
  if (name == "DERIV") {
    Builder b("DERIV", {odd("dX"), odd("dY"), even("Y"), even("X"), even("pX"), even("pY")});
    gamma_relations(b);
    b.rule("pX*X", "X*pX + h/(1 - E^-1) - h*pX", "[pX, X]");
    b.rule("pX*Y", "Y*pX", "[pX, Y] = 0");
    b.rule("pY*X", "X*pY", "[pY, X] = 0");
    b.rule("pY*Y", "E*Y*pY + E + (1 - E)*pX", "[pY, Y]");
    b.rule("pY*pX", "pX*pY", "partial derivatives commute");
    b.rule("pX*dX", "E*dX*pX - E*dX", "pX dX");
    b.rule("pX*dY", "E*dY*pX - E*dY", "pX dY");
    b.rule("pY*dX", "dX*pY", "pY dX");
    b.rule("pY*dY", "E*dY*pY + (E - 1)^2/h*dX*pX + E*(1 - E)/h*dX", "pY dY");
    return b.build();
  }
  if (name == "FORMS") {
    Builder b("FORMS", {odd("w2"), odd("w1"), even("Y"), even("X"), even("eX"), even("eXi")});
    lie_relation(b);
    b.rule("X*w1", "w1*X - h*w1", "[w1, X] = h w1");
    b.rule("Y*w1", "w1*Y - (1 - E^-1)*w2*eXi", "[w1, Y] = (1 - e^-h) e^-X w2");
    b.rule("X*w2", "w2*X", "[w2, X] = 0");
    b.rule("Y*w2", "w2*Y", "[w2, Y] = 0");
    b.rule("w1*w2", "-E*w2*w1", "w1 w2 = -e^h w2 w1");
    b.rule("w1*w1", "0", "w1^2 = 0");
    b.rule("w2*w2", "0", "w2^2 = 0");
    exp_pair(b);
    return b.build();
  }
  if (name == "HN") {
    Builder b("HN", {even("H"), even("N"), even("K"), even("Ki")});
    b.rule("N*H", "H*N - H", "[H, N] = H");
    return b.build();
  }
  if (name == "VECT") {
    Builder b("VECT", {even("T1"), even("Gi"), even("T2"), even("G")});
    vect_relations(b);
    return b.build();
  }
  if (name == "VECT_ACT") {
    Builder b("VECT_ACT", {even("Y"), even("X"), even("eX"), even("eXi"), even("T1"), even("Gi"), even("T2"),
                           even("G")});
    lie_relation(b);
    exp_pair(b);
    vect_relations(b);
    b.rule("T1*X", "X*T1 + h/(1 - E^-1) - h*T1", "[T1, X] = h/(1 - e^-h) (1 + (e^-h - 1) T1)");
    b.rule("T1*Y", "Y*T1", "[T1, Y] = 0");
    b.rule("T2*X", "X*T2", "[T2, X] = 0");
    b.rule("T2*Y", "Y*T2 + eXi + (E^-1 - 1)*eXi*T1", "[T2, Y] = e^-X (1 + (e^-h - 1) T1)");
    return b.build();
  }
  throw UnknownPresentation(std::string(name));
}

// Re-expresses a rule in another presentation with the same generator names.
CatalogRule translate(const CatalogRule& r, const Presentation& from, const Presentation& to) {
  CatalogRule out = r;
  out.lhs.clear();
  for (char ch : r.lhs) out.lhs.push_back(static_cast<char>(to.letter(from.alphabet().at(static_cast<Letter>(ch)).name)));
  out.rhs = parse_element(format(r.rhs, from), to);
  return out;
}

}  // namespace

std::vector<CatalogRule> derive_grouplike_rules(const Presentation& p, const GrouplikeSpec& spec) {
  const Letter u0 = p.letter(spec.primitive);
  const Letter gp = p.letter(spec.positive);
  const Letter gn = p.letter(spec.negative);
  std::vector<CatalogRule> out;
  auto emit = [&](Letter g, Letter u, long k) {
    std::ostringstream note;
    note << "exp(" << (g == gp ? "" : "-") << spec.primitive << ") " << p.alphabet()[u].name
         << " exp(" << (g == gp ? "-" : "") << spec.primitive << ") = E^" << k << " " << p.alphabet()[u].name;
    Word gu{static_cast<char>(g), static_cast<char>(u)};
    Word ug{static_cast<char>(u), static_cast<char>(g)};
    if (g > u)
      out.push_back({gu, AlgElement::monomial(ug, Scalar::E().pow(static_cast<int>(k))), Provenance::Derived, note.str()});
    else
      out.push_back({ug, AlgElement::monomial(gu, Scalar::E().pow(static_cast<int>(-k))), Provenance::Derived, note.str()});
  };
  for (Letter u = 0; u < p.alphabet().size(); ++u) {
    if (u == gp || u == gn) continue;
    Word uw(1, static_cast<char>(u));
    Word u0w(1, static_cast<char>(u0));
    AlgElement ad = p.normalize(AlgElement::monomial(u0w + uw, 1) - AlgElement::monomial(uw + u0w, 1));
    Scalar s;
    if (!ad.is_zero()) {
      if (ad.size() != 1 || ad.terms().begin()->first != uw) continue;
      s = ad.terms().begin()->second;
    }
    auto k = as_integer_multiple_of_h(spec.scale * s);
    if (!k) continue;
    emit(gp, u, *k);
    emit(gn, u, -*k);
  }
  if (spec.include_inverse_pair) {
    Word a{static_cast<char>(gp), static_cast<char>(gn)};
    Word b{static_cast<char>(gn), static_cast<char>(gp)};
    out.push_back({a, AlgElement::unit(), Provenance::Derived, spec.positive + " is inverse to " + spec.negative});
    out.push_back({b, AlgElement::unit(), Provenance::Derived, spec.negative + " is inverse to " + spec.positive});
  }
  return out;
}

PresentationPtr stated_presentation(std::string_view name) { return build_stated(name); }

Catalog::Catalog() {
  auto add = [&](PresentationPtr p) {
    names_.push_back(p->name());
    presentations_.push_back(std::move(p));
  };
  // Certifies each candidate against the oracle and keeps the survivors.
  auto certified = [&](const Presentation& base, std::vector<CatalogRule> candidates, const std::string& how) {
    std::vector<CatalogRule> kept;
    for (auto& r : candidates) {
      DerivedRuleStatus st{base.name(), format_word(r.lhs, base), format(r.rhs, base), how, false, ""};
      try {
        auto v = certify_identity(base.name(), AlgElement::monomial(r.lhs, 1), r.rhs, cutoff_);
        st.accepted = v.ok;
        st.detail = v.detail;
      } catch (const std::exception& e) {
        st.detail = std::string("oracle error: ") + e.what();
      }
      if (st.accepted) kept.push_back(std::move(r));
      derived_.push_back(std::move(st));
    }
    return kept;
  };
  const std::string shift = "conjugation by a group-like element";

  add(build_stated("LIE"));

  auto lie_exp = build_stated("LIE_EXP");
  auto lie_exp_derived = certified(*lie_exp, derive_grouplike_rules(*lie_exp, {"X", Scalar(1), "eX", "eXi", false}), shift);
  add(std::make_shared<const Presentation>(lie_exp->extended("LIE_EXP", lie_exp_derived)));

  auto gamma = build_stated("GAMMA");
  auto gamma_derived = certified(*gamma, derive_grouplike_rules(*gamma, {"X", Scalar(1), "eX", "eXi", false}), shift);
  add(std::make_shared<const Presentation>(gamma->extended("GAMMA", gamma_derived)));

  add(build_stated("DERIV"));

  auto forms = build_stated("FORMS");
  auto forms_derived = certified(*forms, derive_grouplike_rules(*forms, {"X", Scalar(1), "eX", "eXi", false}), shift);
  add(std::make_shared<const Presentation>(forms->extended("FORMS", forms_derived)));

  auto vect = build_stated("VECT");
  std::vector<CatalogRule> vect_candidates;
  {
    const Presentation& v = *vect;
    Builder tmp("VECT", v.alphabet());
    tmp.rule("Gi*T1", "(1 - Gi)/(E^-1 - 1)", "Gi is inverse to G = 1 + (E^-1 - 1) T1", Provenance::Derived);
    tmp.rule("T1*Gi", "(1 - Gi)/(E^-1 - 1)", "Gi is inverse to G = 1 + (E^-1 - 1) T1", Provenance::Derived);
    tmp.rule("T2*Gi", "E*Gi*T2", "T2 G = E^-1 G T2, conjugated by Gi", Provenance::Derived);
    vect_candidates = tmp.build({false, 4})->rules();
  }
  auto vect_derived = certified(*vect, vect_candidates, "inverse of the adjoined group-like");
  add(std::make_shared<const Presentation>(vect->extended("VECT", vect_derived)));

  auto act = build_stated("VECT_ACT");
  std::vector<CatalogRule> act_extra;
  for (const auto& r : lie_exp_derived) act_extra.push_back(translate(r, *lie_exp, *act));
  for (const auto& r : vect_derived) act_extra.push_back(translate(r, *vect, *act));
  add(std::make_shared<const Presentation>(act->extended("VECT_ACT", act_extra)));

  auto hn = build_stated("HN");
  auto hn_derived = certified(*hn, derive_grouplike_rules(*hn, {"N", Scalar::h(), "K", "Ki", true}), shift);
  add(std::make_shared<const Presentation>(hn->extended("HN", hn_derived)));

  add(build_stated("ORACLE_XY"));
}

const Catalog& Catalog::instance() {
  static const Catalog catalog;
  return catalog;
}

PresentationPtr Catalog::get(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return presentations_[i];
  throw UnknownPresentation(std::string(name));
}

std::string catalog_table() {
  const Catalog& c = Catalog::instance();
  std::ostringstream out;
  for (const auto& name : c.names()) {
    auto p = c.get(name);
    out << name << "  [";
    for (std::size_t i = 0; i < p->alphabet().size(); ++i)
      out << (i ? " < " : "") << p->alphabet()[i].name << (p->alphabet()[i].parity ? "'" : "");
    out << "]\n";
    for (const auto& r : p->rules())
      out << "  " << format_word(r.lhs, *p) << " -> " << format(r.rhs, *p) << "   (" << to_string(r.provenance)
          << (r.note.empty() ? "" : "; " + r.note) << ")\n";
  }
  bool header = false;
  for (const auto& d : c.derived_status()) {
    if (d.accepted) continue;
    if (!header) out << "quarantined derived rules:\n";
    header = true;
    out << "  " << d.presentation << ": " << d.lhs << " -> " << d.rhs << "  " << d.detail << "\n";
  }
  return out.str();
}

}  // namespace qplane
