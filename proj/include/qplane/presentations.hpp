#ifndef QPLANE_PRESENTATIONS_HPP
#define QPLANE_PRESENTATIONS_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qplane/term_engine.hpp"

namespace qplane {

struct UnknownPresentation : std::invalid_argument {
  explicit UnknownPresentation(const std::string& name) : std::invalid_argument("unknown presentation '" + name + "'") {}
};

struct DerivedRuleRejected : std::runtime_error {
  explicit DerivedRuleRejected(const std::string& what) : std::runtime_error(what) {}
};

/// A primitive generator U together with the group-like pair exp(+-scale*U).
struct GrouplikeSpec {
  std::string primitive;
  Scalar scale;
  std::string positive;
  std::string negative;
  /// Also emit g*g^-1 -> 1 and g^-1*g -> 1.
  bool include_inverse_pair = true;
};

/// Shift rules g*u -> E^k u*g computed from [U, u] = s*u with scale*s = k*h.
/// Generators whose adjoint image is not a multiple of themselves get no rule.
std::vector<CatalogRule> derive_grouplike_rules(const Presentation& p, const GrouplikeSpec& spec);

/// Presentation with only the relations stated in the source (no derived rules).
/// Names: LIE, LIE_EXP, GAMMA, DERIV, FORMS, VECT, VECT_ACT, HN, ORACLE_XY.
PresentationPtr stated_presentation(std::string_view name);

struct DerivedRuleStatus {
  std::string presentation;
  std::string lhs;
  std::string rhs;
  std::string derivation;
  bool accepted = false;
  std::string detail;
};

/// The validated catalog, built once on first use. Every derived rule is
/// certified by the series oracle before it is enabled; rejected rules are
/// quarantined and listed in derived_status().
class Catalog {
 public:
  static const Catalog& instance();

  PresentationPtr get(std::string_view name) const;
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<DerivedRuleStatus>& derived_status() const { return derived_; }
  int validation_cutoff() const { return cutoff_; }

 private:
  Catalog();
  std::vector<std::string> names_;
  std::vector<PresentationPtr> presentations_;
  std::vector<DerivedRuleStatus> derived_;
  int cutoff_ = 6;
};

inline PresentationPtr get_presentation(std::string_view name) { return Catalog::instance().get(name); }

/// Human-readable table of every presentation and rule with provenance.
std::string catalog_table();

}  // namespace qplane

#endif  // QPLANE_PRESENTATIONS_HPP
