#ifndef QPLANE_COALGEBRA_HPP
#define QPLANE_COALGEBRA_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qplane/report.hpp"
#include "qplane/tensor.hpp"
#include "qplane/term_engine.hpp"

namespace qplane {

struct IncompleteTable : std::invalid_argument {
  explicit IncompleteTable(const std::string& what) : std::invalid_argument(what) {}
};

/// Generator images of coproduct, counit and antipode. Coproduct and counit
/// extend multiplicatively, the antipode as a graded anti-homomorphism.
struct HopfTables {
  PresentationPtr presentation;
  std::vector<std::optional<TensorElement>> delta;
  std::vector<std::optional<Scalar>> eps;
  std::vector<std::optional<AlgElement>> kappa;

  /// Images given in the text syntax; every slot is normalized.
  static HopfTables from_text(PresentationPtr p, const std::map<std::string, std::string>& delta,
                              const std::map<std::string, std::string>& eps,
                              const std::map<std::string, std::string>& kappa);
  /// Copy with one antipode image replaced.
  HopfTables with_antipode(std::string_view gen, std::string_view image) const;
};

enum class AntipodeVariant { Consistent, Printed };

/// Built-in tables for LIE (realized on LIE_EXP), FORMS, VECT and HN. The
/// printed variant differs only for FORMS, where the printed image of w2
/// has the opposite overall sign.
HopfTables hopf_tables(std::string_view presentation, AntipodeVariant variant = AntipodeVariant::Consistent);

TensorElement coproduct(const AlgElement& e, const HopfTables& t);
Scalar counit(const AlgElement& e, const HopfTables& t);
AlgElement antipode(const AlgElement& e, const HopfTables& t);

/// Helpers shared with the graded checks.
TensorElement coproduct_word(const Word& w, const HopfTables& t);
/// (f x g) applied slot-wise is left to the caller; these apply one map to
/// one slot of a tensor of any arity.
TensorElement delta_on_slot(const TensorElement& x, std::size_t slot, const HopfTables& t);

/// Pseudorandom normalized elements of degree <= max_degree.
std::vector<AlgElement> random_elements(const Presentation& p, int count, int max_degree, std::uint64_t seed);

/// Coassociativity, counit and antipode laws on every generator and on
/// `samples` seeded random elements; multiplicativity of the coproduct;
/// annihilation of every defining relation by the coproduct, counit and
/// antipode; group-like checks for G and K where present.
CheckReport check_hopf_axioms(const HopfTables& t, int samples, std::uint64_t seed);

/// Runs check_hopf_axioms on the consistent tables and, for FORMS, records
/// how the printed antipode of w2 fares.
CheckReport hopf_suite(std::string_view presentation, int samples, std::uint64_t seed);

}  // namespace qplane

#endif  // QPLANE_COALGEBRA_HPP
