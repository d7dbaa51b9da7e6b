#ifndef QPLANE_COVARIANCE_HPP
#define QPLANE_COVARIANCE_HPP

// Left and right coactions on the first-order calculus over GAMMA, the
// exterior derivative, and the graded Hopf structure built from them.

#include <stdexcept>
#include <string>
#include <vector>

#include "qplane/coalgebra.hpp"
#include "qplane/report.hpp"
#include "qplane/tensor.hpp"

namespace qplane {

struct OutOfDomain : std::invalid_argument {
  explicit OutOfDomain(const std::string& what) : std::invalid_argument(what) {}
};

enum class PhiVariant { Printed, Derived };
std::string to_string(PhiVariant v);

struct CoactionTables {
  PhiVariant variant = PhiVariant::Derived;
  PresentationPtr gamma;
  HopfTables lie;  // coproduct of the even generators, realized on GAMMA
  TensorElement phiL_dX, phiL_dY, phiR_dX, phiR_dY;
};

CoactionTables coaction_tables(PhiVariant variant);

/// Exterior derivative on GAMMA: X -> dX, Y -> dY, e^{+-X} by the certified
/// images, extended by the graded Leibniz rule. The result is normalized.
AlgElement differential(const AlgElement& e);

/// Delta_L and Delta_R. Each word is the product of the coproducts of its even
/// letters and the coaction images of its differentials, with Koszul signs.
/// Unless `allow_products` is set, words must carry exactly one differential.
TensorElement delta_L(const AlgElement& e, const CoactionTables& t, bool allow_products = false);
TensorElement delta_R(const AlgElement& e, const CoactionTables& t, bool allow_products = false);

/// Comodule laws, the compatibility of the two coactions, the defining
/// property (id x d) Delta(a) = Delta_L(da), invariance of the GAMMA
/// relations, and parity of the coaction images, for one variant.
CheckReport check_bicovariance(PhiVariant variant, int samples = 40, std::uint64_t seed = 7);

/// Runs the requested variants. The derived variant is authoritative; the
/// printed one contributes findings only.
CheckReport covariance_suite(bool printed, bool derived, int samples = 40, std::uint64_t seed = 7);

/// The sign convention relating the graded antipode to the differential.
enum class KappaSign { Plus, Minus };

/// Graded coproduct, counit and antipode on GAMMA (derived coaction variant).
/// kappa-hat(dX) = -dX as printed; kappa-hat(dY) = +-d(kappa(Y)).
struct GradedTables {
  KappaSign sign;
  HopfTables tables;
};
GradedTables graded_gamma_tables(KappaSign sign);
/// The printed kappa-hat(dY) with the printed kappa-hat(dX).
GradedTables graded_gamma_tables_printed();

/// Counit values, relation invariance under the graded maps, and the sign
/// experiment for kappa-hat o d = +- d o kappa.
CheckReport graded_hopf_gamma(bool report_both_signs = true, int samples = 40, std::uint64_t seed = 11);

/// d applied to the Lie relation, and to the first-order relations.
CheckReport consistency_derivation();

}  // namespace qplane

#endif  // QPLANE_COVARIANCE_HPP
