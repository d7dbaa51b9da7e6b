#ifndef QPLANE_SERIES_ORACLE_HPP
#define QPLANE_SERIES_ORACLE_HPP

// Independent check of exact identities by power-series expansion.
//
// Group-like generators are replaced by truncated exponential series in the
// underlying primitive generator, E by exp(h), and both sides of an identity
// are compared in a filtered quotient: every word carries a weight (sum of
// letter weights), every coefficient its h-valuation, and terms whose total
// grade exceeds the cutoff are dropped. The base rules used here are only the
// relations stated in the source, never the derived rules under test.

#include <functional>
#include <map>
#include <string>
#include <string_view>

#include "qplane/report.hpp"
#include "qplane/rewriting.hpp"
#include "qplane/scalar.hpp"
#include "qplane/term_engine.hpp"

namespace qplane {

using SeriesElement = LinComb<TruncatedSeries>;

struct Grading {
  std::vector<int> weight;  // per letter of the base presentation
  int of(const Word& w) const;
};

class OracleAlgebra {
 public:
  /// Throws std::invalid_argument if some base rule is not grade-nondecreasing,
  /// in which case truncation would not commute with rewriting.
  OracleAlgebra(PresentationPtr base, Grading grading, int cutoff);

  const Presentation& base() const { return *base_; }
  const Grading& grading() const { return grading_; }
  int cutoff() const { return cutoff_; }

  SeriesElement truncate(const SeriesElement& e) const;
  SeriesElement normalize(const SeriesElement& e) const;
  SeriesElement multiply(const SeriesElement& a, const SeriesElement& b) const;
  /// Exact element to series element (coefficients expanded, then truncated).
  SeriesElement lift(const AlgElement& e) const;
  SeriesElement gen(std::string_view name) const;
  SeriesElement constant(const Scalar& s) const;
  /// sum_{k=0}^{n} (sign*scale*U)^k / k!, truncated at the cutoff.
  SeriesElement exponential(std::string_view primitive, int sign, const Scalar& scale) const;
  /// (exp(sign*h*U) - 1)/h, computed with one extra term so that the
  /// division by h loses no precision.
  SeriesElement exponential_difference(std::string_view primitive, int sign) const;

  std::string format(const SeriesElement& e) const;

 private:
  PresentationPtr base_;
  Grading grading_;
  int cutoff_;
  RuleSet<TruncatedSeries> rules_;
};

/// Graded Leibniz extension of letter images: D(ab) = D(a) b + (-1)^{|a|} a D(b).
/// Letters without an image are sent to zero.
SeriesElement apply_derivation(const OracleAlgebra& alg, const SeriesElement& e,
                               const std::map<Letter, SeriesElement>& images);

/// Images of the letters of a catalog presentation inside an oracle algebra.
class Realization {
 public:
  /// Supported: LIE, ORACLE_XY, LIE_EXP, GAMMA, FORMS, HN, VECT.
  static Realization for_presentation(std::string_view name, int cutoff);

  const OracleAlgebra& algebra() const { return alg_; }
  const Presentation& source() const { return *source_; }
  SeriesElement image(const Word& w) const;
  SeriesElement image(const AlgElement& e) const;

 private:
  Realization(PresentationPtr source, OracleAlgebra alg) : source_(std::move(source)), alg_(std::move(alg)) {}
  PresentationPtr source_;
  OracleAlgebra alg_;
  std::vector<SeriesElement> letter_images_;
};

bool has_realization(std::string_view presentation);

struct OracleVerdict {
  bool ok = false;
  std::string detail;
};

/// Compares the realized images of lhs and rhs (elements written in the
/// alphabet of the named presentation) through the cutoff.
OracleVerdict certify_identity(std::string_view presentation, const AlgElement& lhs, const AlgElement& rhs,
                               int cutoff);

/// sum_{k=0}^{cutoff} (sign*U)^k / k! as an exact element (U^k is a normal word).
AlgElement expand_exponential(const Presentation& p, std::string_view gen, int sign, int cutoff);

/// Oracle suite: quantum-plane relation, every derived catalog rule, the
/// derived differentials of exp(+-X), the vector-field realization, and
/// negative controls that must fail.
CheckReport run_oracle_suite(int cutoff);

CheckReport check_quantum_plane(int cutoff);
CheckReport check_vector_field_realization(int cutoff);

}  // namespace qplane

#endif  // QPLANE_SERIES_ORACLE_HPP
