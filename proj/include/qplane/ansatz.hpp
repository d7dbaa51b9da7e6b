#ifndef QPLANE_ANSATZ_HPP
#define QPLANE_ANSATZ_HPP

// The general first-order ansatz
//   X dX = A11 dX X + B1 dX + B2 dY      X dY = A12 dY X + B3 dX + B4 dY
//   Y dX = A21 dX Y + B5 dX + B6 dY      Y dY = A22 dY Y + B7 dX + B8 dY
// with symbolic coefficients, the constraint systems it must satisfy, and
// verification of a concrete assignment.
//
// Covariance involves e^-X to the left of a differential, which the ansatz
// alone cannot reorder. Four auxiliary unknowns carry that commutation:
//   eXi dX = S11 dX eXi + S12 dY eXi     eXi dY = S21 dX eXi + S22 dY eXi
// Their compatibility with the ansatz is part of the consistency system.

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qplane/covariance.hpp"
#include "qplane/report.hpp"
#include "qplane/scalar.hpp"

namespace qplane {

inline constexpr int kPrimaryUnknowns = 12;
inline constexpr int kUnknowns = 16;

/// Names in index order: A11 A12 A21 A22 B1..B8 S11 S12 S21 S22.
const std::array<std::string, kUnknowns>& unknown_names();
/// Index of a named unknown; throws std::invalid_argument.
int unknown_index(const std::string& name);

struct MissingUnknown : std::invalid_argument {
  explicit MissingUnknown(const std::string& name)
      : std::invalid_argument("assignment does not cover unknown " + name), name(name) {}
  std::string name;
};

/// Polynomial in the unknowns with Scalar coefficients.
class UnknownScalar {
 public:
  using Monomial = std::array<std::uint8_t, kUnknowns>;
  using Terms = std::map<Monomial, Scalar>;

  UnknownScalar() = default;
  UnknownScalar(long c) : UnknownScalar(Scalar(c)) {}  // NOLINT(google-explicit-constructor)
  UnknownScalar(const Scalar& c);                      // NOLINT(google-explicit-constructor)
  static UnknownScalar unknown(int index);
  static UnknownScalar unknown(const std::string& name) { return unknown(unknown_index(name)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Whether any unknown with the given index occurs.
  bool uses(int index) const;

  UnknownScalar operator-() const;
  UnknownScalar& operator+=(const UnknownScalar& o);
  UnknownScalar& operator-=(const UnknownScalar& o);
  friend UnknownScalar operator+(UnknownScalar a, const UnknownScalar& b) { return a += b; }
  friend UnknownScalar operator-(UnknownScalar a, const UnknownScalar& b) { return a -= b; }
  friend UnknownScalar operator*(const UnknownScalar& a, const UnknownScalar& b);
  bool operator==(const UnknownScalar& o) const { return terms_ == o.terms_; }

  /// Full substitution; throws MissingUnknown if an occurring unknown is unassigned.
  Scalar evaluate(const std::map<std::string, Scalar>& values) const;
  /// Partial substitution.
  UnknownScalar substitute(const std::map<std::string, Scalar>& values) const;
  /// Divides by the coefficient of the largest monomial.
  UnknownScalar monic() const;

  std::string to_string() const;

 private:
  void add(const Monomial& m, const Scalar& c);
  Terms terms_;
};

inline bool is_zero(const UnknownScalar& s) { return s.is_zero(); }

struct Constraint {
  UnknownScalar value;  // equated to zero
  std::string origin;   // generating condition and basis term
};

struct ConstraintSystem {
  std::vector<Constraint> constraints;

  std::size_t size() const { return constraints.size(); }
  void append(const ConstraintSystem& o);
  /// Unknowns fixed by a constraint that is linear in that unknown alone.
  std::map<std::string, Scalar> pinned() const;
  /// Whether `target` lies in the Q(h,E)-linear span of the constraints once
  /// the pinned unknowns are substituted into both.
  bool spans(const UnknownScalar& target) const;
  std::string to_text() const;
};

/// Leibniz image of the Lie relation, and the Lie relation (and the exponential
/// relations) right-multiplied by each differential, pushed into
/// differential-left normal form. One constraint per basis word.
ConstraintSystem generate_consistency_system();

/// Delta_L of each of the four ansatz relations with the chosen phi_L, one
/// constraint per basis tensor. Returns `base` with these appended.
ConstraintSystem generate_covariance_system(const ConstraintSystem& base, PhiVariant variant = PhiVariant::Derived);

/// A11 = A12 = A21 = 1, A22 = E, B1 = B6 = -h, other B zero.
std::map<std::string, Scalar> solution_assignment();

/// Fills S11..S22 with exp(-M), M = [[B1, B2], [B3, B4]], when A11 = A12 = 1
/// and M is diagonal with integer multiples of h on the diagonal. Throws
/// MissingUnknown if a primary unknown is absent or the auxiliaries cannot be
/// derived and were not supplied.
std::map<std::string, Scalar> complete_assignment(const std::map<std::string, Scalar>& assignment);

/// Substitutes and reports every nonzero residual by its origin.
CheckReport verify_solution(const ConstraintSystem& s, const std::map<std::string, Scalar>& assignment);

/// The ansatz relations specialized at an assignment, compared rule by rule
/// with the GAMMA presentation.
CheckReport compare_with_gamma(const std::map<std::string, Scalar>& assignment);

/// The intermediate system as printed, as text constraints.
std::vector<std::pair<std::string, UnknownScalar>> printed_intermediate_system();

/// Generates both systems, checks the expected constraints, verifies the
/// solution and the negative controls, and compares with the printed
/// intermediate system.
CheckReport ansatz_suite();

}  // namespace qplane

#endif  // QPLANE_ANSATZ_HPP
