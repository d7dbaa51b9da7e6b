#ifndef QPLANE_SCALAR_HPP
#define QPLANE_SCALAR_HPP

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qplane {

using Rational = mpq_class;

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero scalar") {}
};

struct PoleAtOrigin : std::domain_error {
  explicit PoleAtOrigin(const std::string& what) : std::domain_error(what) {}
};

/// Exponent of a monomial h^h_deg * E^e_deg. The E exponent may be negative.
struct Exponent {
  int e_deg = 0;
  int h_deg = 0;
  auto operator<=>(const Exponent&) const = default;
};

/// Sparse polynomial in h with Laurent dependence on E, rational coefficients.
/// E*E^-1 never appears as a separate entity: exponents simply add.
class LaurentPoly {
 public:
  using Terms = std::map<Exponent, Rational>;

  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(const Rational& c);
  static LaurentPoly monomial(const Rational& c, int e_deg, int h_deg);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant value, zero if the polynomial is zero. Only meaningful if is_constant().
  Rational constant() const;
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  int min_e() const;
  int max_e() const;
  int max_h() const;
  /// Leading term under lex order (E-degree first, then h-degree).
  const std::pair<const Exponent, Rational>& leading() const { return *terms_.rbegin(); }

  LaurentPoly shifted_e(int k) const;
  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

  /// Exact division; `divisor` must divide `*this` with E-exponents treated polynomially.
  LaurentPoly exact_div(const LaurentPoly& divisor) const;

  std::string to_string() const;

 private:
  void add_term(const Exponent& x, const Rational& c);
  Terms terms_;
};

/// Greatest common divisor of two polynomials with nonnegative E-exponents,
/// normalized to leading coefficient one. gcd(0, 0) = 0.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

class TruncatedSeries;

/// Element of Q(h, E) with E invertible, kept in canonical form:
/// numerator and denominator coprime, denominator free of E factors and monic.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long c) : num_(c) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(const Rational& c) : num_(c) {}
  explicit Scalar(LaurentPoly num) : num_(std::move(num)) {}
  Scalar(LaurentPoly num, LaurentPoly den);

  static Scalar h() { return Scalar(LaurentPoly::monomial(1, 0, 1)); }
  static Scalar E() { return Scalar(LaurentPoly::monomial(1, 1, 0)); }
  static Scalar E_inv() { return Scalar(LaurentPoly::monomial(1, -1, 0)); }

  const LaurentPoly& numerator() const { return num_; }
  const LaurentPoly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_constant() && num_ == LaurentPoly(1); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_rational_constant() const { return den_.is_constant() && num_.is_constant(); }
  /// Sign of the leading numerator coefficient; used when printing.
  bool is_negative() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }

  Scalar inverse() const;
  Scalar pow(int k) const;

  std::string to_string() const;

 private:
  void canonicalize();
  LaurentPoly num_;
  LaurentPoly den_{1};
};

inline bool is_zero(const Scalar& s) { return s.is_zero(); }

/// Power series in h truncated after h^order.
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  TruncatedSeries(long c) : TruncatedSeries(Rational(c), kUnbounded) {}  // NOLINT
  TruncatedSeries(const Rational& c, int order);
  TruncatedSeries(std::vector<Rational> coeffs, int order);

  static constexpr int kUnbounded = 1 << 20;

  /// Exponential series of k*h.
  static TruncatedSeries exp_of_h(long k, int order);

  int order() const { return order_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(int k) const;
  bool is_zero() const;
  /// Index of the first nonzero coefficient, or -1 for zero.
  int valuation() const;

  TruncatedSeries truncated(int order) const;
  /// Divides by h^k; requires valuation >= k. The order drops by k.
  TruncatedSeries shifted_down(int k) const;
  TruncatedSeries inverse() const;

  TruncatedSeries operator-() const;
  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  bool operator==(const TruncatedSeries& o) const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
  int order_ = kUnbounded;
};

inline bool is_zero(const TruncatedSeries& s) { return s.is_zero(); }

/// Taylor expansion in h after substituting E = exp(h).
TruncatedSeries to_series(const Scalar& a, int order);

/// Integer n with s == n*h, if one exists.
std::optional<long> as_integer_multiple_of_h(const Scalar& s);

}  // namespace qplane

#endif  // QPLANE_SCALAR_HPP
