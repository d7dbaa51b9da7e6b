#include "qplane/scalar.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace qplane {

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.emplace(Exponent{}, Rational(c));
}

LaurentPoly::LaurentPoly(const Rational& c) {
  if (c != 0) terms_.emplace(Exponent{}, c);
}

LaurentPoly LaurentPoly::monomial(const Rational& c, int e_deg, int h_deg) {
  LaurentPoly p;
  if (c != 0) p.terms_.emplace(Exponent{e_deg, h_deg}, c);
  return p;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{});
}

Rational LaurentPoly::constant() const {
  auto it = terms_.find(Exponent{});
  return it == terms_.end() ? Rational(0) : it->second;
}

int LaurentPoly::min_e() const {
  int m = 0;
  bool first = true;
  for (const auto& [x, c] : terms_) {
    if (first || x.e_deg < m) m = x.e_deg;
    first = false;
  }
  return m;
}

int LaurentPoly::max_e() const { return terms_.empty() ? 0 : terms_.rbegin()->first.e_deg; }

int LaurentPoly::max_h() const {
  int m = 0;
  for (const auto& [x, c] : terms_) m = std::max(m, x.h_deg);
  return m;
}

LaurentPoly LaurentPoly::shifted_e(int k) const {
  if (k == 0) return *this;
  LaurentPoly p;
  for (const auto& [x, c] : terms_) p.terms_.emplace_hint(p.terms_.end(), Exponent{x.e_deg + k, x.h_deg}, c);
  return p;
}

void LaurentPoly::add_term(const Exponent& x, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(x, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& [x, c] : p.terms_) c = -c;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [x, c] : o.terms_) add_term(x, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [x, c] : o.terms_) add_term(x, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [x, v] : terms_) v *= c;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly p;
  for (const auto& [xa, ca] : a.terms_)
    for (const auto& [xb, cb] : b.terms_)
      p.add_term(Exponent{xa.e_deg + xb.e_deg, xa.h_deg + xb.h_deg}, ca * cb);
  return p;
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) throw DivisionByZero();
  LaurentPoly rem = *this;
  LaurentPoly quot;
  const auto& [ld, lc] = divisor.leading();
  // Every step strictly lowers the leading term, so the loop terminates for
  // exact quotients; the bound only guards against misuse.
  std::size_t guard = 0;
  while (!rem.is_zero()) {
    const auto [lt, c] = rem.leading();
    if (lt.h_deg < ld.h_deg || ++guard > 100000)
      throw std::logic_error("LaurentPoly::exact_div: divisor does not divide");
    LaurentPoly q = monomial(c / lc, lt.e_deg - ld.e_deg, lt.h_deg - ld.h_deg);
    rem -= q * divisor;
    quot += q;
  }
  return quot;
}

namespace {

std::string rational_text(const Rational& r) {
  return r.get_str();
}

}  // namespace

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [x, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> parts;
    bool unit = x.e_deg == 0 && x.h_deg == 0;
    if (mag != 1 || unit) parts.push_back(rational_text(mag));
    if (x.h_deg == 1) parts.emplace_back("h");
    if (x.h_deg > 1) parts.push_back("h^" + std::to_string(x.h_deg));
    if (x.e_deg == 1) parts.emplace_back("E");
    if (x.e_deg != 0 && x.e_deg != 1) parts.push_back("E^" + std::to_string(x.e_deg));
    for (std::size_t i = 0; i < parts.size(); ++i) out << (i ? "*" : "") << parts[i];
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// gcd over Q[h][E] via primitive pseudo-remainder sequences

namespace {

using UPoly = std::vector<Rational>;  // dense in h, trimmed
using BPoly = std::vector<UPoly>;     // dense in E, trimmed

void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void trim(BPoly& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}

UPoly u_mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

UPoly u_sub(UPoly a, const UPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Quotient and remainder over Q.
std::pair<UPoly, UPoly> u_divmod(UPoly a, const UPoly& b) {
  if (b.empty()) throw DivisionByZero();
  if (a.size() < b.size()) return {{}, a};
  UPoly q(a.size() - b.size() + 1, Rational(0));
  while (a.size() >= b.size() && !a.empty()) {
    std::size_t k = a.size() - b.size();
    Rational c = a.back() / b.back();
    q[k] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + k] -= c * b[i];
    trim(a);
  }
  trim(q);
  return {q, a};
}

UPoly u_monic(UPoly p) {
  if (p.empty()) return p;
  Rational lc = p.back();
  for (auto& c : p) c /= lc;
  return p;
}

// Monic remainders keep the rational coefficients small.
UPoly u_gcd(UPoly a, UPoly b) {
  a = u_monic(std::move(a));
  b = u_monic(std::move(b));
  while (!b.empty()) {
    UPoly r = u_monic(u_divmod(a, b).second);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Rational u_eval(const UPoly& p, const Rational& x) {
  Rational r(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
  return r;
}

UPoly content(const BPoly& p) {
  UPoly g;
  for (const auto& c : p) {
    g = g.empty() ? u_monic(c) : u_gcd(g, c);
    if (g.size() == 1) break;
  }
  return g;
}

BPoly primitive_part(const BPoly& p) {
  UPoly c = content(p);
  BPoly r;
  r.reserve(p.size());
  for (const auto& x : p) r.push_back(u_divmod(x, c).first);
  return r;
}

BPoly pseudo_remainder(BPoly a, const BPoly& b) {
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t k = a.size() - b.size();
    UPoly lca = a.back();
    const UPoly& lcb = b.back();
    for (auto& c : a) c = u_mul(c, lcb);
    for (std::size_t i = 0; i < b.size(); ++i) a[i + k] = u_sub(a[i + k], u_mul(lca, b[i]));
    trim(a);
  }
  return a;
}

BPoly to_dense(const LaurentPoly& p) {
  BPoly d;
  for (const auto& [x, c] : p.terms()) {
    if (x.e_deg < 0) throw std::logic_error("poly_gcd: negative E exponent");
    if (d.size() <= static_cast<std::size_t>(x.e_deg)) d.resize(x.e_deg + 1);
    UPoly& u = d[x.e_deg];
    if (u.size() <= static_cast<std::size_t>(x.h_deg)) u.resize(x.h_deg + 1, Rational(0));
    u[x.h_deg] = c;
  }
  return d;
}

LaurentPoly from_dense(const BPoly& d) {
  LaurentPoly p;
  for (std::size_t e = 0; e < d.size(); ++e)
    for (std::size_t j = 0; j < d[e].size(); ++j)
      if (d[e][j] != 0) p += LaurentPoly::monomial(d[e][j], static_cast<int>(e), static_cast<int>(j));
  return p;
}

// True if a and b are coprime as polynomials in E over Q(h), decided on the
// image at an integer h where neither leading coefficient vanishes. The image
// gcd has at least the E-degree of the true gcd, so degree 0 is conclusive.
bool coprime_in_E(const BPoly& a, const BPoly& b) {
  for (long h0 = 2;; ++h0) {
    Rational x(h0);
    if (u_eval(a.back(), x) == 0 || u_eval(b.back(), x) == 0) continue;
    UPoly ia, ib;
    for (const auto& c : a) ia.push_back(u_eval(c, x));
    for (const auto& c : b) ib.push_back(u_eval(c, x));
    return u_gcd(ia, ib).size() <= 1;
  }
}

LaurentPoly make_monic(LaurentPoly p) {
  if (p.is_zero()) return p;
  Rational lc = p.leading().second;
  p *= Rational(1) / lc;
  return p;
}

}  // namespace

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return make_monic(b);
  if (b.is_zero()) return make_monic(a);
  if (a.is_constant() || b.is_constant()) return LaurentPoly(1);
  BPoly da = to_dense(a);
  BPoly db = to_dense(b);
  UPoly cont = u_gcd(content(da), content(db));
  BPoly pa = primitive_part(da);
  BPoly pb = primitive_part(db);
  if (pa.size() < pb.size()) std::swap(pa, pb);
  if (pb.size() > 1 && coprime_in_E(pa, pb)) pb = BPoly{UPoly{Rational(1)}};
  while (pb.size() > 1) {
    BPoly r = pseudo_remainder(pa, pb);
    if (r.empty()) break;
    pa = std::move(pb);
    pb = primitive_part(r);
  }
  if (pb.size() == 1) pb = BPoly{UPoly{Rational(1)}};  // constant in E after removing content
  for (auto& c : pb) c = u_mul(c, cont);
  return make_monic(from_dense(pb));
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero();
  canonicalize();
}

void Scalar::canonicalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  if (den_.is_constant()) {
    Rational c = den_.constant();
    if (c != 1) {
      num_ *= Rational(1) / c;
      den_ = LaurentPoly(1);
    }
    return;
  }
  int shift_num = num_.min_e();
  int shift_den = den_.min_e();
  LaurentPoly n = num_.shifted_e(-shift_num);
  LaurentPoly d = den_.shifted_e(-shift_den);
  LaurentPoly g = poly_gcd(n, d);
  if (!g.is_constant()) {
    n = n.exact_div(g);
    d = d.exact_div(g);
  }
  Rational lc = d.leading().second;
  if (lc != 1) {
    Rational inv = Rational(1) / lc;
    n *= inv;
    d *= inv;
  }
  num_ = n.shifted_e(shift_num - shift_den);
  den_ = std::move(d);
}

bool Scalar::is_negative() const { return !num_.is_zero() && num_.leading().second < 0; }

Scalar Scalar::operator-() const {
  Scalar s = *this;
  s.num_ = -s.num_;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_constant()) canonicalize();
    else if (num_.is_zero()) den_ = LaurentPoly(1);
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  canonicalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = Scalar();
  num_ = num_ * o.num_;
  if (den_.is_constant() && o.den_.is_constant()) return *this;
  den_ = den_ * o.den_;
  canonicalize();
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (num_.size() == 1 && den_.is_constant()) {
    // Monomials invert without a gcd.
    const auto& [x, c] = *num_.terms().begin();
    if (x.h_deg == 0) return Scalar(LaurentPoly::monomial(Rational(1) / c, -x.e_deg, 0));
  }
  return Scalar(den_, num_);
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  Scalar r(1);
  for (int i = 0; i < k; ++i) r *= *this;
  return r;
}

std::string Scalar::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  auto wrap = [](const LaurentPoly& p) {
    std::string s = p.to_string();
    return p.size() > 1 ? "(" + s + ")" : s;
  };
  std::string n = num_.size() > 1 ? "(" + num_.to_string() + ")" : num_.to_string();
  return n + "/" + wrap(den_);
}

std::optional<long> as_integer_multiple_of_h(const Scalar& s) {
  if (s.is_zero()) return 0L;
  if (!s.is_polynomial() || s.numerator().size() != 1) return std::nullopt;
  const auto& [x, c] = *s.numerator().terms().begin();
  if (x.e_deg != 0 || x.h_deg != 1 || c.get_den() != 1 || !c.get_num().fits_slong_p()) return std::nullopt;
  return c.get_num().get_si();
}

// ---------------------------------------------------------------------------
// TruncatedSeries

TruncatedSeries::TruncatedSeries(const Rational& c, int order) : coeffs_{c}, order_(order) { trim(); }

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs, int order)
    : coeffs_(std::move(coeffs)), order_(order) {
  if (coeffs_.size() > static_cast<std::size_t>(order_) + 1) coeffs_.resize(order_ + 1);
  trim();
}

void TruncatedSeries::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

TruncatedSeries TruncatedSeries::exp_of_h(long k, int order) {
  std::vector<Rational> c(order + 1);
  Rational term(1);
  for (int j = 0; j <= order; ++j) {
    c[j] = term;
    term = term * Rational(k) / Rational(j + 1);
  }
  return {std::move(c), order};
}

Rational TruncatedSeries::coefficient(int k) const {
  return k >= 0 && static_cast<std::size_t>(k) < coeffs_.size() ? coeffs_[k] : Rational(0);
}

bool TruncatedSeries::is_zero() const { return coeffs_.empty(); }

int TruncatedSeries::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return static_cast<int>(i);
  return -1;
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  return {coeffs_, std::min(order, order_)};
}

TruncatedSeries TruncatedSeries::shifted_down(int k) const {
  int v = valuation();
  if (v >= 0 && v < k) throw PoleAtOrigin("series has a pole after division by h^" + std::to_string(k));
  std::vector<Rational> c;
  if (coeffs_.size() > static_cast<std::size_t>(k)) c.assign(coeffs_.begin() + k, coeffs_.end());
  return {std::move(c), order_ == kUnbounded ? kUnbounded : order_ - k};
}

TruncatedSeries TruncatedSeries::inverse() const {
  if (coefficient(0) == 0) throw PoleAtOrigin("series inverse with zero constant term");
  if (order_ == kUnbounded && coeffs_.size() > 1)
    throw std::logic_error("inverse of an untruncated nonconstant series");
  int n = order_ == kUnbounded ? 0 : order_;
  std::vector<Rational> inv(n + 1, Rational(0));
  inv[0] = Rational(1) / coeffs_[0];
  for (int k = 1; k <= n; ++k) {
    Rational s(0);
    for (int j = 1; j <= k; ++j) s += coefficient(j) * inv[k - j];
    inv[k] = -s * inv[0];
  }
  return {std::move(inv), order_};
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries s = *this;
  for (auto& c : s.coeffs_) c = -c;
  return s;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  order_ = std::min(order_, o.order_);
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  if (coeffs_.size() > static_cast<std::size_t>(order_) + 1) coeffs_.resize(order_ + 1);
  trim();
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) { return *this += -o; }

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  int order = std::min(a.order_, b.order_);
  if (a.coeffs_.empty() || b.coeffs_.empty()) return {Rational(0), order};
  std::size_t n = std::min(a.coeffs_.size() + b.coeffs_.size() - 1, static_cast<std::size_t>(order) + 1);
  std::vector<Rational> c(n, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size() && i < n; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size() && i + j < n; ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return {std::move(c), order};
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
  // Equal up to the common precision.
  int n = std::min(order_, o.order_);
  std::size_t top = std::max(coeffs_.size(), o.coeffs_.size());
  for (std::size_t k = 0; k < top && static_cast<int>(k) <= n; ++k)
    if (coefficient(static_cast<int>(k)) != o.coefficient(static_cast<int>(k))) return false;
  return true;
}

std::string TruncatedSeries::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    Rational c = coeffs_[k];
    out << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    Rational m = abs(c);
    if (k == 0 || m != 1) out << m.get_str() << (k ? "*" : "");
    if (k == 1) out << "h";
    if (k > 1) out << "h^" << k;
    first = false;
  }
  if (first) out << "0";
  if (order_ != kUnbounded) out << " + O(h^" << order_ + 1 << ")";
  return out.str();
}

namespace {

TruncatedSeries series_of_poly(const LaurentPoly& p, int order) {
  TruncatedSeries s(Rational(0), order);
  std::map<int, TruncatedSeries> exp_cache;
  for (const auto& [x, c] : p.terms()) {
    if (x.h_deg > order) continue;
    auto it = exp_cache.find(x.e_deg);
    if (it == exp_cache.end()) it = exp_cache.emplace(x.e_deg, TruncatedSeries::exp_of_h(x.e_deg, order)).first;
    std::vector<Rational> shifted(order + 1, Rational(0));
    for (int j = 0; j + x.h_deg <= order; ++j) shifted[j + x.h_deg] = c * it->second.coefficient(j);
    s += TruncatedSeries(std::move(shifted), order);
  }
  return s;
}

}  // namespace

TruncatedSeries to_series(const Scalar& a, int order) {
  if (order < 0) throw std::invalid_argument("to_series: negative order");
  if (a.is_polynomial()) {
    TruncatedSeries s = series_of_poly(a.numerator(), order);
    return s;
  }
  int precision = order + a.denominator().max_h() + 4;
  TruncatedSeries den;
  int v = -1;
  while (true) {
    den = series_of_poly(a.denominator(), precision);
    v = den.valuation();
    if (v >= 0 && v <= precision - order) break;
    if (precision > 4096) throw PoleAtOrigin("denominator vanishes to excessive order at h = 0");
    precision *= 2;
  }
  TruncatedSeries num = series_of_poly(a.numerator(), precision);
  int vn = num.valuation();
  if (vn >= 0 && vn < v) throw PoleAtOrigin("non-cancelling pole at h = 0 in " + a.to_string());
  TruncatedSeries q = num.shifted_down(v) * den.shifted_down(v).inverse();
  return q.truncated(order);
}

}  // namespace qplane
