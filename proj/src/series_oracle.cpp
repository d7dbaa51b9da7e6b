#include "qplane/series_oracle.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "qplane/parser.hpp"
#include "qplane/presentations.hpp"

namespace qplane {

int Grading::of(const Word& w) const {
  int g = 0;
  for (char ch : w) g += weight.at(static_cast<Letter>(ch));
  return g;
}

OracleAlgebra::OracleAlgebra(PresentationPtr base, Grading grading, int cutoff)
    : base_(std::move(base)), grading_(std::move(grading)), cutoff_(cutoff) {
  if (grading_.weight.size() != base_->alphabet().size()) throw std::invalid_argument("grading size mismatch");
  for (const auto& r : base_->rules()) {
    LinComb<TruncatedSeries> rhs;
    int lg = grading_.of(r.lhs);
    for (const auto& [w, c] : r.rhs.terms()) {
      TruncatedSeries s = to_series(c, cutoff_);
      if (s.is_zero()) continue;
      if (grading_.of(w) + s.valuation() < lg)
        throw std::invalid_argument("oracle base rule " + base_->word_text(r.lhs) + " lowers the filtration grade");
      rhs.add(w, s);
    }
    rules_.add(Rule<TruncatedSeries>{r.lhs, std::move(rhs)});
  }
}

SeriesElement OracleAlgebra::truncate(const SeriesElement& e) const {
  SeriesElement r;
  for (const auto& [w, c] : e.terms()) {
    int g = grading_.of(w);
    if (g > cutoff_) continue;
    // Coefficients above h^(cutoff-g) lie in the dropped part of the
    // filtration; the series keeps full precision so that later rewriting,
    // which trades word weight for powers of h, stays exact.
    const auto& cs = c.coefficients();
    std::size_t keep = std::min(cs.size(), static_cast<std::size_t>(cutoff_ - g + 1));
    r.add(w, TruncatedSeries(std::vector<Rational>(cs.begin(), cs.begin() + keep), cutoff_));
  }
  return r;
}

SeriesElement OracleAlgebra::normalize(const SeriesElement& e) const {
  return truncate(qplane::normalize(truncate(e), rules_));
}

SeriesElement OracleAlgebra::multiply(const SeriesElement& a, const SeriesElement& b) const {
  return normalize(concat(a, b));
}

SeriesElement OracleAlgebra::lift(const AlgElement& e) const {
  SeriesElement r;
  for (const auto& [w, c] : e.terms()) r.add(w, to_series(c, cutoff_));
  return truncate(r);
}

SeriesElement OracleAlgebra::gen(std::string_view name) const {
  return SeriesElement::monomial(Word(1, static_cast<char>(base_->letter(name))), TruncatedSeries(1));
}

SeriesElement OracleAlgebra::constant(const Scalar& s) const {
  return SeriesElement::constant(to_series(s, cutoff_));
}

SeriesElement OracleAlgebra::exponential(std::string_view primitive, int sign, const Scalar& scale) const {
  Word u(1, static_cast<char>(base_->letter(primitive)));
  AlgElement e;
  Scalar c(1);
  Word w;
  for (int k = 0; k <= cutoff_; ++k) {
    e.add(w, c);
    w += u;
    c = c * scale * Scalar(sign) / Scalar(k + 1);
  }
  return normalize(lift(e));
}

SeriesElement OracleAlgebra::exponential_difference(std::string_view primitive, int sign) const {
  Word u(1, static_cast<char>(base_->letter(primitive)));
  AlgElement e;
  Scalar c(sign);  // sign^k h^(k-1) / k!
  Word w = u;
  for (int k = 1; k <= cutoff_ + 1; ++k) {
    e.add(w, c);
    w += u;
    c = c * Scalar(sign) * Scalar::h() / Scalar(k + 1);
  }
  return normalize(lift(e));
}

std::string OracleAlgebra::format(const SeriesElement& e) const {
  if (e.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
    out << (first ? "" : " + ") << "(" << it->second.to_string() << ")*" << base_->word_text(it->first);
    first = false;
  }
  return out.str();
}

SeriesElement apply_derivation(const OracleAlgebra& alg, const SeriesElement& e,
                               const std::map<Letter, SeriesElement>& images) {
  SeriesElement raw;
  const Presentation& p = alg.base();
  for (const auto& [w, c] : e.terms()) {
    int sign = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      auto l = static_cast<Letter>(w[i]);
      auto it = images.find(l);
      if (it != images.end()) {
        SeriesElement left = SeriesElement::monomial(w.substr(0, i), sign ? -c : c);
        SeriesElement right = SeriesElement::monomial(w.substr(i + 1), TruncatedSeries(1));
        raw += concat(concat(left, it->second), right);
      }
      sign ^= p.parity(l);
    }
  }
  return alg.normalize(raw);
}

// ---------------------------------------------------------------------------
// Realizations

namespace {

struct OracleSetup {
  std::string base;
  std::vector<std::pair<std::string, int>> weights;
};

std::optional<OracleSetup> setup_for(std::string_view name) {
  if (name == "LIE" || name == "ORACLE_XY" || name == "LIE_EXP") return OracleSetup{"ORACLE_XY", {{"X", 1}}};
  if (name == "GAMMA" || name == "FORMS") return OracleSetup{"GAMMA", {{"X", 1}}};
  if (name == "HN" || name == "VECT") return OracleSetup{"HN", {}};
  return std::nullopt;
}

}  // namespace

bool has_realization(std::string_view presentation) { return setup_for(presentation).has_value(); }

Realization Realization::for_presentation(std::string_view name, int cutoff) {
  auto setup = setup_for(name);
  if (!setup) throw std::invalid_argument("no series realization for presentation " + std::string(name));
  PresentationPtr base = stated_presentation(setup->base);
  Grading g;
  g.weight.assign(base->alphabet().size(), 0);
  for (const auto& [n, wt] : setup->weights) g.weight[base->letter(n)] = wt;
  Realization r(stated_presentation(name), OracleAlgebra(base, g, cutoff));
  const OracleAlgebra& a = r.alg_;
  for (const auto& gen : r.source_->alphabet()) {
    const std::string& n = gen.name;
    SeriesElement img;
    if (n == "eX") img = a.exponential("X", 1, Scalar(1));
    else if (n == "eXi") img = a.exponential("X", -1, Scalar(1));
    else if (n == "K") img = a.exponential("N", 1, Scalar::h());
    else if (n == "Ki") img = a.exponential("N", -1, Scalar::h());
    else if (n == "G") img = a.exponential("N", -1, Scalar::h());
    else if (n == "Gi") img = a.exponential("N", 1, Scalar::h());
    else if (n == "T1")
      img = a.multiply(a.exponential_difference("N", -1), a.constant(Scalar::h() / (Scalar::E_inv() - 1)));
    else if (n == "T2") img = a.multiply(a.exponential("N", -1, Scalar::h()), a.gen("H"));
    else if (n == "w1") img = a.multiply(a.constant((1 - Scalar::E_inv()) / Scalar::h()), a.gen("dX"));
    else if (n == "w2") img = a.multiply(a.exponential("X", 1, Scalar(1)), a.gen("dY"));
    else img = a.gen(n);
    r.letter_images_.push_back(std::move(img));
  }
  return r;
}

SeriesElement Realization::image(const Word& w) const {
  SeriesElement r = SeriesElement::unit();
  for (char ch : w) r = alg_.multiply(r, letter_images_.at(static_cast<Letter>(ch)));
  return r;
}

SeriesElement Realization::image(const AlgElement& e) const {
  source_->check_alphabet(e);
  SeriesElement r;
  for (const auto& [w, c] : e.terms()) r += image(w) * to_series(c, alg_.cutoff());
  return alg_.truncate(r);
}

namespace {

const Realization& cached_realization(std::string_view name, int cutoff) {
  static std::mutex mu;
  static std::map<std::pair<std::string, int>, std::unique_ptr<Realization>> cache;
  std::lock_guard lock(mu);
  auto key = std::make_pair(std::string(name), cutoff);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_unique<Realization>(Realization::for_presentation(name, cutoff))).first;
  return *it->second;
}

}  // namespace

namespace {

// Smallest k such that every coefficient times h^k is regular at h = 0.
int pole_order(const AlgElement& e) {
  int k = 0;
  for (const auto& [w, c] : e.terms()) {
    for (;; ++k) {
      if (k > 16) throw PoleAtOrigin("pole of order > 16 at h = 0");
      try {
        to_series(c * Scalar::h().pow(k), 0);
        break;
      } catch (const PoleAtOrigin&) {
      }
    }
  }
  return k;
}

}  // namespace

OracleVerdict certify_identity(std::string_view presentation, const AlgElement& lhs, const AlgElement& rhs,
                               int cutoff) {
  // Poles are cleared by a common power of h, computed with that many extra
  // grades so the comparison still covers the requested range.
  int k = std::max(pole_order(lhs), pole_order(rhs));
  Scalar clear = Scalar::h().pow(k);
  const Realization& r = cached_realization(presentation, cutoff + k);
  SeriesElement d = r.algebra().truncate(r.image(lhs * clear) - r.image(rhs * clear));
  if (d.is_zero()) return {true, "agrees through grade " + std::to_string(cutoff)};
  return {false, "residual " + r.algebra().format(d)};
}

AlgElement expand_exponential(const Presentation& p, std::string_view gen, int sign, int cutoff) {
  Word u(1, static_cast<char>(p.letter(gen)));
  AlgElement e;
  Rational c = 1;
  Word w;
  for (int k = 0; k <= cutoff; ++k) {
    e.add(w, Scalar(c));
    w += u;
    c = c * sign / (k + 1);
  }
  return e;
}

}  // namespace qplane
