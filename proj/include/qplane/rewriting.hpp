#ifndef QPLANE_REWRITING_HPP
#define QPLANE_REWRITING_HPP

// Coefficient-generic linear combinations of words and oriented rewriting.
//
// A word is a byte string whose bytes are letter indices into an alphabet;
// the alphabet index doubles as the letter's rank, so the degree-lexicographic
// order below is the presentation's canonical monomial order.
//
// The coefficient type C must provide: C(long), +=, -=, *, unary -, and a
// free function is_zero(const C&).

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qplane {

using Letter = unsigned char;
using Word = std::string;

struct DegLex {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
      auto x = static_cast<Letter>(a[i]);
      auto y = static_cast<Letter>(b[i]);
      if (x != y) return x < y;
    }
    return false;
  }
};

inline bool deglex_less(const Word& a, const Word& b) { return DegLex{}(a, b); }

struct NonTermination : std::runtime_error {
  explicit NonTermination(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {
template <class C>
bool coeff_is_zero(const C& c) {
  return is_zero(c);
}
}  // namespace detail
using detail::coeff_is_zero;

template <class C>
class LinComb {
 public:
  using Terms = std::map<Word, C, DegLex>;

  LinComb() = default;
  static LinComb unit() { return monomial(Word{}, C(1)); }
  static LinComb monomial(const Word& w, const C& c) {
    LinComb e;
    e.add(w, c);
    return e;
  }
  static LinComb constant(const C& c) { return monomial(Word{}, c); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  C coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? C(0) : it->second;
  }

  void add(const Word& w, const C& c) {
    if (is_zero_coeff(c)) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (is_zero_coeff(it->second)) terms_.erase(it);
    }
  }
  void add(Word&& w, const C& c) {
    if (is_zero_coeff(c)) return;
    auto [it, inserted] = terms_.try_emplace(std::move(w), c);
    if (!inserted) {
      it->second += c;
      if (is_zero_coeff(it->second)) terms_.erase(it);
    }
  }

  LinComb& operator+=(const LinComb& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
  }
  LinComb& operator*=(const C& s) {
    if (is_zero_coeff(s)) {
      terms_.clear();
      return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
      it->second = it->second * s;
      if (is_zero_coeff(it->second)) it = terms_.erase(it);
      else ++it;
    }
    return *this;
  }
  LinComb operator-() const {
    LinComb r = *this;
    for (auto& [w, c] : r.terms_) c = -c;
    return r;
  }
  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(LinComb a, const C& s) { return a *= s; }
  friend LinComb operator*(const C& s, LinComb a) { return a *= s; }
  bool operator==(const LinComb& o) const { return terms_ == o.terms_; }

  /// Product in the free algebra (concatenation), no normalization.
  friend LinComb concat(const LinComb& a, const LinComb& b) {
    LinComb r;
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_) r.add(wa + wb, ca * cb);
    return r;
  }

  template <class D, class F>
  LinComb<D> map_coefficients(F&& f) const {
    LinComb<D> r;
    for (const auto& [w, c] : terms_) r.add(w, f(c));
    return r;
  }

 private:
  static bool is_zero_coeff(const C& c) { return coeff_is_zero(c); }
  Terms terms_;
};

template <class C>
struct Rule {
  Word lhs;
  LinComb<C> rhs;
};

/// Rule set with a first-letter index for redex search.
template <class C>
class RuleSet {
 public:
  RuleSet() = default;
  explicit RuleSet(std::vector<Rule<C>> rules) {
    for (auto& r : rules) add(std::move(r));
  }

  void add(Rule<C> r) {
    if (r.lhs.empty()) throw std::invalid_argument("rule with empty left-hand side");
    auto first = static_cast<Letter>(r.lhs[0]);
    if (by_first_.size() <= first) by_first_.resize(first + 1);
    by_first_[first].push_back(rules_.size());
    rules_.push_back(std::move(r));
  }

  const std::vector<Rule<C>>& rules() const { return rules_; }
  std::size_t size() const { return rules_.size(); }

  /// Leftmost redex: (position, rule index). Among rules matching at the same
  /// position the earliest-added wins.
  std::optional<std::pair<std::size_t, std::size_t>> find_redex(const Word& w) const {
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
      auto first = static_cast<Letter>(w[pos]);
      if (first >= by_first_.size()) continue;
      for (std::size_t idx : by_first_[first]) {
        const Word& lhs = rules_[idx].lhs;
        if (lhs.size() <= w.size() - pos && w.compare(pos, lhs.size(), lhs) == 0) return std::pair{pos, idx};
      }
    }
    return std::nullopt;
  }

 private:
  std::vector<Rule<C>> rules_;
  std::vector<std::vector<std::size_t>> by_first_;
};

inline constexpr std::size_t kDefaultStepBudget = 1'000'000;

/// Rewrites to normal form. Words are processed largest-first; since every
/// rule replaces a word by strictly smaller ones, each word is rewritten at
/// most once after all its contributions have been collected.
template <class C>
LinComb<C> normalize(const LinComb<C>& e, const RuleSet<C>& rules, std::size_t budget = kDefaultStepBudget) {
  typename LinComb<C>::Terms work = e.terms();
  LinComb<C> result;
  std::size_t steps = 0;
  while (!work.empty()) {
    auto node = work.extract(std::prev(work.end()));
    Word& w = node.key();
    const C& c = node.mapped();
    if (is_zero(c)) continue;
    auto redex = rules.find_redex(w);
    if (!redex) {
      result.add(std::move(w), c);
      continue;
    }
    if (++steps > budget)
      throw NonTermination("normalize: step budget of " + std::to_string(budget) + " rule applications exceeded");
    const auto& [pos, idx] = *redex;
    const Rule<C>& rule = rules.rules()[idx];
    for (const auto& [rw, rc] : rule.rhs.terms()) {
      Word nw = w.substr(0, pos);
      nw += rw;
      nw.append(w, pos + rule.lhs.size(), Word::npos);
      C nc = c * rc;
      if (is_zero(nc)) continue;
      auto [it, inserted] = work.try_emplace(std::move(nw), nc);
      if (!inserted) {
        it->second += nc;
        if (is_zero(it->second)) work.erase(it);
      }
    }
  }
  return result;
}

template <class C>
bool is_normal_word(const Word& w, const RuleSet<C>& rules) {
  return !rules.find_redex(w).has_value();
}

}  // namespace qplane

#endif  // QPLANE_REWRITING_HPP
