#ifndef QPLANE_TERM_ENGINE_HPP
#define QPLANE_TERM_ENGINE_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qplane/report.hpp"
#include "qplane/rewriting.hpp"
#include "qplane/scalar.hpp"

namespace qplane {

using AlgElement = LinComb<Scalar>;

/// Unknown generator name, or a letter outside a presentation's alphabet.
/// The span is filled in when the symbol came from parsed text.
struct ForeignSymbol : std::invalid_argument {
  ForeignSymbol(std::string symbol, std::size_t offset = 0, std::size_t length = 0)
      : std::invalid_argument("unknown generator '" + symbol + "'"),
        symbol(std::move(symbol)),
        offset(offset),
        length(length) {}
  std::string symbol;
  std::size_t offset;
  std::size_t length;
};

enum class Provenance { Source, Derived };
std::string to_string(Provenance p);

struct Generator {
  std::string name;
  int parity = 0;  // 1 for differentials and one-forms
};

struct CatalogRule {
  Word lhs;
  AlgElement rhs;
  Provenance provenance = Provenance::Source;
  std::string note;
};

/// A finitely presented Z2-graded algebra: alphabet in canonical rank order
/// plus oriented rewrite rules. Immutable after construction.
class Presentation {
 public:
  struct Options {
    bool check_orientation = true;
    int max_check_degree = 4;
  };

  Presentation(std::string name, std::vector<Generator> alphabet, std::vector<CatalogRule> rules);
  Presentation(std::string name, std::vector<Generator> alphabet, std::vector<CatalogRule> rules, Options opts);

  const std::string& name() const { return name_; }
  const std::vector<Generator>& alphabet() const { return alphabet_; }
  const std::vector<CatalogRule>& rules() const { return rules_; }
  const RuleSet<Scalar>& rule_set() const { return rule_set_; }
  int max_check_degree() const { return max_check_degree_; }

  std::optional<Letter> find(std::string_view name) const;
  /// Throws ForeignSymbol for an unknown name.
  Letter letter(std::string_view name) const;
  Word word(std::initializer_list<std::string_view> names) const;
  AlgElement gen(std::string_view name) const { return AlgElement::monomial(Word(1, static_cast<char>(letter(name))), 1); }
  int parity(const Word& w) const;
  int parity(Letter l) const { return alphabet_.at(l).parity; }
  std::string word_text(const Word& w) const;

  /// Throws ForeignSymbol if `e` uses a letter outside the alphabet.
  void check_alphabet(const AlgElement& e) const;
  AlgElement normalize(const AlgElement& e) const;
  AlgElement multiply(const AlgElement& a, const AlgElement& b) const;

  /// Copy with additional rules appended (same alphabet).
  Presentation extended(std::string name, std::vector<CatalogRule> extra) const;

  std::vector<RuleRecord> rule_records() const;

 private:
  std::string name_;
  std::vector<Generator> alphabet_;
  std::vector<CatalogRule> rules_;
  RuleSet<Scalar> rule_set_;
  int max_check_degree_ = 4;
  Options opts_;
};

using PresentationPtr = std::shared_ptr<const Presentation>;

/// Algebra map defined on letters: each letter of `e` is replaced by its
/// image (an element of `target`) and products are normalized in `target`.
AlgElement substitute(const AlgElement& e, const std::vector<AlgElement>& letter_images, const Presentation& target);

/// One unresolved overlap ambiguity.
struct CriticalPair {
  Word overlap;
  AlgElement left;
  AlgElement right;
};

/// Bounded-degree local confluence: every overlap and inclusion ambiguity
/// between rule left-hand sides whose overlap word has length <= max_degree
/// is reduced both ways and compared.
std::vector<CriticalPair> critical_pairs(const Presentation& p, int max_degree);
CheckReport check_confluence(const Presentation& p, int max_degree);

}  // namespace qplane

#endif  // QPLANE_TERM_ENGINE_HPP
