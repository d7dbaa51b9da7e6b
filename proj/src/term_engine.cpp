#include "qplane/term_engine.hpp"

#include <map>
#include <set>
#include <sstream>

#include "qplane/parser.hpp"

namespace qplane {

std::string to_string(Provenance p) { return p == Provenance::Source ? "source" : "derived"; }

Presentation::Presentation(std::string name, std::vector<Generator> alphabet, std::vector<CatalogRule> rules)
    : Presentation(std::move(name), std::move(alphabet), std::move(rules), Options{}) {}

Presentation::Presentation(std::string name, std::vector<Generator> alphabet, std::vector<CatalogRule> rules,
                           Options opts)
    : name_(std::move(name)),
      alphabet_(std::move(alphabet)),
      rules_(std::move(rules)),
      max_check_degree_(opts.max_check_degree),
      opts_(opts) {
  if (alphabet_.size() > 250) throw std::invalid_argument("alphabet too large");
  std::set<std::string> names;
  for (const auto& g : alphabet_) {
    if (!names.insert(g.name).second) throw std::invalid_argument("duplicate generator " + g.name);
    if (g.parity != 0 && g.parity != 1) throw std::invalid_argument("parity must be 0 or 1");
  }
  std::set<Word> seen;
  for (const auto& r : rules_) {
    if (r.lhs.empty()) throw std::invalid_argument(name_ + ": rule with empty left-hand side");
    if (!seen.insert(r.lhs).second) throw std::invalid_argument(name_ + ": duplicate left-hand side " + word_text(r.lhs));
    for (char ch : r.lhs)
      if (static_cast<Letter>(ch) >= alphabet_.size()) throw ForeignSymbol("#" + std::to_string(static_cast<Letter>(ch)));
    check_alphabet(r.rhs);
    int lp = parity(r.lhs);
    for (const auto& [w, c] : r.rhs.terms()) {
      if (opts_.check_orientation && !deglex_less(w, r.lhs))
        throw std::invalid_argument(name_ + ": rule " + word_text(r.lhs) + " is not oriented (rhs word " + word_text(w) +
                                    " is not smaller)");
      if (parity(w) != lp)
        throw std::invalid_argument(name_ + ": rule " + word_text(r.lhs) + " is not parity-homogeneous");
    }
    rule_set_.add(Rule<Scalar>{r.lhs, r.rhs});
  }
}

std::optional<Letter> Presentation::find(std::string_view name) const {
  for (std::size_t i = 0; i < alphabet_.size(); ++i)
    if (alphabet_[i].name == name) return static_cast<Letter>(i);
  return std::nullopt;
}

Letter Presentation::letter(std::string_view name) const {
  if (auto l = find(name)) return *l;
  throw ForeignSymbol(std::string(name));
}

Word Presentation::word(std::initializer_list<std::string_view> names) const {
  Word w;
  for (auto n : names) w.push_back(static_cast<char>(letter(n)));
  return w;
}

int Presentation::parity(const Word& w) const {
  int p = 0;
  for (char ch : w) p ^= alphabet_.at(static_cast<Letter>(ch)).parity;
  return p;
}

std::string Presentation::word_text(const Word& w) const {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    auto l = static_cast<Letter>(w[i]);
    if (i) s += "*";
    s += l < alphabet_.size() ? alphabet_[l].name : "#" + std::to_string(l);
  }
  return s;
}

void Presentation::check_alphabet(const AlgElement& e) const {
  for (const auto& [w, c] : e.terms())
    for (char ch : w)
      if (static_cast<Letter>(ch) >= alphabet_.size()) throw ForeignSymbol("#" + std::to_string(static_cast<Letter>(ch)));
}

AlgElement Presentation::normalize(const AlgElement& e) const {
  check_alphabet(e);
  return qplane::normalize(e, rule_set_);
}

AlgElement Presentation::multiply(const AlgElement& a, const AlgElement& b) const {
  return normalize(concat(a, b));
}

Presentation Presentation::extended(std::string name, std::vector<CatalogRule> extra) const {
  std::vector<CatalogRule> all = rules_;
  for (auto& r : extra) all.push_back(std::move(r));
  return Presentation(std::move(name), alphabet_, std::move(all), opts_);
}

std::vector<RuleRecord> Presentation::rule_records() const {
  std::vector<RuleRecord> out;
  out.reserve(rules_.size());
  for (const auto& r : rules_)
    out.push_back({name_, format_word(r.lhs, *this), format(r.rhs, *this), to_string(r.provenance)});
  return out;
}

AlgElement substitute(const AlgElement& e, const std::vector<AlgElement>& letter_images, const Presentation& target) {
  AlgElement out;
  std::map<Word, AlgElement> cache;
  for (const auto& [w, c] : e.terms()) {
    auto it = cache.find(w);
    if (it == cache.end()) {
      AlgElement img = AlgElement::unit();
      for (char ch : w) img = target.multiply(img, letter_images.at(static_cast<Letter>(ch)));
      it = cache.emplace(w, std::move(img)).first;
    }
    out += it->second * c;
  }
  return out;
}

std::vector<CriticalPair> critical_pairs(const Presentation& p, int max_degree) {
  std::vector<CriticalPair> bad;
  const auto& rules = p.rules();
  auto resolve = [&](const Word& overlap, const AlgElement& left, const AlgElement& right) {
    AlgElement l = p.normalize(left);
    AlgElement r = p.normalize(right);
    if (!(l == r)) bad.push_back({overlap, std::move(l), std::move(r)});
  };
  for (std::size_t i = 0; i < rules.size(); ++i) {
    const Word& l1 = rules[i].lhs;
    for (std::size_t j = 0; j < rules.size(); ++j) {
      const Word& l2 = rules[j].lhs;
      // Overlap ambiguities: a proper suffix of l1 equals a proper prefix of l2.
      for (std::size_t k = 1; k < l1.size() && k < l2.size(); ++k) {
        if (l1.compare(l1.size() - k, k, l2, 0, k) != 0) continue;
        Word w = l1 + l2.substr(k);
        if (static_cast<int>(w.size()) > max_degree) continue;
        Word head = l1.substr(0, l1.size() - k);
        Word tail = l2.substr(k);
        resolve(w, concat(rules[i].rhs, AlgElement::monomial(tail, 1)),
                concat(AlgElement::monomial(head, 1), rules[j].rhs));
      }
      // Inclusion ambiguities: l2 occurs inside l1.
      if (i == j || l2.size() > l1.size() || static_cast<int>(l1.size()) > max_degree) continue;
      for (std::size_t pos = l1.find(l2); pos != Word::npos; pos = l1.find(l2, pos + 1)) {
        AlgElement other = concat(concat(AlgElement::monomial(l1.substr(0, pos), 1), rules[j].rhs),
                                  AlgElement::monomial(l1.substr(pos + l2.size()), 1));
        resolve(l1, rules[i].rhs, other);
      }
    }
  }
  return bad;
}

CheckReport check_confluence(const Presentation& p, int max_degree) {
  CheckReport report;
  report.suite = "confluence:" + p.name();
  for (const auto& r : p.rule_records()) report.add_rule(r);
  auto pairs = critical_pairs(p, max_degree);
  if (pairs.empty()) {
    report.pass("local-confluence(deg<=" + std::to_string(max_degree) + ")",
                std::to_string(p.rules().size()) + " rules, all overlaps joinable");
    return report;
  }
  std::set<Word> reported;
  for (const auto& cp : pairs) {
    if (!reported.insert(cp.overlap).second) continue;
    report.fail("overlap " + format_word(cp.overlap, p), format_word(cp.overlap, p),
                "left: " + format(cp.left, p) + "; right: " + format(cp.right, p) +
                    "; difference: " + format(cp.left - cp.right, p));
  }
  return report;
}

}  // namespace qplane
