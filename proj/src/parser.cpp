#include "qplane/parser.hpp"

#include <cctype>
#include <vector>

namespace qplane {

namespace {

enum class Tok { Num, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, At, End };

struct Token {
  Tok kind;
  std::size_t offset;
  std::size_t length;
  std::string_view text;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char ch = s[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Tok::Num, start, i - start, s.substr(start, i - start)});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      out.push_back({Tok::Ident, start, i - start, s.substr(start, i - start)});
      continue;
    }
    Tok k;
    switch (ch) {
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '/': k = Tok::Slash; break;
      case '^': k = Tok::Caret; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      case '@': k = Tok::At; break;
      default: throw ParseError(std::string("unexpected character '") + ch + "'", start, 1);
    }
    ++i;
    out.push_back({k, start, 1, s.substr(start, 1)});
  }
  out.push_back({Tok::End, s.size(), 0, {}});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, const Presentation* p) : text_(text), toks_(lex(text)), pres_(p) {}

  TensorElement parse_all() {
    if (peek().kind == Tok::End) throw ParseError("empty expression", 0, text_.size());
    TensorElement t = sum();
    if (peek().kind != Tok::End) throw ParseError("unexpected token '" + std::string(peek().text) + "'", peek().offset, peek().length);
    return t;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  void expect(Tok k, const char* what) {
    if (!accept(k)) throw ParseError(std::string("expected ") + what, peek().offset, peek().length);
  }

  TensorElement sum() {
    std::size_t start = peek().offset;
    bool negate = accept(Tok::Minus);
    TensorElement acc = tensor_term();
    if (negate) acc = -acc;
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      bool minus = next().kind == Tok::Minus;
      std::size_t term_start = peek().offset;
      TensorElement t = tensor_term();
      if (t.arity() != acc.arity())
        throw ParseError("terms with different numbers of tensor slots", term_start, peek().offset - term_start);
      if (minus) acc -= t;
      else acc += t;
    }
    (void)start;
    return acc;
  }

  TensorElement tensor_term() {
    std::vector<AlgElement> slots;
    slots.push_back(product());
    while (accept(Tok::At)) slots.push_back(product());
    return TensorElement::pure(slots);
  }

  AlgElement product() {
    AlgElement acc = unary();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      bool divide = next().kind == Tok::Slash;
      const Token& at = peek();
      std::size_t start = at.offset;
      AlgElement rhs = unary();
      if (divide) {
        auto s = as_scalar(rhs);
        if (!s) throw ParseError("division by a non-scalar", start, toks_[pos_ - 1].offset + toks_[pos_ - 1].length - start);
        if (s->is_zero()) throw ParseError("division by zero", start, toks_[pos_ - 1].offset + toks_[pos_ - 1].length - start);
        acc *= s->inverse();
      } else {
        acc = concat(acc, rhs);
      }
    }
    return acc;
  }

  AlgElement unary() {
    if (accept(Tok::Minus)) return -unary();
    return power();
  }

  AlgElement power() {
    std::size_t start = peek().offset;
    AlgElement base = primary();
    if (!accept(Tok::Caret)) return base;
    bool negative = accept(Tok::Minus);
    const Token& n = peek();
    if (n.kind != Tok::Num) throw ParseError("expected exponent", n.offset, n.length);
    next();
    if (n.length > 4) throw ParseError("exponent too large", n.offset, n.length);
    int k = std::stoi(std::string(n.text));
    if (negative) {
      auto s = as_scalar(base);
      if (!s || s->is_zero())
        throw ParseError("negative power of a non-invertible factor", start, n.offset + n.length - start);
      return AlgElement::constant(s->pow(-k));
    }
    AlgElement r = AlgElement::unit();
    for (int i = 0; i < k; ++i) r = concat(r, base);
    return r;
  }

  AlgElement primary() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::Num: return AlgElement::constant(Scalar(Rational(std::string(t.text))));
      case Tok::Ident: {
        if (t.text == "h") return AlgElement::constant(Scalar::h());
        if (t.text == "E") return AlgElement::constant(Scalar::E());
        if (!pres_) throw ForeignSymbol(std::string(t.text), t.offset, t.length);
        auto l = pres_->find(t.text);
        if (!l) throw ForeignSymbol(std::string(t.text), t.offset, t.length);
        return AlgElement::monomial(Word(1, static_cast<char>(*l)), 1);
      }
      case Tok::LParen: {
        std::size_t start = t.offset;
        TensorElement inner = sum();
        expect(Tok::RParen, "')'");
        if (inner.arity() != 1)
          throw ParseError("tensor expression inside parentheses", start, toks_[pos_ - 1].offset + 1 - start);
        AlgElement e;
        for (const auto& [k, c] : inner.terms()) e.add(k[0], c);
        return e;
      }
      case Tok::End: throw ParseError("unexpected end of input", t.offset, 0);
      default: throw ParseError("unexpected token '" + std::string(t.text) + "'", t.offset, t.length);
    }
  }

  static std::optional<Scalar> as_scalar(const AlgElement& e) {
    if (e.is_zero()) return Scalar();
    if (e.size() == 1 && e.terms().begin()->first.empty()) return e.terms().begin()->second;
    return std::nullopt;
  }

  std::string_view text_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const Presentation* pres_;
};

AlgElement to_element(const TensorElement& t) {
  AlgElement e;
  for (const auto& [k, c] : t.terms()) e.add(k[0], c);
  return e;
}

bool is_compound(const Scalar& s) { return !s.is_polynomial() || s.numerator().size() > 1; }

// Text for |c| * w where the caller has already emitted the sign.
std::string term_text(const Scalar& c, const Word& w, const Presentation& p) {
  if (w.empty()) {
    std::string s = c.to_string();
    return is_compound(c) ? "(" + s + ")" : s;
  }
  std::string ws = format_word(w, p);
  if (c.is_one()) return ws;
  std::string cs = c.to_string();
  if (c.is_polynomial() && c.numerator().size() > 1) cs = "(" + cs + ")";
  return cs + "*" + ws;
}

}  // namespace

ParsedExpr parse(std::string_view text, const Presentation& p) {
  TensorElement t = Parser(text, &p).parse_all();
  if (t.arity() == 1) return to_element(t);
  return t;
}

AlgElement parse_element(std::string_view text, const Presentation& p) {
  TensorElement t = Parser(text, &p).parse_all();
  if (t.arity() != 1) throw ParseError("expected an algebra element, found a tensor", 0, text.size());
  return to_element(t);
}

TensorElement parse_tensor(std::string_view text, const Presentation& p, std::size_t arity) {
  TensorElement t = Parser(text, &p).parse_all();
  // "0" is the zero tensor of any arity.
  if (t.is_zero()) return TensorElement(arity);
  if (t.arity() != arity)
    throw ParseError("expected " + std::to_string(arity) + " tensor slots, found " + std::to_string(t.arity()), 0,
                     text.size());
  return t;
}

Scalar parse_scalar(std::string_view text) {
  AlgElement e = to_element(Parser(text, nullptr).parse_all());
  if (e.is_zero()) return Scalar();
  return e.terms().begin()->second;
}

std::string format_word(const Word& w, const Presentation& p) { return p.word_text(w); }

std::string format(const AlgElement& e, const Presentation& p) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
    const auto& [w, c] = *it;
    bool neg = c.is_negative();
    if (first) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    out += term_text(neg ? -c : c, w, p);
    first = false;
  }
  return out;
}

std::string format(const TensorElement& t, const Presentation& p) {
  if (t.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = t.terms().rbegin(); it != t.terms().rend(); ++it) {
    const auto& [k, c] = *it;
    bool neg = c.is_negative();
    if (first) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    Scalar mag = neg ? -c : c;
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (i) out += " @ ";
      out += i == 0 ? term_text(mag, k[0], p) : format_word(k[i], p);
    }
    first = false;
  }
  return out;
}

}  // namespace qplane
