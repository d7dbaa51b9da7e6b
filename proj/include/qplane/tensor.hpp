#ifndef QPLANE_TENSOR_HPP
#define QPLANE_TENSOR_HPP

// Tensor powers of a Z2-graded algebra with Koszul-signed multiplication.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "qplane/rewriting.hpp"
#include "qplane/term_engine.hpp"

namespace qplane {

using Slots = std::vector<Word>;

struct SlotsLess {
  bool operator()(const Slots& a, const Slots& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), DegLex{});
  }
};

template <class C>
class Tensor {
 public:
  using Terms = std::map<Slots, C, SlotsLess>;

  explicit Tensor(std::size_t arity = 2) : arity_(arity) {}

  static Tensor pure(const std::vector<LinComb<C>>& factors) {
    Tensor t(factors.size());
    Slots key(factors.size());
    C one(1);
    t.expand(factors, 0, key, one);
    return t;
  }

  std::size_t arity() const { return arity_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add(const Slots& key, const C& c) {
    if (key.size() != arity_) throw std::invalid_argument("tensor term arity mismatch");
    if (is_zero_coeff(c)) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (is_zero_coeff(it->second)) terms_.erase(it);
    }
  }

  Tensor& operator+=(const Tensor& o) {
    check_arity(o);
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  Tensor& operator-=(const Tensor& o) {
    check_arity(o);
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  Tensor& operator*=(const C& s) {
    Tensor r(arity_);
    for (const auto& [k, c] : terms_) r.add(k, c * s);
    return *this = std::move(r);
  }
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(Tensor a, const C& s) { return a *= s; }
  friend Tensor operator*(const C& s, Tensor a) { return a *= s; }
  Tensor operator-() const {
    Tensor r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
  }
  bool operator==(const Tensor& o) const { return arity_ == o.arity_ && terms_ == o.terms_; }

 private:
  static bool is_zero_coeff(const C& c) { return coeff_is_zero(c); }
  void check_arity(const Tensor& o) const {
    if (o.arity_ != arity_) throw std::invalid_argument("tensor arity mismatch");
  }
  void expand(const std::vector<LinComb<C>>& f, std::size_t slot, Slots& key, const C& coef) {
    if (slot == f.size()) {
      add(key, coef);
      return;
    }
    for (const auto& [w, c] : f[slot].terms()) {
      key[slot] = w;
      expand(f, slot + 1, key, coef * c);
    }
  }

  std::size_t arity_;
  Terms terms_;
};

using TensorElement = Tensor<Scalar>;

/// Graded algebra structure used to multiply and normalize tensor slots.
template <class C>
struct SlotAlgebra {
  std::vector<int> letter_parity;
  std::function<LinComb<C>(const LinComb<C>&)> normalize;

  int parity(const Word& w) const {
    int p = 0;
    for (char ch : w) p ^= letter_parity.at(static_cast<Letter>(ch));
    return p;
  }
};

inline SlotAlgebra<Scalar> slot_algebra(const PresentationPtr& p) {
  SlotAlgebra<Scalar> a;
  for (const auto& g : p->alphabet()) a.letter_parity.push_back(g.parity);
  a.normalize = [p](const AlgElement& e) { return p->normalize(e); };
  return a;
}

/// Normalizes every slot independently.
template <class C>
Tensor<C> tensor_normalize(const Tensor<C>& t, const SlotAlgebra<C>& alg) {
  std::unordered_map<Word, LinComb<C>> cache;
  auto nf = [&](const Word& w) -> const LinComb<C>& {
    auto it = cache.find(w);
    if (it == cache.end()) it = cache.emplace(w, alg.normalize(LinComb<C>::monomial(w, C(1)))).first;
    return it->second;
  };
  Tensor<C> r(t.arity());
  for (const auto& [key, c] : t.terms()) {
    std::vector<LinComb<C>> factors;
    factors.reserve(key.size());
    for (const auto& w : key) factors.push_back(nf(w));
    Tensor<C> piece = Tensor<C>::pure(factors);
    for (const auto& [k, pc] : piece.terms()) r.add(k, c * pc);
  }
  return r;
}

/// (a1 x ... x an)(b1 x ... x bn) = (-1)^{sum_{i>j} |a_i||b_j|} a1b1 x ... x anbn,
/// slots normalized afterwards.
template <class C>
Tensor<C> tensor_multiply(const Tensor<C>& a, const Tensor<C>& b, const SlotAlgebra<C>& alg) {
  if (a.arity() != b.arity()) throw std::invalid_argument("tensor_multiply: arity mismatch");
  const std::size_t n = a.arity();
  Tensor<C> raw(n);
  std::vector<int> pa(n), pb(n);
  for (const auto& [ka, ca] : a.terms()) {
    for (std::size_t i = 0; i < n; ++i) pa[i] = alg.parity(ka[i]);
    for (const auto& [kb, cb] : b.terms()) {
      int sign = 0;
      for (std::size_t j = 0; j < n; ++j) {
        pb[j] = alg.parity(kb[j]);
        if (!pb[j]) continue;
        for (std::size_t i = j + 1; i < n; ++i) sign ^= pa[i];
      }
      Slots key(n);
      for (std::size_t i = 0; i < n; ++i) key[i] = ka[i] + kb[i];
      C c = ca * cb;
      raw.add(key, sign ? -c : c);
    }
  }
  return tensor_normalize(raw, alg);
}

/// Embeds an algebra element as a unit-padded tensor: slot `slot` carries e.
template <class C>
Tensor<C> tensor_embed(const LinComb<C>& e, std::size_t slot, std::size_t arity) {
  std::vector<LinComb<C>> f(arity, LinComb<C>::unit());
  f.at(slot) = e;
  return Tensor<C>::pure(f);
}

/// Replaces slot `slot` of every term by the tensor f(word) (of any arity k),
/// giving arity n - 1 + k. For an odd map, the Koszul sign of passing it over
/// the preceding slots is applied.
template <class C>
Tensor<C> apply_to_slot(const Tensor<C>& t, std::size_t slot, const std::function<Tensor<C>(const Word&)>& f,
                        std::size_t image_arity, const SlotAlgebra<C>& alg, bool odd_map = false) {
  Tensor<C> r(t.arity() - 1 + image_arity);
  std::unordered_map<Word, Tensor<C>> cache;
  for (const auto& [key, c] : t.terms()) {
    auto it = cache.find(key[slot]);
    if (it == cache.end()) it = cache.emplace(key[slot], f(key[slot])).first;
    int sign = 0;
    if (odd_map)
      for (std::size_t i = 0; i < slot; ++i) sign ^= alg.parity(key[i]);
    for (const auto& [ik, ic] : it->second.terms()) {
      Slots nk;
      nk.reserve(r.arity());
      nk.insert(nk.end(), key.begin(), key.begin() + static_cast<std::ptrdiff_t>(slot));
      nk.insert(nk.end(), ik.begin(), ik.end());
      nk.insert(nk.end(), key.begin() + static_cast<std::ptrdiff_t>(slot) + 1, key.end());
      C v = c * ic;
      r.add(nk, sign ? -v : v);
    }
  }
  return tensor_normalize(r, alg);
}

/// Multiplication map: a1 x a2 -> a1 a2 (normalized).
template <class C>
LinComb<C> tensor_multiply_slots(const Tensor<C>& t, const SlotAlgebra<C>& alg) {
  LinComb<C> raw;
  for (const auto& [key, c] : t.terms()) {
    Word w;
    for (const auto& s : key) w += s;
    raw.add(w, c);
  }
  return alg.normalize(raw);
}

}  // namespace qplane

#endif  // QPLANE_TENSOR_HPP
