#ifndef QPLANE_PARSER_HPP
#define QPLANE_PARSER_HPP

// Text syntax for scalars, algebra elements and tensor elements.
//
//   sum     := ['-'] tterm (('+' | '-') tterm)*
//   tterm   := product ('@' product)*        tensor slots, '@' binds looser than '*'
//   product := unary (('*' | '/') unary)*    division only by scalars
//   unary   := '-' unary | power
//   power   := primary ['^' ['-'] nat]       negative powers only of scalars
//   primary := nat | 'h' | 'E' | generator | '(' sum ')'
//
// Generators use ASCII names: dX, dY for differentials, pX, pY for partial
// derivatives, eX / eXi for e^X / e^-X, K / Ki for e^{hN} / e^{-hN}, G / Gi for
// the adjoined group-like of the vector-field algebra.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "qplane/tensor.hpp"
#include "qplane/term_engine.hpp"

namespace qplane {

struct ParseError : std::invalid_argument {
  ParseError(const std::string& what, std::size_t offset, std::size_t length)
      : std::invalid_argument(what), offset(offset), length(length) {}
  std::size_t offset;
  std::size_t length;
};

using ParsedExpr = std::variant<AlgElement, TensorElement>;

/// Parses without normalizing: products are concatenations of words.
ParsedExpr parse(std::string_view text, const Presentation& p);
AlgElement parse_element(std::string_view text, const Presentation& p);
/// Accepts a plain element as a one-slot tensor only if `arity` is 1; "0" is
/// the zero tensor of any arity.
TensorElement parse_tensor(std::string_view text, const Presentation& p, std::size_t arity = 2);
/// Scalar-only syntax: integers, h, E, E^-1, + - * / ^ and parentheses.
Scalar parse_scalar(std::string_view text);

std::string format(const AlgElement& e, const Presentation& p);
std::string format(const TensorElement& t, const Presentation& p);
std::string format_word(const Word& w, const Presentation& p);

}  // namespace qplane

#endif  // QPLANE_PARSER_HPP
