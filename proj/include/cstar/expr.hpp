#pragma once

#include <string_view>
#include <vector>

#include "cstar/element.hpp"

namespace cstar {

// Syntax tree of the expression language:
//
//   element := ["-"] term (("+" | "-") term)*
//   term    := factor ("*" factor)*
//   factor  := atom ("'")*            postfix ' is the adjoint
//   atom    := rational | "i" | "r2" | gen | "(" element ")"
//   gen     := "s" digits             generator index, 1-based
//
// Rationals are written p or p/q with no interior whitespace; "1" and "0"
// are the unit and zero, "i" the imaginary unit, "r2" the square root of 2.
// Whitespace is otherwise insignificant; adjoint binds tighter than product.
struct Expr {
  enum class Kind { Scalar, Generator, Sum, Difference, Product, Adjoint, Negate };

  Kind kind = Kind::Scalar;
  ExactScalar value;          // Scalar
  int index = 0;              // Generator
  std::vector<Expr> children; // the rest
};

// Parses against alphabet size n. Throws SyntaxError (with line:column in
// the message) or IndexOutOfRange for s_k with k outside 1..n.
Expr parse(std::string_view text, int n);

CuntzElement evaluate(const Expr &expr, int n);

// parse + evaluate + normalize.
CuntzElement parse_element(std::string_view text, int n);

} // namespace cstar
