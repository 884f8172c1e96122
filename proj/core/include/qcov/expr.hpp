#pragma once

// ASCII surface syntax for elements and two-leg tensors.
//
//   expr   := ['-'] tterm (('+' | '-') tterm)*
//   tterm  := term ('(x)' term)?
//   term   := factor ('*'? factor)*
//   factor := atom ("'")* ('^' integer)?
//   atom   := 'al' | 'bt' | 'gt' | 't' | 'z' | 'q' | rational
//           | '(' expr ')' | 'tensor(' expr ',' expr ')'
//
// Whitespace is ignored.  '(x)' is the infix spelling of tensor(,) used by the
// printer.  At parameter n, bt means gt^n and q means t^n.

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "qcov/algebra.hpp"
#include "qcov/tensor.hpp"

namespace qcov {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

struct Expr {
  enum class Kind { alpha, beta, gamma, t, zeta, q, rational, star, power, product, sum, negate, tensor };

  Kind kind = Kind::rational;
  Rational value;     // rational literal
  int exponent = 0;   // power
  std::size_t position = 0;
  std::vector<std::shared_ptr<const Expr>> args;
};

using ExprPtr = std::shared_ptr<const Expr>;
using Value = std::variant<Element, TensorElement>;

ExprPtr parse(const std::string& text);

/// Evaluates in A_n with coefficients in R_n.
Value elaborate(const Expr& e, int n);

Value parse_value(const std::string& text, int n);
/// Throws DomainError when the text denotes a tensor.
Element parse_element(const std::string& text, int n);
/// Throws DomainError when the text denotes a plain element.
TensorElement parse_tensor(const std::string& text, int n);

}  // namespace qcov
