#pragma once

// Text syntax for scalars and form expressions:
//
//   expr  := term { ('+' | '-') term }
//   term  := unary { ('*' | '/') unary }
//   unary := ('+' | '-') unary | power
//   power := atom { '^' atom }
//   atom  := INTEGER | IDENT | BASIS | '(' expr ')'
//
// BASIS is `e` followed by frame digits (`e127` = e^1 ^ e^2 ^ e^7). `^` is a
// power when its left side is a scalar and its right side an integer literal,
// and a wedge product otherwise. `/` only divides by a nonzero constant.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hetero/kform.hpp"
#include "hetero/scalar.hpp"

namespace hetero {

struct ExpressionOptions {
  /// Frame dimension; 0 disables basis symbols (pure scalar expressions).
  int dim = 0;
  /// When set, any identifier outside this list is an "undeclared parameter".
  const std::vector<std::string>* declared = nullptr;
  /// Position of the expression inside a larger document (for diagnostics).
  int line = 1;
  int column = 1;
};

KForm parse_form_expression(std::string_view text, const ExpressionOptions& options);
Scalar parse_scalar(std::string_view text, const ExpressionOptions& options = {});
Rational parse_rational(std::string_view text);

bool is_basis_symbol(std::string_view identifier);

}  // namespace hetero
