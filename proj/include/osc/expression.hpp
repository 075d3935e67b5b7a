#pragma once

// Text syntax for Weyl-quadratic elements.
//
//   expr := ['+'|'-'] term (('+'|'-') term)*
//   term := [rational '*'] atom
//   atom := 'K' | 'b(' int ')' | ':b(' int ')b(' int '):' | 'T(' int ')' | 'S(' int ')'
//         | 'L(' int ')' | rational
//
// L(p) is an alias of T(p); a bare rational r stands for r*K. Whitespace is
// ignored. b(0) is rejected: index 0 is the central element K.

#include "osc/quadratic.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace osc {

class ParseError : public std::invalid_argument {
public:
  ParseError(std::size_t position, const std::string& message);
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

QuadraticElement parse_expression(std::string_view text);

/// Canonical form: K, then b(m) by ascending m, then each diagonal by
/// ascending offset as c*T(d) (when its coefficient is a nonzero constant)
/// followed by its :b(a)b(b): corrections with a <= b. Diagonals with a
/// non-constant coefficient print as diag(d; P(a)), which is not parseable.
std::string to_canonical_string(const QuadraticElement& q);

}  // namespace osc
