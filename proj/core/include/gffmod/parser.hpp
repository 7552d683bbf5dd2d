#pragma once

#include "gffmod/polynomial.hpp"

#include <span>
#include <string>
#include <string_view>

namespace gffmod {

// Grammar (whitespace insensitive):
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('-' | '+') unary | power
//   power   := primary ('^' unary)?
//   primary := integer | variable | '(' expr ')'
//
// `^` binds tighter than unary minus, so -p0^2 is -(p0^2). Exponents must
// evaluate to nonnegative integer constants; division is only by nonzero
// constants, which is how rational literals such as 3/4 are written.
Polynomial parse_polynomial(std::string_view expr, int dimension);

// Same grammar with caller-chosen variable names.
Polynomial parse_polynomial(std::string_view expr, std::span<const std::string> names);

}  // namespace gffmod
