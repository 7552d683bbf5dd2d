#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace gffmod {

using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

// Accepts "7", "-3/4", "+2/6" (canonicalized). Throws ParseError otherwise.
Rational parse_rational(std::string_view text);

// Canonical "p/q" or "p" form.
std::string to_string(const Rational& value);

inline double to_double(const Rational& value) { return value.get_d(); }

int sign(const Rational& value);

Rational rational_pow(const Rational& base, unsigned exponent);

}  // namespace gffmod
