#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cliffrep {

// Exact coefficient type. gmpxx keeps results canonical; values built from a
// numerator/denominator pair go through make_rational.
using Rational = mpq_class;

Rational make_rational(long num, long den);
Rational parse_rational(std::string_view text);  // "3", "-3/4"; throws InvalidArgument
std::string to_string(const Rational& r);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

}  // namespace cliffrep
