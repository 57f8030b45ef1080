#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace rhmap {

/// Arbitrary-precision rational, always canonical (lowest terms, positive
/// denominator) after every arithmetic operation.
using Rational = mpq_class;

/// "p/q" or "p" when the denominator is one.
std::string to_string(const Rational& q);

/// Accepts "p", "-p", "p/q"; throws Error("bad-rational") otherwise or when
/// q is zero.
Rational parse_rational(std::string_view text);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace rhmap
