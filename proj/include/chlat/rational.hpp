// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace chlat {

/// Exact arbitrary-precision fraction. Values produced by this library are
/// always canonical (lowest terms, positive denominator).
using Rational = mpq_class;

/// num/den in lowest terms. Throws PreconditionError if den == 0.
Rational frac(long num, long den);

/// Parses "3", "-3", "3/7", "-6/14". Throws ParseError on anything else.
Rational parse_rational(std::string_view text);

/// "3" or "3/7".
std::string to_string(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }

}  // namespace chlat
