#pragma once

#include <gmpxx.h>

#include <string>

namespace mockrad {

/// Exact rational number; all q-series bookkeeping stays in this type.
using Rational = mpq_class;

/// Parses "p/q" or "p". Throws std::invalid_argument on malformed input or q = 0.
Rational parse_rational(const std::string& s);

/// Canonical form "p" or "p/q" with q > 0 and gcd(p,q) = 1.
std::string to_string(const Rational& r);

}  // namespace mockrad
