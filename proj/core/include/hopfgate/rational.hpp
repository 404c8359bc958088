#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <string>

namespace hopfgate {

// Exact rational scalar. GMP keeps products of many +-1 entries from
// overflowing; mpq_class is always stored in lowest terms with positive
// denominator, which matches the canonical-form invariant we rely on.
using Rational = mpq_class;

inline int sign_of(const Rational& q) { return sgn(q); }

/// Parse "p/q", an integer, or a plain decimal such as "-1.25".
Rational rational_from_string(const std::string& s);

/// Canonical text form: "p" or "p/q" with q > 1.
std::string rational_to_string(const Rational& q);

/// Nearest rational with denominator dividing 2^20.
Rational rationalize(double x);

} // namespace hopfgate
