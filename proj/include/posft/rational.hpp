#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace posft {

using Int = mpz_class;

// Exact rational numbers. mpq_class keeps values canonical: reduced to
// lowest terms, denominator > 0, zero stored as 0/1.
using Rational = mpq_class;

/// -1, 0 or +1.
int sign_of(const Rational& q);

/// Exact conversion of a long double to a rational (long doubles are dyadic).
Rational exact_rational(long double x);

/// Round x to the nearest multiple of 2^-bits, ties away from zero.
/// The rounding is symmetric under negation, which the domain scans rely on.
Rational snap_dyadic(long double x, unsigned bits);

/// Parse a plain decimal literal ("-0.0488517", "3", "1e-3") exactly.
Rational rational_from_decimal(std::string_view text);

/// Rational -> long double with ~106 bits of precision (two-double split).
long double to_long_double(const Rational& q);

std::string to_string(const Rational& q);

}  // namespace posft
