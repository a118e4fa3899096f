#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lefkit {

// GMP keeps mpq_class canonical: lowest terms, positive denominator, 0 == 0/1.
using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "a" or "a/b" (optional sign, decimal digits). Throws Error{Parse}
/// on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

} // namespace lefkit
