#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gradalg {

/// Exact rational scalar. GMP keeps it canonical: gcd(|p|, q) = 1, q >= 1.
using Rat = mpq_class;

/// p/q in lowest terms.
Rat make_rat(long p, long q = 1);

/// Always renders "p/q", including q = 1.
std::string to_string(const Rat& r);

/// Accepts "p/q", "p" and optional leading sign. Throws ParseError.
Rat parse_rat(std::string_view text);

/// Truncated decimal rendering with the given number of fractional digits.
std::string to_decimal(const Rat& r, unsigned digits = 6);

} // namespace gradalg
