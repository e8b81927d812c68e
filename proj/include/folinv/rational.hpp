#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace folinv {

using Integer = mpz_class;
// mpq_class keeps numerator/denominator canonical (gcd 1, positive denominator).
using Rational = mpq_class;

/// Parses "n" or "n/d" with d > 0; throws std::invalid_argument otherwise.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Exact square root when q is the square of a rational.
std::optional<Rational> rational_sqrt(const Rational& q);

/// ceil(a / 2) for any sign of a.
long long ceil_half(long long a);

} // namespace folinv
