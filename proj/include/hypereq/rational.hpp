#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace hypereq {

// Exact rational number, always stored in canonical reduced form with a
// positive denominator (GMP maintains this through mpq arithmetic).
using Rational = mpq_class;

// Parses "p", "-p", or "p/q" into a canonical rational. Rejects anything
// else, including decimal points.
Rational parse_rational(std::string_view text);

// Canonical "p/q" rendering (denominator always printed, e.g. "3/1").
std::string format_rational(const Rational& q);

// Exact square root of a nonnegative rational, if the result is rational.
std::optional<Rational> exact_sqrt(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace hypereq
