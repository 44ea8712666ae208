#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace l1plan {

/// Exact rational scalar used throughout the kernel and planners.
using Rational = mpq_class;

/// Parses "p/q", integers, and finite decimals ("-1.25", "3.", ".5").
/// Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form; integers are written without a denominator.
std::string to_string(const Rational& r);

double to_double(const Rational& r);

inline Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }
inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }

inline Rational half() { return Rational(1, 2); }

}  // namespace l1plan
