#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace newton_widths {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
// GMP keeps mpq values canonical (lowest terms, positive denominator).
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

using RationalVector = std::vector<Rational>;

/// Parses "p", "-p" or "p/q". Throws Error(Syntax) on anything else.
Rational parse_rational(std::string_view text);

/// Like parse_rational but also accepts decimal and scientific notation
/// ("0.25", "1e7", "2.5e-3"), converted exactly.
Rational parse_number(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& value);

double to_double(const Rational& value);

Integer floor(const Rational& value);
Integer ceil(const Rational& value);

/// Largest integer r >= 0 with r^exponent <= value (value >= 0, exponent >= 1).
Integer floor_root(const Rational& value, unsigned exponent);

Rational pow(const Rational& base, unsigned exponent);

/// Closest p/q to value over denominators 1..max_denominator.
Rational best_rational_approximation(double value, std::int64_t max_denominator);

}  // namespace newton_widths
