#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace jmwg {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Arbitrary-precision rational, always kept in lowest terms.
using Rational = mpq_class;

/// Decimal rendering: "p" for integers, "p/q" otherwise.
std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

/// Parses "p" or "p/q" (optional leading sign). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& value);

Integer factorial(int n);
Integer binomial(int n, int k);

/// (-1)^k as an int.
constexpr int sign_power(int k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace jmwg
