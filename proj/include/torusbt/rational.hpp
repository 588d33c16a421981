#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace torusbt {

using Integer = mpz_class;

/// Exact rational. mpq_class keeps the value canonical (reduced, positive
/// denominator) as long as construction goes through make_rational().
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den = 1);

/// "num/den", denominator omitted when it is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Inverse of to_string(Rational); throws Error(ParseError).
Rational parse_rational(std::string_view text);

/// r with r^n == x exactly, or nullopt when x has no rational n-th root.
/// Requires x > 0 and n >= 1.
std::optional<Rational> rational_nth_root(const Rational& x, unsigned long n);

/// Valuation of a nonzero integer at p.
unsigned long valuation(const Integer& z, const Integer& p);

/// x with every factor of p removed from numerator and denominator.
Rational prime_to_part(const Rational& x, const Integer& p);

Integer lcm(const Integer& a, const Integer& b);

}  // namespace torusbt
