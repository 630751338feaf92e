#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace ripscrush {

/**
 * Exact rational scalar. GMP keeps every value in lowest terms with a
 * positive denominator, so equality is structural.
 */
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/**
 * Parse "p", "p/q" or "-p/q". Throws std::invalid_argument on anything else,
 * including a zero denominator.
 */
Rational parse_rational(std::string_view text);

/** Canonical "p/q" (or "p" when the denominator is one). */
std::string to_string(const Rational& value);

Rational floor(const Rational& value);
Rational ceil(const Rational& value);

/** Numerator and denominator as int64; throws std::overflow_error if they do not fit. */
std::int64_t numerator_i64(const Rational& value);
std::int64_t denominator_i64(const Rational& value);

}  // namespace ripscrush
