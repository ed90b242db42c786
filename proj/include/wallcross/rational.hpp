#ifndef WALLCROSS_RATIONAL_HPP
#define WALLCROSS_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace wallcross {

using Rational = mpq_class;
using Integer = mpz_class;

// "num/den" with den > 0, always reduced; the denominator is printed even when 1.
std::string to_string(const Rational& x);

// Parses "n", "n/d" or a JSON-style integer; throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// Binomial coefficient, zero when k < 0 or k > n (and for n < 0).
Integer binomial(long n, long k);

Integer factorial(long n);

// base^exp for exp >= 0. Callers implement the "negative exponent means zero"
// convention themselves via pow_or_zero.
Rational pow(const Rational& base, long exp);

// base^exp, or zero when exp < 0.
Rational pow_or_zero(const Rational& base, long exp);

// 1/n!, or zero when n < 0.
Rational inv_factorial_or_zero(long n);

// (-1)^k for any integer k.
constexpr int sign_pow(long k) { return (k % 2 == 0) ? 1 : -1; }

bool is_integer(const Rational& x);

// num/den in canonical form. mpq_class(num, den) does not reduce on its own.
Rational ratio(const Integer& num, const Integer& den);

} // namespace wallcross

#endif
