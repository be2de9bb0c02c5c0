#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace haarmoments {

using BigInteger = mpz_class;

/// Exact rational, always kept in lowest terms with a positive denominator.
using BigRational = mpq_class;

/// Canonical text form: "p/q", or "p" when the denominator is 1.
std::string to_string(const BigInteger& value);
std::string to_string(const BigRational& value);

/// Parses "p", "p/q" or "-p/q"; the result is canonicalized.
/// Throws std::invalid_argument on malformed input or a zero denominator.
BigRational parse_rational(std::string_view text);

/// Decimal rendering rounded half away from zero to `digits` fractional digits.
std::string to_decimal(const BigRational& value, int digits);

BigInteger factorial(int n);
BigInteger binomial(int n, int k);

/// Rising factorial d (d+1) ... (d+n-1); 1 when n == 0.
BigInteger rising_factorial(int d, int n);

/// Returns numerator / denominator and throws std::logic_error if the
/// division is not exact.
BigInteger exact_quotient(const BigInteger& numerator, const BigInteger& denominator);

}  // namespace haarmoments
