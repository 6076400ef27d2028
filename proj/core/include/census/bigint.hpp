#pragma once

// Arbitrary-precision integers and rationals. Both are thin aliases over
// GMP's C++ classes; mpq_class keeps every value in lowest terms with a
// positive denominator after each arithmetic operation.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace census {

using BigInt = mpz_class;
using BigRat = mpq_class;

/// Builds num/den in canonical form. Throws std::domain_error if den == 0.
BigRat make_rat(const BigInt& num, const BigInt& den);

/// Parses an optionally signed decimal integer; throws std::invalid_argument.
BigInt parse_bigint(std::string_view text);

std::string to_string(const BigInt& value);
/// "p/q", or just "p" when the denominator is 1.
std::string to_string(const BigRat& value);

bool is_integer(const BigRat& value);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

/// Inserts thousands separators: 1677488 -> "1,677,488".
std::string with_commas(const BigInt& value);

}  // namespace census
