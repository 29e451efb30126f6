#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace jacobi::exact {

using Int = mpz_class;
// mpq_class keeps values canonical (lowest terms, positive denominator,
// zero as 0/1) after every arithmetic operation.
using Rat = mpq_class;

// Builds num/den in lowest terms. Throws ParseError on den == 0.
Rat make_rat(const Int& num, const Int& den);
Rat make_rat(long num, long den = 1);

// Accepts "n", "-n", "n/d" and finite decimals such as "-0.125".
Rat parse_rat(std::string_view text);

// "n" for integers, "n/d" otherwise.
std::string to_string(const Rat& value);

int sign(const Rat& value);
int sign(const Int& value);

Rat abs(const Rat& value);

// Nearest double; saturates to +-inf for out-of-range magnitudes.
double to_double(const Rat& value);

// Exact conversion of a finite double.
Rat from_double(double value);

// Smallest-denominator rational in the closed interval [lo, hi].
Rat simplest_between(const Rat& lo, const Rat& hi);

// 2^k as a rational (k may be negative).
Rat pow2(long k);

Rat pow(const Rat& base, unsigned long exponent);

}  // namespace jacobi::exact
