#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace ptrans {

using Integer = mpz_class;
using Rational = mpq_class;

Integer factorial(int n);
Integer binomial(int n, int k);

/// "p/q", or just "p" when the denominator is one.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Converts a canonicalized rational with unit denominator; throws otherwise.
Integer to_integer(const Rational& q);

} // namespace ptrans
