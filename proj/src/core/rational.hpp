#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace aoforge {

using Integer = mpz_class;
using Rational = mpq_class;

// Accepts "a/b", integers and finite decimals such as "0.25".
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

// num/den in lowest terms.
Rational ratio(long num, long den);

Integer factorial(unsigned n);

}  // namespace aoforge
