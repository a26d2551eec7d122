#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace polyodds {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational probability. cpp_rational keeps values canonical: lowest
// terms, denominator strictly positive.
using BigRat = boost::multiprecision::cpp_rational;

// "num/den", or just "num" when the denominator is 1.
std::string to_fraction_string(const BigRat& q);

// Decimal rendering with the given number of significant digits.
// Presentation only; exactness lives in the rational.
std::string to_decimal_string(const BigRat& q, int significant_digits = 12);

double to_double(const BigRat& q);

}  // namespace polyodds
