#include "polyodds/rational.hpp"

#include <cstdio>

namespace polyodds {

std::string to_fraction_string(const BigRat& q) {
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::string to_decimal_string(const BigRat& q, int significant_digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", significant_digits, to_double(q));
    return buf;
}

double to_double(const BigRat& q) { return q.convert_to<double>(); }

}  // namespace polyodds
