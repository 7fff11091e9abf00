#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>

namespace wreath {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned k = 2; k <= n; ++k) f *= k;
    return f;
}

inline BigInt big_pow(const BigInt& base, unsigned e) {
    BigInt p = 1;
    for (unsigned k = 0; k < e; ++k) p *= base;
    return p;
}

inline bool is_prime(unsigned r) {
    if (r < 2) return false;
    for (unsigned d = 2; d * d <= r; ++d)
        if (r % d == 0) return false;
    return true;
}

// All class-level formulas assume a prime exponent.
inline void require_prime(unsigned r) {
    if (!is_prime(r))
        throw std::invalid_argument("exponent r must be prime, got " + std::to_string(r));
}

}  // namespace wreath
