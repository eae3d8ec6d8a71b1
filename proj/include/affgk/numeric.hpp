#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace affgk {

// Exact arithmetic everywhere: affine coefficient products overflow 64 bits
// well before the height bounds used by the CLI defaults.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Rat rat_pow(const Rat& base, long e)
{
    if (e == 0) return Rat(1);
    Rat b = e > 0 ? base : Rat(1) / base;
    long n = e > 0 ? e : -e;
    Rat acc(1);
    while (n > 0) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

inline Int int_pow(Int base, unsigned long e)
{
    Int acc(1);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

} // namespace affgk
