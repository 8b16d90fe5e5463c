#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qcongr {

/// Exact arbitrary-precision rational. Canonical form (reduced, positive
/// denominator) is maintained by GMP on every arithmetic operation.
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rat& x) { return sgn(x) == 0; }
inline bool is_one(const Rat& x) { return x == 1; }

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (sgn(base) == 0) {
        if (e < 0) throw std::domain_error("zero to a negative power");
        return Rat(0);
    }
    Rat b = e < 0 ? Rat(1) / base : base;
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    Rat acc(1);
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

inline std::string to_string(const Rat& x) { return x.get_str(); }

}  // namespace qcongr
