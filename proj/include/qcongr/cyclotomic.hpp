#pragma once

#include "qcongr/poly.hpp"
#include "qcongr/rational.hpp"

#include <deque>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace qcongr {

/// Conversion of a base rational into an arbitrary coefficient field.
/// Specialized for fraction-field towers in ratfun.hpp.
template <class K>
struct FromRat {
    static K get(const Rat& r) { return K(r); }
};

template <>
struct FromRat<Rat> {
    static Rat get(const Rat& r) { return r; }
};

template <class K>
K k_from_rat(const Rat& r) { return FromRat<K>::get(r); }

template <class K>
Poly<K> lift_poly(const Poly<Rat>& p) {
    std::vector<K> c;
    c.reserve(static_cast<std::size_t>(p.deg() + 1));
    for (int i = 0; i <= p.deg(); ++i) c.push_back(k_from_rat<K>(p.coeff(static_cast<std::size_t>(i))));
    return Poly<K>::from_coeffs(std::move(c));
}

template <>
inline Poly<Rat> lift_poly<Rat>(const Poly<Rat>& p) { return p; }

/// n-th cyclotomic polynomial over the rationals, computed by dividing
/// q^n - 1 by the product of the proper-divisor cyclotomics. Memoized.
inline const Poly<Rat>& cyclotomic(long n) {
    if (n < 1) throw std::invalid_argument("cyclotomic index must be positive");
    static std::deque<Poly<Rat>> cache;  // cache[d-1] = phi_d; deque keeps references stable
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    if (static_cast<long>(cache.size()) >= n && !cache[static_cast<std::size_t>(n - 1)].zero())
        return cache[static_cast<std::size_t>(n - 1)];
    if (static_cast<long>(cache.size()) < n) cache.resize(static_cast<std::size_t>(n));
    // ensure all proper divisors are present (iterative, divisors are < n)
    for (long d = 1; d < n; ++d) {
        if (n % d != 0 || !cache[static_cast<std::size_t>(d - 1)].zero()) continue;
        Poly<Rat> num = Poly<Rat>::monomial(Rat(1), static_cast<std::size_t>(d)) - Poly<Rat>(Rat(1));
        Poly<Rat> den(Rat(1));
        for (long e = 1; e < d; ++e)
            if (d % e == 0) den *= cache[static_cast<std::size_t>(e - 1)];
        cache[static_cast<std::size_t>(d - 1)] = num / den;
    }
    Poly<Rat> num = Poly<Rat>::monomial(Rat(1), static_cast<std::size_t>(n)) - Poly<Rat>(Rat(1));
    Poly<Rat> den(Rat(1));
    for (long d = 1; d < n; ++d)
        if (n % d == 0) den *= cache[static_cast<std::size_t>(d - 1)];
    cache[static_cast<std::size_t>(n - 1)] = num / den;
    return cache[static_cast<std::size_t>(n - 1)];
}

template <class K>
Poly<K> cyclotomic_k(long n) { return lift_poly<K>(cyclotomic(n)); }

inline long euler_phi(long n) {
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

}  // namespace qcongr
