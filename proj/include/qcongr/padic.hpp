#pragma once

#include "qcongr/rational.hpp"

#include <limits>

namespace qcongr {

/// Sentinel returned by valuation(0, p).
inline constexpr long kValuationInfinity = std::numeric_limits<long>::max();

bool is_prime(long n);

/// nu with x = p^nu * u where u is a p-unit; kValuationInfinity for x = 0.
long valuation(const Rat& x, long p);

/// x (x+1) ... (x+n-1); empty product is 1.
Rat pochhammer_rational(const Rat& x, long n);

/// Second-order harmonic number: sum of 1/i^2 for 1 <= i <= m.
Rat harmonic2(long m);

struct PadicContext {
    long p = 0;
    long k = 1;
    long work_cap = 100000000L;
};

/// p^k as an exact integer.
mpz_class padic_modulus(const PadicContext& ctx);

/// Residue of a rational with p-unit denominator, in [0, p^k).
mpz_class residue_mod(const Rat& x, const mpz_class& modulus);

/// Morita's p-adic Gamma function evaluated mod p^k by the definitional
/// product: with N = x mod p^k taken in [1, p^k], returns
/// (-1)^N * prod of j for 0 < j < N with p not dividing j, reduced mod p^k.
mpz_class padic_gamma(const Rat& x, const PadicContext& ctx);

}  // namespace qcongr
