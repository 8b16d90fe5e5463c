#include "qcongr/padic.hpp"

#include "qcongr/errors.hpp"

namespace qcongr {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

long remove_factor(mpz_class& z, long p) {
    mpz_class q(p);
    return static_cast<long>(mpz_remove(z.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t()));
}

}  // namespace

long valuation(const Rat& x, long p) {
    if (p < 2) throw OutOfDomain("valuation needs p >= 2");
    if (is_zero(x)) return kValuationInfinity;
    mpz_class num = x.get_num(), den = x.get_den();
    return remove_factor(num, p) - remove_factor(den, p);
}

Rat pochhammer_rational(const Rat& x, long n) {
    if (n < 0) throw OutOfDomain("negative shifted-factorial length");
    Rat acc(1);
    Rat f = x;
    for (long i = 0; i < n; ++i, f += 1) acc *= f;
    return acc;
}

Rat harmonic2(long m) {
    if (m < 0) throw OutOfDomain("negative harmonic index");
    Rat acc(0);
    for (long i = 1; i <= m; ++i) acc += make_rat(1, i * i);
    return acc;
}

mpz_class padic_modulus(const PadicContext& ctx) {
    if (!is_prime(ctx.p) || ctx.p == 2) throw OutOfDomain("p must be an odd prime");
    if (ctx.k < 1) throw OutOfDomain("precision must be >= 1");
    mpz_class m;
    mpz_ui_pow_ui(m.get_mpz_t(), static_cast<unsigned long>(ctx.p),
                  static_cast<unsigned long>(ctx.k));
    return m;
}

mpz_class residue_mod(const Rat& x, const mpz_class& modulus) {
    mpz_class den = x.get_den(), inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t()) == 0)
        throw OutOfDomain("denominator is not invertible modulo p^k");
    mpz_class r = x.get_num() * inv;
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), modulus.get_mpz_t());
    return r;
}

mpz_class padic_gamma(const Rat& x, const PadicContext& ctx) {
    if (valuation(Rat(x.get_den()), ctx.p) != 0)
        throw OutOfDomain("argument is not a p-adic integer");
    mpz_class modulus = padic_modulus(ctx);
    if (modulus > ctx.work_cap) throw OutOfDomain("precision cap");
    const unsigned long M = modulus.get_ui();
    mpz_class nz = residue_mod(x, modulus);
    unsigned long N = nz.get_ui();
    if (N == 0) N = M;  // N >= 1 with N = x (mod p^k)
    const unsigned long p = static_cast<unsigned long>(ctx.p);
    unsigned long long acc = 1;
    for (unsigned long j = 1; j < N; ++j) {
        if (j % p == 0) continue;
        acc = static_cast<unsigned long long>(
            (static_cast<unsigned __int128>(acc) * j) % M);
    }
    if (N % 2 == 1) acc = (M - acc % M) % M;  // sign (-1)^N
    return mpz_class(static_cast<unsigned long>(acc));
}

}  // namespace qcongr
