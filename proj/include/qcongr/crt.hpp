#pragma once

#include "qcongr/io.hpp"
#include "qcongr/poly.hpp"

#include <stdexcept>
#include <string>

namespace qcongr {

struct ModuliNotCoprime : std::domain_error {
    explicit ModuliNotCoprime(const std::string& gcd_witness)
        : std::domain_error("moduli not coprime; gcd = " + gcd_witness) {}
};

/// Chinese remainder reconstruction for two coprime polynomial moduli:
/// returns r with r = r1 (mod m1), r = r2 (mod m2), deg(r) < deg(m1*m2).
template <class K>
Poly<K> crt_pair(const Poly<K>& r1, const Poly<K>& m1, const Poly<K>& r2, const Poly<K>& m2) {
    auto [g, s, t] = poly_gcd_ext(m1, m2);
    if (g.deg() != 0) throw ModuliNotCoprime(to_string(g));
    // s*m1 + t*m2 = 1, so r = r2*s*m1 + r1*t*m2 has the right residues.
    Poly<K> prod = m1 * m2;
    Poly<K> r = r2 * s * m1 + r1 * t * m2;
    return r % prod;
}

}  // namespace qcongr
