#pragma once

#include "qcongr/cyclotomic.hpp"
#include "qcongr/poly.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace qcongr {

/// One monic factor with multiplicity. cyclo > 0 tags the factor as the
/// cyclo-th cyclotomic polynomial, which lets coprimality tests between
/// distinct cyclotomics skip the gcd.
template <class K>
struct Factor {
    Poly<K> poly;
    int exp = 0;
    long cyclo = 0;
};

/// A polynomial kept as unit * prod(factor_i ^ exp_i) with monic factors.
/// Factors in one value are pairwise coprime for every factor family this
/// engine produces (cyclotomics, plain q-powers, 1 - c*q^j shapes).
template <class K>
class FactoredPoly {
  public:
    FactoredPoly() = default;

    static FactoredPoly one() { return FactoredPoly(); }

    bool trivial() const { return f_.empty(); }
    const std::vector<Factor<K>>& factors() const { return f_; }

    /// Multiply in p^exp; p is normalized monic and its leading coefficient
    /// lands in the unit.
    void push(Poly<K> p, int exp, long cyclo = 0) {
        if (exp == 0) return;
        if (p.zero()) throw std::domain_error("zero factor in factored polynomial");
        if (p.deg() == 0) {
            unit_ *= pow_k(p.lc(), exp);
            return;
        }
        if (!p.monic()) {
            unit_ *= pow_k(p.lc(), exp);
            p = make_monic(p);
        }
        for (auto& f : f_) {
            if (f.cyclo != cyclo) continue;
            if (cyclo == 0 && !(f.poly == p)) continue;
            f.exp += exp;
            if (f.exp == 0) remove_zero_exponents();
            return;
        }
        f_.push_back(Factor<K>{std::move(p), exp, cyclo});
    }

    void push_cyclotomic(long d, int exp) { push(cyclotomic_k<K>(d), exp, d); }

    /// (1 - q^m)^exp split into cyclotomics; contributes (-1)^exp to the unit.
    void push_one_minus_qpow(long m, int exp) {
        if (m <= 0) throw std::domain_error("nonpositive exponent in 1 - q^m factor");
        if (exp % 2 != 0) unit_ *= K(-1);
        for (long d = 1; d <= m; ++d)
            if (m % d == 0) push_cyclotomic(d, exp);
    }

    /// (1 + q^m)^exp = prod of phi_d over d | 2m, d not | m.
    void push_one_plus_qpow(long m, int exp) {
        if (m <= 0) throw std::domain_error("nonpositive exponent in 1 + q^m factor");
        for (long d = 1; d <= 2 * m; ++d)
            if ((2 * m) % d == 0 && m % d != 0) push_cyclotomic(d, exp);
    }

    void push_qpow(long e) {
        if (e != 0) push(Poly<K>::var(), static_cast<int>(e));
    }

    void mul_unit(const K& u) { unit_ *= u; }

    void mul(const FactoredPoly& o) {
        unit_ *= o.unit_;
        for (const auto& f : o.f_) push(f.poly, f.exp, f.cyclo);
    }

    /// Consumes the accumulated unit, resetting it to 1.
    K take_unit() {
        K u = unit_;
        unit_ = K(1);
        return u;
    }
    const K& unit() const { return unit_; }

    int exponent_of(const Poly<K>& p, long cyclo) const {
        for (const auto& f : f_)
            if (f.cyclo == cyclo && (cyclo > 0 || f.poly == p)) return f.exp;
        return 0;
    }

    /// Per-factor least common multiple of the monic parts.
    static FactoredPoly lcm(const FactoredPoly& a, const FactoredPoly& b) {
        FactoredPoly r;
        r.f_ = a.f_;
        for (const auto& g : b.f_) {
            bool found = false;
            for (auto& f : r.f_) {
                if (f.cyclo == g.cyclo && (g.cyclo > 0 || f.poly == g.poly)) {
                    f.exp = std::max(f.exp, g.exp);
                    found = true;
                    break;
                }
            }
            if (!found) r.f_.push_back(g);
        }
        return r;
    }

    /// this / d by factor exponents; requires d's monic part to divide ours.
    FactoredPoly cofactor_of(const FactoredPoly& d) const {
        FactoredPoly r;
        for (const auto& f : f_) {
            int e = f.exp - d.exponent_of(f.poly, f.cyclo);
            if (e < 0) throw std::domain_error("cofactor with non-dividing denominator");
            if (e > 0) r.f_.push_back(Factor<K>{f.poly, e, f.cyclo});
        }
        return r;
    }

    long total_deg() const {
        long d = 0;
        for (const auto& f : f_) d += static_cast<long>(f.poly.deg()) * f.exp;
        return d;
    }

    /// Product of the monic factors (the unit is not included).
    Poly<K> expand_monic() const {
        Poly<K> r(K(1));
        for (const auto& f : f_)
            for (int i = 0; i < f.exp; ++i) r *= f.poly;
        return r;
    }

    Poly<K> expand() const { return expand_monic().scaled(unit_); }

    /// Cancel factors against num by trial division, keeping num/this exact.
    void cancel_into(Poly<K>& num) {
        std::size_t i = 0;
        while (i < f_.size()) {
            auto& f = f_[i];
            while (f.exp > 0 && num.deg() >= f.poly.deg()) {
                auto [q, r] = divrem(num, f.poly);
                if (!r.zero()) break;
                num = std::move(q);
                --f.exp;
            }
            if (f.exp == 0)
                f_.erase(f_.begin() + static_cast<long>(i));
            else
                ++i;
        }
    }

    void decrement(std::size_t idx) {
        if (--f_[idx].exp == 0) f_.erase(f_.begin() + static_cast<long>(idx));
    }

  private:
    static K pow_k(const K& x, int e) {
        K acc(1);
        K b = e < 0 ? K(1) / x : x;
        for (int i = e < 0 ? -e : e; i > 0; --i) acc *= b;
        return acc;
    }

    void remove_zero_exponents() {
        std::erase_if(f_, [](const Factor<K>& f) { return f.exp == 0; });
    }

    std::vector<Factor<K>> f_;
    K unit_ = K(1);
};

}  // namespace qcongr
