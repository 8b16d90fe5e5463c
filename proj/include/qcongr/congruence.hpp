#pragma once

#include "qcongr/cyclotomic.hpp"
#include "qcongr/errors.hpp"
#include "qcongr/factored.hpp"
#include "qcongr/poly.hpp"
#include "qcongr/ratfun.hpp"

#include <map>
#include <memory>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qcongr {

struct NotInvertible : std::domain_error {
    explicit NotInvertible(const std::string& msg)
        : std::domain_error("element not invertible in quotient ring: " + msg) {}
};

/// Modulus kept both factored (for coprimality tests) and expanded (for the
/// actual remainder arithmetic).
template <class K>
struct Modulus {
    FactoredPoly<K> factored;
    Poly<K> expanded;

    explicit Modulus(FactoredPoly<K> f) : factored(std::move(f)), expanded(factored.expand_monic()) {
        // the unit of a modulus is irrelevant to the congruence; drop it
        factored.take_unit();
    }
};

/// Incremental modulus construction from the factor shapes the congruences
/// use: [n], phi_n^e, and extra polynomial factors like (1 - a*q^n).
template <class K>
class ModulusBuilder {
  public:
    /// [n] = prod of phi_d over d | n, d > 1.
    ModulusBuilder& bracket(long n, int exp = 1) {
        if (n < 1) throw OutOfDomain("bracket index must be positive");
        for (long d = 2; d <= n; ++d)
            if (n % d == 0) fac_.push_cyclotomic(d, exp);
        return *this;
    }

    ModulusBuilder& cyclotomic(long n, int exp = 1) {
        fac_.push_cyclotomic(n, exp);
        return *this;
    }

    ModulusBuilder& factor(Poly<K> p, int exp = 1) {
        fac_.push(std::move(p), exp);
        return *this;
    }

    Modulus<K> build() const { return Modulus<K>(fac_); }

  private:
    FactoredPoly<K> fac_;
};

/// Outcome of a congruence check. When the reduced difference has a
/// denominator factor in common with the modulus, the congruence statement
/// does not apply; that is reported, not thrown.
template <class K>
struct CongruenceVerdict {
    bool holds = false;
    bool denominator_coprime = false;
    Poly<K> residue;  // difference numerator mod the modulus (when coprime)
};

namespace detail {

/// Coprimality of one monic factor against every factor of the modulus.
/// Distinct tagged cyclotomics are coprime without a gcd.
template <class K>
bool factor_coprime_to(const Factor<K>& f, const FactoredPoly<K>& m) {
    for (const auto& g : m.factors()) {
        if (f.cyclo > 0 && g.cyclo > 0) {
            if (f.cyclo == g.cyclo) return false;
            continue;
        }
        if (poly_gcd(f.poly, g.poly).deg() > 0) return false;
    }
    return true;
}

}  // namespace detail

template <class K>
bool denominator_coprime(const RatFun<K>& x, const Modulus<K>& m) {
    for (const auto& f : x.den().factors())
        if (!detail::factor_coprime_to(f, m.factored)) return false;
    return true;
}

/// Checks lhs = rhs modulo m under the convention for rational functions:
/// write lhs - rhs in lowest terms as N/D; the congruence holds when
/// gcd(D, m) = 1 and m divides N.
template <class K>
CongruenceVerdict<K> congruent(const RatFun<K>& lhs, const RatFun<K>& rhs, const Modulus<K>& m) {
    CongruenceVerdict<K> v;
    RatFun<K> d = lhs - rhs;
    v.denominator_coprime = denominator_coprime(d, m);
    if (!v.denominator_coprime) return v;
    v.residue = d.num() % m.expanded;
    v.holds = v.residue.zero();
    return v;
}

/// Canonical residue of x modulo m: num * den^-1 reduced mod m.
/// Requires the denominator to be invertible modulo m.
template <class K>
Poly<K> reduce_mod(const RatFun<K>& x, const Modulus<K>& m) {
    if (!denominator_coprime(x, m))
        throw std::domain_error("denominator shares factor with modulus");
    auto [g, s, t] = poly_gcd_ext(x.den_expanded() % m.expanded, m.expanded);
    if (g.deg() != 0) throw std::domain_error("denominator shares factor with modulus");
    return (x.num() % m.expanded) * s % m.expanded;
}

/// Quotient ring K[q]/(m) with cached inverses for tagged cyclotomic factors.
template <class K>
class ModRing {
  public:
    explicit ModRing(Modulus<K> m) : m_(std::move(m)) {}

    const Modulus<K>& modulus() const { return m_; }
    const Poly<K>& mod_poly() const { return m_.expanded; }

    Poly<K> reduce(const Poly<K>& p) const { return p % m_.expanded; }
    Poly<K> mul(const Poly<K>& a, const Poly<K>& b) const { return (a * b) % m_.expanded; }

    Poly<K> inverse(const Poly<K>& p) const {
        auto [g, s, t] = poly_gcd_ext(p % m_.expanded, m_.expanded);
        if (g.deg() != 0) throw NotInvertible("gcd with modulus has positive degree");
        return s % m_.expanded;
    }

    /// Inverse of a denominator factor; cyclotomic inverses are memoized.
    Poly<K> factor_inverse(const Factor<K>& f) const {
        if (f.cyclo > 0) {
            auto it = cyclo_inv_.find(f.cyclo);
            if (it != cyclo_inv_.end()) return it->second;
            Poly<K> inv = inverse(f.poly);
            cyclo_inv_.emplace(f.cyclo, inv);
            return inv;
        }
        return inverse(f.poly);
    }

  private:
    Modulus<K> m_;
    mutable std::map<long, Poly<K>> cyclo_inv_;
};

/// Residue wrapper usable as a summation element: a null ring marks a scalar
/// (needed so that T(0) makes sense before any ring element is seen).
template <class K>
class ModElem {
  public:
    ModElem() = default;
    ModElem(long c) : rep_(Poly<K>(K(c))) {}
    ModElem(std::shared_ptr<const ModRing<K>> ring, Poly<K> rep)
        : ring_(std::move(ring)), rep_(ring_->reduce(rep)) {}

    const Poly<K>& rep() const { return rep_; }
    bool scalar() const { return !ring_; }

    ModElem& operator+=(const ModElem& o) {
        adopt(o);
        rep_ += o.rep_;
        if (ring_) rep_ = ring_->reduce(rep_);
        return *this;
    }
    ModElem& operator-=(const ModElem& o) {
        adopt(o);
        rep_ -= o.rep_;
        if (ring_) rep_ = ring_->reduce(rep_);
        return *this;
    }
    friend ModElem operator+(ModElem a, const ModElem& b) { return a += b; }
    friend ModElem operator-(ModElem a, const ModElem& b) { return a -= b; }

    friend ModElem operator*(const ModElem& a, const ModElem& b) {
        ModElem r(a);
        r.adopt(b);
        r.rep_ = r.ring_ ? r.ring_->mul(r.rep_, b.rep_) : r.rep_ * b.rep_;
        return r;
    }
    ModElem& operator*=(const ModElem& o) { return *this = *this * o; }

    friend bool operator==(const ModElem& a, const ModElem& b) { return a.rep_ == b.rep_; }

  private:
    void adopt(const ModElem& o) {
        if (!ring_ && o.ring_) {
            ring_ = o.ring_;
            rep_ = ring_->reduce(rep_);
        }
    }

    std::shared_ptr<const ModRing<K>> ring_;
    Poly<K> rep_;
};

/// Image of a rational function in the quotient ring: numerator times the
/// inverse of every denominator factor. Throws NotInvertible when a factor
/// is not a unit modulo the modulus (caller falls back to exact arithmetic).
template <class K>
ModElem<K> to_mod(const std::shared_ptr<const ModRing<K>>& ring, const RatFun<K>& x) {
    Poly<K> rep = ring->reduce(x.num());
    for (const auto& f : x.den().factors()) {
        Poly<K> inv = ring->factor_inverse(f);
        for (int i = 0; i < f.exp; ++i) rep = ring->mul(rep, inv);
    }
    return ModElem<K>(ring, std::move(rep));
}

/// Two-sided limit of F(x)/(1-x)^order as x -> 1, for F vanishing at x = 1
/// to exactly that order. F lives in K(q)(x): a rational function whose
/// polynomials are in the outer variable x with coefficients in the field K.
/// (1-x)^order = (x-1)^order for even order; odd orders flip the sign.
template <class K>
K hopital_limit(const RatFun<K>& f, int order = 2) {
    Poly<K> x_minus_1 = Poly<K>::var() - Poly<K>(K(1));
    Poly<K> num = f.num();
    for (int i = 0; i < order; ++i) {
        auto [q, r] = divrem(num, x_minus_1);
        if (!r.zero()) throw std::domain_error("pole order mismatch in limit");
        num = std::move(q);
    }
    K dv = f.den_expanded().eval(K(1));
    if (is_zero(dv)) throw std::domain_error("denominator vanishes at the limit point");
    K result = num.eval(K(1)) / dv;
    if (order % 2 != 0) result = -result;
    return result;
}

/// Deterministic small-rational parameter samples, avoiding 0, +-1 and the
/// pairwise collisions (equal values, reciprocal pairs) that would make the
/// extra modulus factors degenerate or coincide.
inline std::vector<Rat> sample_params(std::size_t count, unsigned long seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num_dist(-13, 13);
    std::uniform_int_distribution<long> den_dist(1, 13);
    std::vector<Rat> out;
    while (out.size() < count) {
        Rat r = make_rat(num_dist(rng), den_dist(rng));
        if (r == 0 || r == 1 || r == -1) continue;
        bool clash = false;
        for (const auto& prev : out)
            if (r == prev || r * prev == 1) clash = true;
        if (clash) continue;
        out.push_back(r);
    }
    return out;
}

}  // namespace qcongr
