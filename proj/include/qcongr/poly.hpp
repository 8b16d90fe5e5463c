#pragma once

#include "qcongr/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

namespace qcongr {

/// Dense univariate polynomial over a coefficient field K.
/// Invariant: the coefficient vector carries no trailing zeros, so the
/// zero polynomial is the empty vector and deg() is -1 for it.
template <class K>
class Poly {
  public:
    Poly() = default;
    explicit Poly(const K& constant) {
        if (!is_zero(constant)) c_.push_back(constant);
    }
    Poly(long constant) : Poly(K(constant)) {}

    static Poly var() { return monomial(K(1), 1); }

    static Poly monomial(const K& coeff, std::size_t degree) {
        Poly p;
        if (!is_zero(coeff)) {
            p.c_.assign(degree + 1, K(0));
            p.c_[degree] = coeff;
        }
        return p;
    }

    static Poly from_coeffs(std::vector<K> coeffs) {
        Poly p;
        p.c_ = std::move(coeffs);
        p.trim();
        return p;
    }

    int deg() const { return static_cast<int>(c_.size()) - 1; }
    bool zero() const { return c_.empty(); }

    const K& coeff(std::size_t i) const {
        static const K kzero{0};
        return i < c_.size() ? c_[i] : kzero;
    }

    const std::vector<K>& coeffs() const { return c_; }

    const K& lc() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    bool monic() const { return !c_.empty() && is_one_k(c_.back()); }

    Poly& operator+=(const Poly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), K(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), K(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    Poly operator-() const {
        Poly r(*this);
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.zero() || b.zero()) return Poly();
        Poly r;
        r.c_ = mul_vec(a.c_, b.c_);
        r.trim();
        return r;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(const K& s) const {
        if (is_zero(s)) return Poly();
        Poly r(*this);
        for (auto& x : r.c_) x *= s;
        r.trim();
        return r;
    }

    /// Multiply by the variable to the k-th power.
    Poly shifted(std::size_t k) const {
        if (zero()) return Poly();
        Poly r;
        r.c_.assign(c_.size() + k, K(0));
        std::copy(c_.begin(), c_.end(), r.c_.begin() + static_cast<long>(k));
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    K eval(const K& x) const {
        K acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) {
            acc *= x;
            acc += c_[i];
        }
        return acc;
    }

    Poly pow(unsigned long e) const {
        Poly acc(K(1));
        Poly b(*this);
        while (e) {
            if (e & 1) acc *= b;
            b *= b;
            e >>= 1;
        }
        return acc;
    }

  private:
    static bool is_one_k(const K& x) { return x == K(1); }

    void trim() {
        while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
    }

    static constexpr std::size_t kKaratsubaThreshold = 48;

    static std::vector<K> mul_vec(const std::vector<K>& a, const std::vector<K>& b) {
        if (a.size() < kKaratsubaThreshold || b.size() < kKaratsubaThreshold)
            return mul_school(a, b);
        return mul_karatsuba(a, b);
    }

    static std::vector<K> mul_school(const std::vector<K>& a, const std::vector<K>& b) {
        std::vector<K> r(a.size() + b.size() - 1, K(0));
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (is_zero(a[i])) continue;
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
        }
        return r;
    }

    static std::vector<K> mul_karatsuba(const std::vector<K>& a, const std::vector<K>& b) {
        const std::size_t h = (std::max(a.size(), b.size()) + 1) / 2;
        auto split = [h](const std::vector<K>& v) {
            std::vector<K> lo(v.begin(), v.begin() + static_cast<long>(std::min(h, v.size())));
            std::vector<K> hi;
            if (v.size() > h) hi.assign(v.begin() + static_cast<long>(h), v.end());
            return std::pair(std::move(lo), std::move(hi));
        };
        auto [a0, a1] = split(a);
        auto [b0, b1] = split(b);
        auto vadd = [](std::vector<K> x, const std::vector<K>& y) {
            if (x.size() < y.size()) x.resize(y.size(), K(0));
            for (std::size_t i = 0; i < y.size(); ++i) x[i] += y[i];
            return x;
        };
        std::vector<K> z0 = a0.empty() || b0.empty() ? std::vector<K>{} : mul_vec(a0, b0);
        std::vector<K> z2 = a1.empty() || b1.empty() ? std::vector<K>{} : mul_vec(a1, b1);
        std::vector<K> sa = vadd(a0, a1), sb = vadd(b0, b1);
        std::vector<K> z1 = sa.empty() || sb.empty() ? std::vector<K>{} : mul_vec(sa, sb);
        // z1 -= z0 + z2
        if (z1.size() < std::max(z0.size(), z2.size())) z1.resize(std::max(z0.size(), z2.size()), K(0));
        for (std::size_t i = 0; i < z0.size(); ++i) z1[i] -= z0[i];
        for (std::size_t i = 0; i < z2.size(); ++i) z1[i] -= z2[i];
        std::vector<K> r(a.size() + b.size() - 1, K(0));
        for (std::size_t i = 0; i < z0.size() && i < r.size(); ++i) r[i] += z0[i];
        for (std::size_t i = 0; i < z1.size(); ++i)
            if (i + h < r.size()) r[i + h] += z1[i];
        for (std::size_t i = 0; i < z2.size(); ++i)
            if (i + 2 * h < r.size()) r[i + 2 * h] += z2[i];
        return r;
    }

    std::vector<K> c_;

    template <class K2>
    friend std::pair<Poly<K2>, Poly<K2>> divrem(const Poly<K2>&, const Poly<K2>&);
};

template <class K>
bool is_zero(const Poly<K>& p) { return p.zero(); }

/// Euclidean division: a = quot*b + rem with deg(rem) < deg(b).
template <class K>
std::pair<Poly<K>, Poly<K>> divrem(const Poly<K>& a, const Poly<K>& b) {
    if (b.zero()) throw std::domain_error("zero divisor");
    if (a.deg() < b.deg()) return {Poly<K>(), a};
    std::vector<K> rem = a.c_;
    const int db = b.deg();
    std::vector<K> quot(static_cast<std::size_t>(a.deg() - db) + 1, K(0));
    const K inv_lc = K(1) / b.lc();
    for (int i = a.deg(); i >= db; --i) {
        K c = rem[static_cast<std::size_t>(i)];
        if (is_zero(c)) continue;
        c *= inv_lc;
        quot[static_cast<std::size_t>(i - db)] = c;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(i - db + j)] -= c * b.coeff(static_cast<std::size_t>(j));
    }
    return {Poly<K>::from_coeffs(std::move(quot)), Poly<K>::from_coeffs(std::move(rem))};
}

template <class K>
Poly<K> operator%(const Poly<K>& a, const Poly<K>& b) { return divrem(a, b).second; }

template <class K>
Poly<K> operator/(const Poly<K>& a, const Poly<K>& b) { return divrem(a, b).first; }

template <class K>
bool divides(const Poly<K>& d, const Poly<K>& a) {
    if (d.zero()) return a.zero();
    return divrem(a, d).second.zero();
}

template <class K>
Poly<K> make_monic(const Poly<K>& p) {
    if (p.zero() || p.monic()) return p;
    return p.scaled(K(1) / p.lc());
}

/// Monic gcd by the Euclidean algorithm. gcd(0,0) = 0.
template <class K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
    while (!b.zero()) {
        Poly<K> r = a % b;
        a = std::move(b);
        b = make_monic(r);
    }
    return make_monic(a);
}

/// Extended Euclid: returns (g, s, t) with g = s*a + t*b, g monic.
template <class K>
std::tuple<Poly<K>, Poly<K>, Poly<K>> poly_gcd_ext(const Poly<K>& a, const Poly<K>& b) {
    if (a.zero() && b.zero()) throw std::domain_error("gcd of two zero polynomials");
    Poly<K> r0 = a, r1 = b;
    Poly<K> s0(K(1)), s1, t0, t1(K(1));
    while (!r1.zero()) {
        auto [q, r2] = divrem(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r2);
        Poly<K> s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Poly<K> t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    const K inv = K(1) / r0.lc();
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

}  // namespace qcongr
