#pragma once

#include "qcongr/factored.hpp"
#include "qcongr/poly.hpp"

#include <stdexcept>
#include <utility>

namespace qcongr {

/// Reduced quotient of two polynomials over K. The denominator is kept in
/// factored monic form; negative powers of the variable live in the
/// denominator, so Laurent expressions need no separate type.
template <class K>
class RatFun {
  public:
    RatFun() = default;
    RatFun(long c) : num_(Poly<K>(K(c))) {}
    explicit RatFun(const K& c) : num_(Poly<K>(c)) {}
    explicit RatFun(Poly<K> num) : num_(std::move(num)) {}
    RatFun(Poly<K> num, FactoredPoly<K> den, bool do_reduce = true)
        : num_(std::move(num)), den_(std::move(den)) {
        num_ = num_.scaled(K(1) / den_.take_unit());
        if (do_reduce) reduce();
    }

    static RatFun var() { return RatFun(Poly<K>::var()); }

    bool zero() const { return num_.zero(); }
    bool polynomial() const { return den_.trivial(); }

    const Poly<K>& num() const { return num_; }
    const FactoredPoly<K>& den() const { return den_; }
    Poly<K> den_expanded() const { return den_.expand_monic(); }

    /// Cancels denominator factors against the numerator (trial division).
    void reduce() {
        if (num_.zero()) {
            den_ = FactoredPoly<K>::one();
            return;
        }
        den_.cancel_into(num_);
    }

    RatFun& operator+=(const RatFun& o) { return add_impl(o, /*negate=*/false, /*do_reduce=*/true); }
    RatFun& operator-=(const RatFun& o) { return add_impl(o, true, true); }

    /// Sum accumulation that defers reduction; call reduce() when done.
    RatFun& accumulate(const RatFun& o) { return add_impl(o, false, false); }

    friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
    friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }

    RatFun operator-() const {
        RatFun r(*this);
        r.num_ = -r.num_;
        return r;
    }

    RatFun& operator*=(const RatFun& o) {
        num_ *= o.num_;
        den_.mul(o.den_);
        num_ = num_.scaled(K(1) / den_.take_unit());
        reduce();
        return *this;
    }
    friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }

    RatFun& operator/=(const RatFun& o) {
        if (o.zero()) throw std::domain_error("division by zero rational function");
        num_ *= o.den_.expand_monic();
        den_.push(o.num_, 1);
        num_ = num_.scaled(K(1) / den_.take_unit());
        reduce();
        return *this;
    }
    friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }

    RatFun inverse() const {
        if (zero()) throw std::domain_error("inverse of zero rational function");
        FactoredPoly<K> d;
        d.push(num_, 1);
        return RatFun(den_.expand_monic(), std::move(d));
    }

    RatFun pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        RatFun acc(1);
        RatFun b(*this);
        unsigned long n = static_cast<unsigned long>(e);
        while (n) {
            if (n & 1) acc *= b;
            b *= b;
            n >>= 1;
        }
        return acc;
    }

    RatFun scaled(const K& s) const {
        RatFun r(*this);
        r.num_ = r.num_.scaled(s);
        if (r.num_.zero()) r.den_ = FactoredPoly<K>::one();
        return r;
    }

    friend bool operator==(const RatFun& a, const RatFun& b) {
        if (a.num_.zero()) return b.num_.zero();
        if (b.num_.zero()) return false;
        return a.num_ * b.den_.expand_monic() == b.num_ * a.den_.expand_monic();
    }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

    /// Evaluation at a point that is not a pole of the reduced form.
    K eval(const K& x) const {
        K d = den_.expand_monic().eval(x);
        if (is_zero(d)) throw std::domain_error("evaluation at a pole");
        return num_.eval(x) / d;
    }

  private:
    RatFun& add_impl(const RatFun& o, bool negate, bool do_reduce) {
        if (o.num_.zero()) return *this;
        FactoredPoly<K> d = FactoredPoly<K>::lcm(den_, o.den_);
        Poly<K> cof_self = d.cofactor_of(den_).expand_monic();
        Poly<K> cof_other = d.cofactor_of(o.den_).expand_monic();
        Poly<K> rhs = o.num_ * cof_other;
        num_ = num_ * cof_self;
        if (negate)
            num_ -= rhs;
        else
            num_ += rhs;
        den_ = std::move(d);
        if (num_.zero())
            den_ = FactoredPoly<K>::one();
        else if (do_reduce)
            reduce();
        return *this;
    }

    Poly<K> num_;
    FactoredPoly<K> den_;
};

template <class K>
bool is_zero(const RatFun<K>& x) { return x.zero(); }

template <class K>
struct FromRat<RatFun<K>> {
    static RatFun<K> get(const Rat& r) { return RatFun<K>(k_from_rat<K>(r)); }
};

}  // namespace qcongr
