#pragma once

#include "qcongr/errors.hpp"
#include "qcongr/factored.hpp"
#include "qcongr/poly.hpp"
#include "qcongr/ratfun.hpp"

#include <cstddef>
#include <vector>

namespace qcongr {

/// A Pochhammer base of the form coeff * q^q_exp. Symbolic parameters live
/// inside coeff (the coefficient field carries them).
template <class K>
struct QMono {
    K coeff;
    long q_exp = 0;
};

template <class K>
QMono<K> qmono(K coeff, long q_exp) { return QMono<K>{std::move(coeff), q_exp}; }

/// The q-integer [r] = 1 + q + ... + q^(r-1).
template <class K>
Poly<K> q_integer(long r) {
    if (r < 1) throw OutOfDomain("q-integer index must be positive");
    return Poly<K>::from_coeffs(std::vector<K>(static_cast<std::size_t>(r), K(1)));
}

/// Builds a ratio num/den keeping the denominator factored for cheap
/// cancellation; 1 - q^m shapes are split into cyclotomics on the spot.
template <class K>
class RatioBuilder {
  public:
    RatioBuilder() : num_(Poly<K>(K(1))) {}

    void mul_const(const K& c) { num_ = num_.scaled(c); }
    void mul_poly(const Poly<K>& p) { num_ *= p; }

    void mul_qpow(long e) {
        if (e >= 0)
            num_ = num_.shifted(static_cast<std::size_t>(e));
        else
            den_.push_qpow(-e);
    }

    void div_poly(Poly<K> p, int exp = 1, long cyclo = 0) { den_.push(std::move(p), exp, cyclo); }
    void div_cyclotomic(long d, int exp = 1) { den_.push_cyclotomic(d, exp); }

    /// Multiply by (1 - c*q^e); negative e routes the q power to the den side.
    void mul_one_minus(const QMono<K>& m) {
        long e = m.q_exp;
        if (e >= 0) {
            Poly<K> f = Poly<K>(K(1)) - Poly<K>::monomial(m.coeff, static_cast<std::size_t>(e));
            num_ *= f;
        } else {
            // (1 - c q^-t) = (q^t - c) / q^t
            long t = -e;
            num_ *= Poly<K>::monomial(K(1), static_cast<std::size_t>(t)) - Poly<K>(m.coeff);
            den_.push_qpow(t);
        }
    }

    /// Divide by (1 - c*q^e).
    void div_one_minus(const QMono<K>& m) {
        long e = m.q_exp;
        const K& c = m.coeff;
        if (is_zero(c)) return;  // factor is 1
        if (e == 0) {
            K f = K(1) - c;
            if (is_zero(f)) throw PoleInSeries("denominator factor 1 - c vanishes");
            num_ = num_.scaled(K(1) / f);
            return;
        }
        if (e < 0) {
            // 1/(1 - c q^-t) = q^t / (q^t - c)
            long t = -e;
            num_ = num_.shifted(static_cast<std::size_t>(t));
            push_qpow_minus_const(t, c);
            return;
        }
        if (c == K(1)) {
            den_.push_one_minus_qpow(e, 1);
        } else if (c == K(-1)) {
            den_.push_one_plus_qpow(e, 1);
        } else {
            den_.push(Poly<K>(K(1)) - Poly<K>::monomial(c, static_cast<std::size_t>(e)), 1);
        }
    }

    /// Multiply by the q-shifted factorial (base; q^d)_k.
    void mul_poch(const QMono<K>& base, long d, long k) {
        for (long j = 0; j < k; ++j) mul_one_minus(QMono<K>{base.coeff, base.q_exp + d * j});
    }

    /// Divide by (base; q^d)_k.
    void div_poch(const QMono<K>& base, long d, long k) {
        for (long j = 0; j < k; ++j) div_one_minus(QMono<K>{base.coeff, base.q_exp + d * j});
    }

    RatFun<K> build() const { return RatFun<K>(num_, den_); }

  private:
    void push_qpow_minus_const(long t, const K& c) {
        if (c == K(1)) {
            den_.push_one_minus_qpow(t, 1);
            den_.mul_unit(K(-1));
        } else if (c == K(-1)) {
            den_.push_one_plus_qpow(t, 1);
        } else {
            den_.push(Poly<K>::monomial(K(1), static_cast<std::size_t>(t)) - Poly<K>(c), 1);
        }
    }

    Poly<K> num_;
    FactoredPoly<K> den_;
};

/// (base; q^d)_k as a reduced rational function; k = 0 gives 1.
template <class K>
RatFun<K> q_pochhammer(const QMono<K>& base, long d, long k) {
    if (k < 0) throw OutOfDomain("negative q-pochhammer length");
    RatioBuilder<K> b;
    b.mul_poch(base, d, k);
    return b.build();
}

template <class K>
RatFun<K> qpow_rf(long e) {
    RatioBuilder<K> b;
    b.mul_qpow(e);
    return b.build();
}

/// Truncated basic hypergeometric series r_phi_s with base q^d:
/// sum over k of prod(num params;q^d)_k / ((q^d;q^d)_k prod(den params;q^d)_k)
/// * ((-1)^k q^(d*binom(k,2)))^(1+s-r) * z^k.
/// A vanishing numerator Pochhammer truncates the series naturally; a
/// vanishing denominator Pochhammer within range is an error.
template <class K>
RatFun<K> phi_series(const std::vector<QMono<K>>& num_params,
                     const std::vector<QMono<K>>& den_params,
                     long d, const RatFun<K>& z, long truncation) {
    const long r = static_cast<long>(num_params.size());
    const long s = static_cast<long>(den_params.size());
    const long sign_pow = 1 + s - r;
    RatFun<K> total(0);
    RatFun<K> zk(1);
    for (long k = 0; k <= truncation; ++k) {
        RatioBuilder<K> b;
        bool vanished = false;
        for (const auto& p : num_params) {
            for (long j = 0; j < k; ++j)
                if (p.q_exp + d * j == 0 && p.coeff == K(1)) vanished = true;
            b.mul_poch(p, d, k);
        }
        if (vanished) break;  // terminating series: this and all later terms are 0
        b.div_poch(QMono<K>{K(1), d}, d, k);
        for (const auto& p : den_params) b.div_poch(p, d, k);
        long tw = d * (k * (k - 1) / 2);
        if (sign_pow != 0) {
            long e = tw * sign_pow;
            b.mul_qpow(e);
            if ((k % 2) != 0 && (sign_pow % 2) != 0) b.mul_const(K(-1));
        }
        total += b.build() * zk;
        zk *= z;
    }
    return total;
}

/// Term/prefix-sum table: prefix[t] = sum of terms[0..t].
template <class T>
struct TermTable {
    std::vector<T> terms;
    std::vector<T> prefix;

    explicit TermTable(std::vector<T> ts) : terms(std::move(ts)) {
        prefix.reserve(terms.size());
        T acc = T(0);
        for (const auto& t : terms) {
            acc_add(acc, t);
            T snapshot = acc;
            acc_finish(snapshot);
            prefix.push_back(std::move(snapshot));
        }
    }

  private:
    static void acc_add(T& a, const T& b) { sum_add(a, b); }
    static void acc_finish(T& a) { sum_finish(a); }
};

template <class T>
void sum_add(T& a, const T& b) { a += b; }

template <class K>
void sum_add(RatFun<K>& a, const RatFun<K>& b) { a.accumulate(b); }

template <class T>
void sum_finish(T&) {}

template <class K>
void sum_finish(RatFun<K>& a) { a.reduce(); }

/// m-fold truncated sum over i_1 + ... + i_m <= bound of prod theta(i_j),
/// computed by iterated prefix-sum convolution.
template <class T>
T multi_sum(const std::vector<T>& theta, long m, long bound) {
    if (m < 1) throw OutOfDomain("fold count must be >= 1");
    if (bound < 0 || bound >= static_cast<long>(theta.size()))
        throw OutOfDomain("multi_sum bound exceeds available terms");
    const std::size_t n = static_cast<std::size_t>(bound) + 1;
    // S^1_t = prefix sums
    std::vector<T> s;
    s.reserve(n);
    {
        T acc(0);
        for (std::size_t t = 0; t < n; ++t) {
            sum_add(acc, theta[t]);
            T snapshot = acc;
            sum_finish(snapshot);
            s.push_back(std::move(snapshot));
        }
    }
    for (long h = 2; h <= m; ++h) {
        const bool last = (h == m);
        std::vector<T> next;
        const std::size_t lo = last ? n - 1 : 0;
        for (std::size_t t = lo; t < n; ++t) {
            T acc(0);
            for (std::size_t i = 0; i <= t; ++i) sum_add(acc, T(theta[i] * s[t - i]));
            sum_finish(acc);
            next.push_back(std::move(acc));
        }
        s = std::move(next);
    }
    return s.back();
}

namespace detail {

/// Common-denominator form of a list of rational functions: every term is
/// rescaled to num_i / common, so sums become plain polynomial sums.
template <class K>
struct CommonDen {
    std::vector<Poly<K>> nums;
    FactoredPoly<K> den;
};

template <class K>
CommonDen<K> to_common_den(const std::vector<RatFun<K>>& terms) {
    CommonDen<K> r;
    for (const auto& t : terms) r.den = FactoredPoly<K>::lcm(r.den, t.den());
    r.nums.reserve(terms.size());
    for (const auto& t : terms) r.nums.push_back(t.num() * r.den.cofactor_of(t.den()).expand_monic());
    return r;
}

}  // namespace detail

/// Sum of rational functions over their common denominator; far cheaper than
/// pairwise addition when the terms share most denominator factors.
template <class K>
RatFun<K> sum_terms(const std::vector<RatFun<K>>& terms) {
    if (terms.empty()) return RatFun<K>(0);
    auto cd = detail::to_common_den(terms);
    Poly<K> total;
    for (const auto& n : cd.nums) total += n;
    return RatFun<K>(std::move(total), std::move(cd.den));
}

/// RatFun specialization of the m-fold sum: rescale all terms to the common
/// denominator L, run the prefix-convolution recurrence on the numerator
/// polynomials, and divide by L^m once at the end.
template <class K>
RatFun<K> multi_sum(const std::vector<RatFun<K>>& theta, long m, long bound) {
    if (m < 1) throw OutOfDomain("fold count must be >= 1");
    if (bound < 0 || bound >= static_cast<long>(theta.size()))
        throw OutOfDomain("multi_sum bound exceeds available terms");
    auto cd = detail::to_common_den(theta);
    const std::size_t n = static_cast<std::size_t>(bound) + 1;
    std::vector<Poly<K>> s;
    s.reserve(n);
    {
        Poly<K> acc;
        for (std::size_t t = 0; t < n; ++t) {
            acc += cd.nums[t];
            s.push_back(acc);
        }
    }
    for (long h = 2; h <= m; ++h) {
        const bool last = (h == m);
        std::vector<Poly<K>> next;
        const std::size_t lo = last ? n - 1 : 0;
        for (std::size_t t = lo; t < n; ++t) {
            Poly<K> acc;
            for (std::size_t i = 0; i <= t; ++i) acc += cd.nums[i] * s[t - i];
            next.push_back(std::move(acc));
        }
        s = std::move(next);
    }
    FactoredPoly<K> den;
    for (long h = 0; h < m; ++h) den.mul(cd.den);
    return RatFun<K>(std::move(s.back()), std::move(den));
}

/// Brute-force oracle for multi_sum; deliberately independent of the
/// prefix-convolution path. Guarded to small folds and bounds.
template <class T>
T multi_sum_oracle(const std::vector<T>& theta, long m, long bound) {
    if (m < 1 || m > 3) throw OutOfDomain("oracle supports 1 <= m <= 3");
    if (bound < 0 || bound > 12) throw OutOfDomain("oracle supports bound <= 12");
    if (bound >= static_cast<long>(theta.size())) throw OutOfDomain("oracle bound exceeds available terms");
    T total(0);
    if (m == 1) {
        for (long i = 0; i <= bound; ++i) total += theta[static_cast<std::size_t>(i)];
    } else if (m == 2) {
        for (long i = 0; i <= bound; ++i)
            for (long j = 0; i + j <= bound; ++j)
                total += theta[static_cast<std::size_t>(i)] * theta[static_cast<std::size_t>(j)];
    } else {
        for (long i = 0; i <= bound; ++i)
            for (long j = 0; i + j <= bound; ++j)
                for (long k = 0; i + j + k <= bound; ++k)
                    total += theta[static_cast<std::size_t>(i)] * theta[static_cast<std::size_t>(j)] *
                             theta[static_cast<std::size_t>(k)];
    }
    return total;
}

}  // namespace qcongr
