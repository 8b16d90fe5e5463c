#pragma once

#include "qcongr/cases.hpp"
#include "qcongr/congruence.hpp"
#include "qcongr/io.hpp"
#include "qcongr/qseries.hpp"

#include <functional>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace qcongr::detail {

using RF = RatFun<Rat>;
using Qx = RatFun<Rat>;      // a univariate rational-function field, reused
using RFx = RatFun<RatFun<Rat>>;  // rational functions with such coefficients

template <class K>
K k_pow(const K& x, long e) {
    K acc(1);
    K b = e < 0 ? K(1) / x : x;
    for (long i = e < 0 ? -e : e; i > 0; --i) acc *= b;
    return acc;
}

template <class K>
RatFun<K> rf_qpow(long e) {
    RatioBuilder<K> b;
    b.mul_qpow(e);
    return b.build();
}

template <class K>
RatFun<K> rf_bracket(long r) {
    return RatFun<K>(q_integer<K>(r));
}

/// Multiplies (c*q^e; q^d)_k^pw into the builder; negative pw divides.
template <class K>
void poch(RatioBuilder<K>& b, const K& c, long e, long d, long k, int pw = 1) {
    for (int i = 0; i < (pw < 0 ? -pw : pw); ++i) {
        if (pw > 0)
            b.mul_poch(QMono<K>{c, e}, d, k);
        else
            b.div_poch(QMono<K>{c, e}, d, k);
    }
}

template <class K, class F>
std::vector<RatFun<K>> build_terms(long bound, F&& fill) {
    std::vector<RatFun<K>> v;
    v.reserve(static_cast<std::size_t>(bound) + 1);
    for (long k = 0; k <= bound; ++k) {
        RatioBuilder<K> b;
        fill(b, k);
        v.push_back(b.build());
    }
    return v;
}

template <class K>
Poly<K> one_minus_cq(const K& c, long e) {
    return Poly<K>(K(1)) - Poly<K>::monomial(c, static_cast<std::size_t>(e));
}

template <class K>
Poly<K> cq_minus(const K& c, long e) {
    return Poly<K>(c) - Poly<K>::monomial(K(1), static_cast<std::size_t>(e));
}

template <class K>
CaseResult congruence_result(const std::string& id, const Instance& inst, const std::string& mode,
                             const RatFun<K>& lhs, const RatFun<K>& rhs, const Modulus<K>& M) {
    CaseResult r;
    r.id = id;
    r.inst = inst;
    r.mode = mode;
    auto v = congruent(lhs, rhs, M);
    r.holds = v.holds;
    r.denominator_coprime = v.denominator_coprime;
    if (!v.denominator_coprime)
        r.note = "difference denominator shares a factor with the modulus";
    else if (!v.holds)
        r.note = "nonzero residue of degree " + std::to_string(v.residue.deg());
    return r;
}

inline CaseResult equality_result(const std::string& id, const Instance& inst,
                                  const std::string& mode, bool equal, int samples = 0) {
    CaseResult r;
    r.id = id;
    r.inst = inst;
    r.mode = mode;
    r.holds = equal;
    r.samples = samples;
    if (!equal) r.note = "sides differ";
    return r;
}

/// Runs `check` on `count` sampled parameter tuples of width `nparams`; the
/// flat sample list is collision-free, so every tuple is non-degenerate.
inline CaseResult sampled_result(const std::string& id, const Instance& inst,
                                 std::function<std::pair<bool, bool>(const std::vector<Rat>&)> check,
                                 int nparams, int count, unsigned long seed) {
    std::vector<Rat> flat = sample_params(static_cast<std::size_t>(nparams * count), seed);
    CaseResult r;
    r.id = id;
    r.inst = inst;
    r.mode = "sampled";
    r.holds = true;
    for (int i = 0; i < count; ++i) {
        std::vector<Rat> tuple(flat.begin() + i * nparams, flat.begin() + (i + 1) * nparams);
        auto [holds, coprime] = check(tuple);
        ++r.samples;
        if (!coprime) {
            r.denominator_coprime = false;
            r.holds = false;
            r.note = "difference denominator shares a factor with the modulus (sample " +
                     std::to_string(i) + ")";
            return r;
        }
        if (!holds) {
            r.holds = false;
            r.note = "failed at sample " + std::to_string(i);
            return r;
        }
    }
    return r;
}

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw OutOfDomain(msg);
}

inline void require_odd(long n) {
    require(n >= 1, "n must be a positive integer");
    require(n % 2 == 1, "n must be odd");
}

inline void validate_dmrn(const Instance& in) {
    require(in.d >= 1 && in.m >= 1 && in.r >= 1 && in.n >= 1, "d, m, r, n must be positive");
    require(in.d >= in.m && in.m >= 2, "need d >= m >= 2");
    require(std::gcd(in.r, in.d) == 1, "need gcd(r, d) = 1");
    require(in.n > in.r && (in.n - in.r) % in.d == 0, "need n = r (mod d) with n > r");
}

template <class K>
void check_degree_cap(const Modulus<K>& m, const CaseOptions& opt) {
    if (m.expanded.deg() > opt.degree_cap)
        throw OutOfDomain("modulus degree " + std::to_string(m.expanded.deg()) +
                          " exceeds degree cap " + std::to_string(opt.degree_cap));
}

}  // namespace qcongr::detail

namespace qcongr::detail {

struct CaseDef {
    CaseInfo info;
    std::vector<Instance> defaults;
    std::function<CaseResult(const Instance&, const CaseOptions&)> run;
};

using Registry = std::vector<CaseDef>;

/// Named term sequences covering every summand shape the catalog feeds into
/// multi_sum; used for the oracle cross-checks.
std::vector<std::pair<std::string, std::vector<RF>>> oracle_summands(long bound);

void register_sum_cases(Registry&);
void register_param_cases(Registry&);
void register_sampled_cases(Registry&);
void register_classical_cases(Registry&);
void register_numeric_cases(Registry&);

Instance inst_n(long n);
Instance inst_dmrn(long d, long m, long r, long n);
Instance inst_ps(long p, long s);

}  // namespace qcongr::detail
