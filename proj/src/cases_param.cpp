#include "case_util.hpp"

namespace qcongr::detail {

namespace {

using Qa = RatFun<Rat>;   // rational functions in the parameter a
using RFa = RatFun<Qa>;   // rational functions in q over Q(a)
using Qq = RatFun<Rat>;   // rational functions in q (coefficients of the a-lane)

const char* kModeQa = "exact-Q(a)";

Qa a_var() { return Qa(Poly<Rat>::var()); }

// ---- Q(a) lane: expressions in q with coefficients in Q(a) ----

// (1-q^n)^2 (1+a^2-a q^n) / (1-a)^2
RFa unit_u(long n, const Qa& a) {
    Poly<Qa> p = one_minus_cq(Qa(1), n);
    p *= p;
    p *= Poly<Qa>(Qa(1) + a * a) - Poly<Qa>::monomial(a, static_cast<std::size_t>(n));
    Qa den = (Qa(1) - a) * (Qa(1) - a);
    return RFa(p).scaled(Qa(1) / den);
}

// (2-q^n)(1-a q^n)(a-q^n) / (1-a)^2
RFa unit_v(long n, const Qa& a) {
    Poly<Qa> p = Poly<Qa>(Qa(2)) - Poly<Qa>::monomial(Qa(1), static_cast<std::size_t>(n));
    p *= one_minus_cq(a, n);
    p *= cq_minus(a, n);
    Qa den = (Qa(1) - a) * (Qa(1) - a);
    return RFa(p).scaled(Qa(1) / den);
}

// (1-a q^n)(a-q^n) / (1-a)^2
RFa unit_w(long n, const Qa& a) {
    Poly<Qa> p = one_minus_cq(a, n) * cq_minus(a, n);
    Qa den = (Qa(1) - a) * (Qa(1) - a);
    return RFa(p).scaled(Qa(1) / den);
}

Modulus<Qa> mod_param(long n, int phi_exp, int bracket_exp, const Qa& a) {
    ModulusBuilder<Qa> b;
    if (bracket_exp > 0) b.bracket(n, bracket_exp);
    if (phi_exp > 0) b.cyclotomic(n, phi_exp);
    b.factor(one_minus_cq(a, n));
    b.factor(cq_minus(a, n));
    return b.build();
}

// [4k+1] (q;q^2)_k^2 (aq,q/a;q^2)_k / ((q^2;q^2)_k^2 (q^2/a,aq^2;q^2)_k)
std::vector<RFa> lambda_d(long bound, const Qa& a) {
    Qa ai = Qa(1) / a;
    return build_terms<Qa>(bound, [&](RatioBuilder<Qa>& b, long k) {
        b.mul_poly(q_integer<Qa>(4 * k + 1));
        poch(b, Qa(1), 1, 2, k, 2);
        poch(b, a, 1, 2, k);
        poch(b, ai, 1, 2, k);
        poch(b, Qa(1), 2, 2, k, -2);
        poch(b, ai, 2, 2, k, -1);
        poch(b, a, 2, 2, k, -1);
    });
}

// [4k+1] (q;q^2)_k^4 (aq,q/a;q^2)_k / ((q^2;q^2)_k^4 (q^2/a,aq^2;q^2)_k) q^k
std::vector<RFa> lambda_e(long bound, const Qa& a) {
    Qa ai = Qa(1) / a;
    return build_terms<Qa>(bound, [&](RatioBuilder<Qa>& b, long k) {
        b.mul_poly(q_integer<Qa>(4 * k + 1));
        poch(b, Qa(1), 1, 2, k, 4);
        poch(b, a, 1, 2, k);
        poch(b, ai, 1, 2, k);
        poch(b, Qa(1), 2, 2, k, -4);
        poch(b, ai, 2, 2, k, -1);
        poch(b, a, 2, 2, k, -1);
        b.mul_qpow(k);
    });
}

// [2dk+r] (q^r;q^d)_k^4 (aq^r,q^r/a;q^d)_k / ((q^d;q^d)_k^4 (q^d/a,aq^d;q^d)_k)
// q^{(2d-3r)k}
std::vector<RFa> lambda_f(long d, long r, long bound, const Qa& a) {
    Qa ai = Qa(1) / a;
    return build_terms<Qa>(bound, [&](RatioBuilder<Qa>& b, long k) {
        b.mul_poly(q_integer<Qa>(2 * d * k + r));
        poch(b, Qa(1), r, d, k, 4);
        poch(b, a, r, d, k);
        poch(b, ai, r, d, k);
        poch(b, Qa(1), d, d, k, -4);
        poch(b, ai, d, d, k, -1);
        poch(b, a, d, d, k, -1);
        b.mul_qpow((2 * d - 3 * r) * k);
    });
}

// sum of (aq,q/a;q^2)_k (q;q^2)_k^2 / (q^2;q^2)_k^4 q^{2k}
RFa sum_s1(long n, const Qa& a) {
    Qa ai = Qa(1) / a;
    return sum_terms(build_terms<Qa>((n - 1) / 2, [&](RatioBuilder<Qa>& b, long k) {
        poch(b, a, 1, 2, k);
        poch(b, ai, 1, 2, k);
        poch(b, Qa(1), 1, 2, k, 2);
        poch(b, Qa(1), 2, 2, k, -4);
        b.mul_qpow(2 * k);
    }));
}

// sum of (q/a,q;q^2)_k^2 / ((q^2/a,q^2;q^2)_k^2) q^{2k}
RFa sum_s2(long n, const Qa& a) {
    Qa ai = Qa(1) / a;
    return sum_terms(build_terms<Qa>((n - 1) / 2, [&](RatioBuilder<Qa>& b, long k) {
        poch(b, ai, 1, 2, k, 2);
        poch(b, Qa(1), 1, 2, k, 2);
        poch(b, ai, 2, 2, k, -2);
        poch(b, Qa(1), 2, 2, k, -2);
        b.mul_qpow(2 * k);
    }));
}

// sum of (q;q^2)_k^4 / ((aq^2,q^2/a;q^2)_k (q^2;q^2)_k^2) q^{2k}
RFa sum_s3(long n, const Qa& a) {
    Qa ai = Qa(1) / a;
    return sum_terms(build_terms<Qa>((n - 1) / 2, [&](RatioBuilder<Qa>& b, long k) {
        poch(b, Qa(1), 1, 2, k, 4);
        poch(b, a, 2, 2, k, -1);
        poch(b, ai, 2, 2, k, -1);
        poch(b, Qa(1), 2, 2, k, -2);
        b.mul_qpow(2 * k);
    }));
}

// sum of (q,a,aq;q^2)_k / ((q^2,aq^2,aq^2;q^2)_k) q^{2k}
RFa sum_wp(long n, const Qa& a) {
    return sum_terms(build_terms<Qa>((n - 1) / 2, [&](RatioBuilder<Qa>& b, long k) {
        poch(b, Qa(1), 1, 2, k);
        poch(b, a, 0, 2, k);
        poch(b, a, 1, 2, k);
        poch(b, Qa(1), 2, 2, k, -1);
        poch(b, a, 2, 2, k, -2);
        b.mul_qpow(2 * k);
    }));
}

// sum of (q^r,q^{d-r},aq^r,q^r/a;q^d)_k / ((q^d;q^d)_k^3 (q^{2r};q^d)_k) q^{dk}
RFa sum_u1(long d, long r, long mu, const Qa& a) {
    Qa ai = Qa(1) / a;
    return sum_terms(build_terms<Qa>(mu, [&](RatioBuilder<Qa>& b, long k) {
        poch(b, Qa(1), r, d, k);
        poch(b, Qa(1), d - r, d, k);
        poch(b, a, r, d, k);
        poch(b, ai, r, d, k);
        poch(b, Qa(1), d, d, k, -3);
        poch(b, Qa(1), 2 * r, d, k, -1);
        b.mul_qpow(d * k);
    }));
}

// sum of (q^r;q^d)_k^2 (q^r/a,q^{d-r}/a;q^d)_k /
//        ((q^d;q^d)_k^2 (q^d/a,q^{2r}/a;q^d)_k) q^{dk}
RFa sum_u2(long d, long r, long mu, const Qa& a) {
    Qa ai = Qa(1) / a;
    return sum_terms(build_terms<Qa>(mu, [&](RatioBuilder<Qa>& b, long k) {
        poch(b, Qa(1), r, d, k, 2);
        poch(b, ai, r, d, k);
        poch(b, ai, d - r, d, k);
        poch(b, Qa(1), d, d, k, -2);
        poch(b, ai, d, d, k, -1);
        poch(b, ai, 2 * r, d, k, -1);
        b.mul_qpow(d * k);
    }));
}

// sum of (q^r;q^d)_k^3 (q^{d-r};q^d)_k / ((aq^d,q^d/a,q^d,q^{2r};q^d)_k) q^{dk}
RFa sum_u3(long d, long r, long mu, const Qa& a) {
    Qa ai = Qa(1) / a;
    return sum_terms(build_terms<Qa>(mu, [&](RatioBuilder<Qa>& b, long k) {
        poch(b, Qa(1), r, d, k, 3);
        poch(b, Qa(1), d - r, d, k);
        poch(b, a, d, d, k, -1);
        poch(b, ai, d, d, k, -1);
        poch(b, Qa(1), d, d, k, -1);
        poch(b, Qa(1), 2 * r, d, k, -1);
        b.mul_qpow(d * k);
    }));
}

// ((q^2;q^2)_M^4 / (aq^2,q^2/a;q^2)_M^2) with M = (n-1)/2
RFa poch_ratio_c2(long n, const Qa& a) {
    Qa ai = Qa(1) / a;
    long M = (n - 1) / 2;
    RatioBuilder<Qa> b;
    poch(b, Qa(1), 2, 2, M, 4);
    poch(b, a, 2, 2, M, -2);
    poch(b, ai, 2, 2, M, -2);
    return b.build();
}

CaseResult run_thm_d(const Instance& in, const CaseOptions& opt) {
    require_odd(in.n);
    const long n = in.n;
    const Qa a = a_var();
    auto M = mod_param(n, 2, 1, a);
    check_degree_cap(M, opt);
    RFa lhs = multi_sum(lambda_d(n - 1, a), 2, n - 1);
    RFa head = rf_bracket<Qa>(n).pow(2) * rf_qpow<Qa>(1 - n);
    RFa rhs = head + head * unit_w(n, a) * (RFa(1) - poch_ratio_c2(n, a));
    return congruence_result("thm_d", in, kModeQa, lhs, rhs, M);
}

CaseResult run_thm_e(const Instance& in, const CaseOptions& opt) {
    require_odd(in.n);
    const long n = in.n;
    const Qa a = a_var();
    auto M = mod_param(n, 3, 1, a);
    check_degree_cap(M, opt);
    RFa lhs = multi_sum(lambda_e(n - 1, a), 2, n - 1);
    RFa head = rf_bracket<Qa>(n).pow(2) * rf_qpow<Qa>(1 - n);
    RFa rhs = head * unit_u(n, a) * sum_s1(n, a).pow(2) -
              head * unit_v(n, a) * sum_s3(n, a).pow(2);
    return congruence_result("thm_e", in, kModeQa, lhs, rhs, M);
}

// [n]^m q^{mr(r-n)/d} (q^{2r};q^d)_mu^m / (q^d;q^d)_mu^m
RFa prefactor_f(long d, long m, long r, long n, long mu) {
    RatioBuilder<Qa> b;
    poch(b, Qa(1), 2 * r, d, mu, static_cast<int>(m));
    poch(b, Qa(1), d, d, mu, -static_cast<int>(m));
    return rf_bracket<Qa>(n).pow(m) * rf_qpow<Qa>(m * r * (r - n) / d) * b.build();
}

CaseResult run_thm_f(const Instance& in, const CaseOptions& opt) {
    validate_dmrn(in);
    const long d = in.d, m = in.m, r = in.r, n = in.n;
    const long mu = (n - r) / d;
    const Qa a = a_var();
    auto M = mod_param(n, 4, 0, a);
    check_degree_cap(M, opt);
    RFa lhs = multi_sum(lambda_f(d, r, n - 1, a), m, n - 1);
    RFa pref = prefactor_f(d, m, r, n, mu);
    RFa rhs = pref * unit_u(n, a) * sum_u1(d, r, mu, a).pow(m) -
              pref * unit_v(n, a) * sum_u3(d, r, mu, a).pow(m);
    return congruence_result("thm_f", in, kModeQa, lhs, rhs, M);
}

CaseResult run_wei_p(const Instance& in, const CaseOptions& opt) {
    require_odd(in.n);
    const long n = in.n;
    const Qa a = a_var();
    Qa ai = Qa(1) / a;
    auto M = mod_param(n, 2, 1, a);
    check_degree_cap(M, opt);
    RFa lhs = multi_sum(lambda_d(n - 1, a), 2, n - 1);
    long Mi = (n - 1) / 2;
    RatioBuilder<Qa> pb;  // (aq^2;q^2)_M^2 / (q^2/a;q^2)_M^2
    poch(pb, a, 2, 2, Mi, 2);
    poch(pb, ai, 2, 2, Mi, -2);
    RFa rhs = rf_bracket<Qa>(n).pow(2) * rf_qpow<Qa>(1 - n) * unit_u(n, a) -
              rf_bracket<Qa>(n).pow(2) * rf_qpow<Qa>(1 - n).scaled(k_pow(a, 1 - n)) *
                  unit_v(n, a) * pb.build() * sum_wp(n, a).pow(2);
    return congruence_result("wei_p", in, kModeQa, lhs, rhs, M);
}

CaseResult run_wei_q(const Instance& in, const CaseOptions& opt) {
    require_odd(in.n);
    const long n = in.n;
    const Qa a = a_var();
    Qa ai = Qa(1) / a;
    auto M = ModulusBuilder<Qa>().cyclotomic(n, 1).build();
    check_degree_cap(M, opt);
    RFa lhs = sum_wp(n, a);
    long Mi = (n - 1) / 2;
    RatioBuilder<Qa> pb;  // (q,q^2;q^2)_M / (aq^2,q/a;q^2)_M
    poch(pb, Qa(1), 1, 2, Mi);
    poch(pb, Qa(1), 2, 2, Mi);
    poch(pb, a, 2, 2, Mi, -1);
    poch(pb, ai, 1, 2, Mi, -1);
    return congruence_result("wei_q", in, kModeQa, lhs, pb.build(), M);
}

CaseResult run_wei_r(const Instance& in, const CaseOptions& opt) {
    require_odd(in.n);
    const long n = in.n;
    const Qa a = a_var();
    auto M = mod_param(n, 2, 1, a);
    check_degree_cap(M, opt);
    RFa lhs = multi_sum(lambda_d(n - 1, a), 2, n - 1);
    RFa head = rf_bracket<Qa>(n).pow(2) * rf_qpow<Qa>(1 - n);
    RFa rhs = head * unit_u(n, a) - head * unit_v(n, a) * poch_ratio_c2(n, a);
    return congruence_result("wei_r", in, kModeQa, lhs, rhs, M);
}

CaseResult run_wei_gg(const Instance& in, const CaseOptions& opt) {
    require_odd(in.n);
    const long n = in.n;
    const Qa a = a_var();
    Qa ai = Qa(1) / a;
    auto M = mod_param(n, 3, 1, a);
    check_degree_cap(M, opt);
    RFa lhs = multi_sum(lambda_e(n - 1, a), 2, n - 1);
    long Mi = (n - 1) / 2;
    RatioBuilder<Qa> pb;  // (q^2/a;q^2)_M^2 / (aq^2;q^2)_M^2
    poch(pb, ai, 2, 2, Mi, 2);
    poch(pb, a, 2, 2, Mi, -2);
    RFa rhs = rf_bracket<Qa>(n).pow(2) * rf_qpow<Qa>(1 - n) * unit_u(n, a) * sum_s1(n, a).pow(2) -
              rf_bracket<Qa>(n).pow(2) * rf_qpow<Qa>(1 - n).scaled(k_pow(a, n - 1)) *
                  unit_v(n, a) * pb.build() * sum_s2(n, a).pow(2);
    return congruence_result("wei_gg", in, kModeQa, lhs, rhs, M);
}

CaseResult run_wei_hh(const Instance& in, const CaseOptions& opt) {
    require_odd(in.n);
    const long n = in.n;
    const Qa a = a_var();
    Qa ai = Qa(1) / a;
    auto M = ModulusBuilder<Qa>().cyclotomic(n, 2).build();
    check_degree_cap(M, opt);
    long Mi = (n - 1) / 2;
    RatioBuilder<Qa> pb;  // (aq^2;q^2)_M / (q^2/a;q^2)_M
    poch(pb, a, 2, 2, Mi);
    poch(pb, ai, 2, 2, Mi, -1);
    RFa rhs = pb.build().scaled(k_pow(a, (1 - n) / 2)) * sum_s3(n, a);
    return congruence_result("wei_hh", in, kModeQa, sum_s2(n, a), rhs, M);
}

CaseResult run_wei_ii(const Instance& in, const CaseOptions& opt) {
    require_odd(in.n);
    const long n = in.n;
    const Qa a = a_var();
    auto M = mod_param(n, 3, 1, a);
    check_degree_cap(M, opt);
    RFa lhs = multi_sum(lambda_e(n - 1, a), 2, n - 1);
    RFa s1 = sum_s1(n, a), s3 = sum_s3(n, a);
    RFa head = rf_bracket<Qa>(n).pow(2) * rf_qpow<Qa>(1 - n);
    RFa rhs = head * s1.pow(2) + head * unit_v(n, a) * (s1.pow(2) - s3.pow(2));
    return congruence_result("wei_ii", in, kModeQa, lhs, rhs, M);
}

CaseResult run_wei_ggg(const Instance& in, const CaseOptions& opt) {
    validate_dmrn(in);
    const long d = in.d, m = in.m, r = in.r, n = in.n;
    const long mu = (n - r) / d;
    const Qa a = a_var();
    Qa ai = Qa(1) / a;
    auto M = mod_param(n, 4, 0, a);
    check_degree_cap(M, opt);
    RFa lhs = multi_sum(lambda_f(d, r, n - 1, a), m, n - 1);
    RatioBuilder<Qa> pb;  // (q^{2r}/a;q^d)_mu^m / (aq^d;q^d)_mu^m
    poch(pb, ai, 2 * r, d, mu, static_cast<int>(m));
    poch(pb, a, d, d, mu, -static_cast<int>(m));
    RFa rhs = unit_u(n, a) * prefactor_f(d, m, r, n, mu) * sum_u1(d, r, mu, a).pow(m) -
              unit_v(n, a) * rf_bracket<Qa>(n).pow(m) *
                  rf_qpow<Qa>(-r * m * mu).scaled(k_pow(a, m * mu)) * pb.build() *
                  sum_u2(d, r, mu, a).pow(m);
    return congruence_result("wei_ggg", in, kModeQa, lhs, rhs, M);
}

CaseResult run_wei_hhh(const Instance& in, const CaseOptions& opt) {
    validate_dmrn(in);
    const long d = in.d, r = in.r, n = in.n;
    const long mu = (n - r) / d;
    const Qa a = a_var();
    Qa ai = Qa(1) / a;
    auto M = ModulusBuilder<Qa>().cyclotomic(n, 2).build();
    check_degree_cap(M, opt);
    RatioBuilder<Qa> pb;  // (q^{2r},aq^d;q^d)_mu / (q^d,q^{2r}/a;q^d)_mu
    poch(pb, Qa(1), 2 * r, d, mu);
    poch(pb, a, d, d, mu);
    poch(pb, Qa(1), d, d, mu, -1);
    poch(pb, ai, 2 * r, d, mu, -1);
    RFa rhs = pb.build().scaled(k_pow(a, (r - n) / d)) * sum_u3(d, r, mu, a);
    return congruence_result("wei_hhh", in, kModeQa, sum_u2(d, r, mu, a), rhs, M);
}

CaseResult run_wei_iii(const Instance& in, const CaseOptions& opt) {
    validate_dmrn(in);
    const long d = in.d, m = in.m, r = in.r, n = in.n;
    const long mu = (n - r) / d;
    const Qa a = a_var();
    auto M = mod_param(n, 4, 0, a);
    check_degree_cap(M, opt);
    RFa lhs = multi_sum(lambda_f(d, r, n - 1, a), m, n - 1);
    RFa u1 = sum_u1(d, r, mu, a), u3 = sum_u3(d, r, mu, a);
    RFa pref = prefactor_f(d, m, r, n, mu);
    RFa rhs = pref * u1.pow(m) + pref * unit_v(n, a) * (u1.pow(m) - u3.pow(m));
    return congruence_result("wei_iii", in, kModeQa, lhs, rhs, M);
}

// ---- a-lane: rational functions of a with coefficients in Q(q), feeding
//      the two-sided limit at a = 1 ----

Qq qq_pow(long e) {
    if (e >= 0) return Qq(Poly<Rat>::monomial(Rat(1), static_cast<std::size_t>(e)));
    return Qq(1) / Qq(Poly<Rat>::monomial(Rat(1), static_cast<std::size_t>(-e)));
}

// multiplies (or divides) prod_{j<k} (1 - q^{qe+dj} a^{ae}) with ae in {1,-1}
void poch_a(RatioBuilder<Qq>& b, long qe, long d, long k, long ae, bool divide = false) {
    for (long j = 0; j < k; ++j) {
        QMono<Qq> f{qq_pow(qe + d * j), ae};
        if (divide)
            b.div_one_minus(f);
        else
            b.mul_one_minus(f);
    }
}

// q^e / (1-q^e)^2
Qq qq_pole2(long e) {
    RatioBuilder<Rat> b;
    b.mul_qpow(e);
    b.div_one_minus(QMono<Rat>{Rat(1), e});
    b.div_one_minus(QMono<Rat>{Rat(1), e});
    return b.build();
}

// (q^{e1};q^d)_k^{p1} (q^{e2};q^d)_k^{p2} ... as a constant in Q(q)
Qq qq_poch(long e, long d, long k, int pw) {
    RatioBuilder<Rat> b;
    poch(b, Rat(1), e, d, k, pw);
    return b.build();
}

CaseResult run_hopital_c2(const Instance& in, const CaseOptions&) {
    require_odd(in.n);
    const long n = in.n, M = (n - 1) / 2;
    RatioBuilder<Qq> b;  // (q^2;q^2)_M^4 / (aq^2,q^2/a;q^2)_M^2 as a function of a
    b.mul_const(qq_poch(2, 2, M, 4));
    poch_a(b, 2, 2, M, 1, true);
    poch_a(b, 2, 2, M, 1, true);
    poch_a(b, 2, 2, M, -1, true);
    poch_a(b, 2, 2, M, -1, true);
    RatFun<Qq> f = RatFun<Qq>(1) - b.build();
    Qq limit = hopital_limit(f, 2);
    Qq target(0);
    for (long t = 1; t <= M; ++t) target -= qq_pole2(2 * t).scaled(Rat(2));
    return equality_result("hopital_c2", in, "exact", limit == target);
}

CaseResult run_hopital_long(const Instance& in, const CaseOptions&) {
    require_odd(in.n);
    const long n = in.n, M = (n - 1) / 2;
    std::vector<RatFun<Qq>> t1, t3;
    for (long k = 0; k <= M; ++k) {
        RatioBuilder<Qq> b1;  // (aq,q/a;q^2)_k (q;q^2)_k^2 / (q^2;q^2)_k^4 q^{2k}
        b1.mul_const(qq_poch(1, 2, k, 2) * qq_poch(2, 2, k, -4) * qq_pow(2 * k));
        poch_a(b1, 1, 2, k, 1);
        poch_a(b1, 1, 2, k, -1);
        t1.push_back(b1.build());
        RatioBuilder<Qq> b3;  // (q;q^2)_k^4 / ((aq^2,q^2/a;q^2)_k (q^2;q^2)_k^2) q^{2k}
        b3.mul_const(qq_poch(1, 2, k, 4) * qq_poch(2, 2, k, -2) * qq_pow(2 * k));
        poch_a(b3, 2, 2, k, 1, true);
        poch_a(b3, 2, 2, k, -1, true);
        t3.push_back(b3.build());
    }
    RatFun<Qq> s1 = sum_terms(t1), s3 = sum_terms(t3);
    Qq limit = hopital_limit(s1 * s1 - s3 * s3, 2);
    Qq outer(0), weighted(0);
    for (long k = 0; k <= M; ++k) {
        Qq g = qq_poch(1, 2, k, 4) * qq_poch(2, 2, k, -4) * qq_pow(2 * k);
        outer += g;
        Qq inner(0);
        for (long t = 1; t <= 2 * k; ++t) inner += qq_pole2(t);
        weighted += g * inner;
    }
    Qq target = Qq(0) - outer * weighted.scaled(Rat(2));
    return equality_result("hopital_long", in, "exact", limit == target);
}

CaseResult run_hopital_general(const Instance& in, const CaseOptions&) {
    validate_dmrn(in);
    const long d = in.d, m = in.m, r = in.r, n = in.n;
    const long mu = (n - r) / d;
    std::vector<RatFun<Qq>> u1_terms, u3_terms;
    Qq u3v(0);  // a -> 1 value of both sums
    std::vector<Qq> g(static_cast<std::size_t>(mu) + 1);
    for (long k = 0; k <= mu; ++k) {
        // (q^r,q^{d-r},aq^r,q^r/a;q^d)_k / ((q^d;q^d)_k^3 (q^{2r};q^d)_k) q^{dk}
        RatioBuilder<Qq> b1;
        b1.mul_const(qq_poch(r, d, k, 1) * qq_poch(d - r, d, k, 1) * qq_poch(d, d, k, -3) *
                     qq_poch(2 * r, d, k, -1) * qq_pow(d * k));
        poch_a(b1, r, d, k, 1);
        poch_a(b1, r, d, k, -1);
        u1_terms.push_back(b1.build());
        // (q^r;q^d)_k^3 (q^{d-r};q^d)_k / ((aq^d,q^d/a,q^d,q^{2r};q^d)_k) q^{dk}
        RatioBuilder<Qq> b3;
        b3.mul_const(qq_poch(r, d, k, 3) * qq_poch(d - r, d, k, 1) * qq_poch(d, d, k, -1) *
                     qq_poch(2 * r, d, k, -1) * qq_pow(d * k));
        poch_a(b3, d, d, k, 1, true);
        poch_a(b3, d, d, k, -1, true);
        u3_terms.push_back(b3.build());
        g[static_cast<std::size_t>(k)] = qq_poch(r, d, k, 3) * qq_poch(d - r, d, k, 1) *
                                         qq_poch(d, d, k, -3) * qq_poch(2 * r, d, k, -1) *
                                         qq_pow(d * k);
        u3v += g[static_cast<std::size_t>(k)];
    }
    RatFun<Qq> u1 = sum_terms(u1_terms), u3 = sum_terms(u3_terms);
    Qq limit = hopital_limit(u1.pow(m) - u3.pow(m), 2);
    Qq weighted(0);
    for (long k = 0; k <= mu; ++k) {
        Qq inner(0);
        for (long t = 1; t <= k; ++t) inner += qq_pole2(d * t - d + r) + qq_pole2(d * t);
        weighted += g[static_cast<std::size_t>(k)] * inner;
    }
    Qq target = Qq(0) - k_pow(u3v, m - 1) * weighted.scaled(Rat(m));
    return equality_result("hopital_general", in, "exact", limit == target);
}

std::vector<Instance> odd_grid(long lo, long hi) {
    std::vector<Instance> v;
    for (long n = lo; n <= hi; n += 2) v.push_back(inst_n(n));
    return v;
}

}  // namespace

void register_param_cases(Registry& reg) {
    reg.push_back({{"thm_d", "congruence", kModeQa,
                    "double sum of [4k+1](q;q^2)_k^2(aq,q/a;q^2)_k/((q^2;q^2)_k^2(q^2/a,aq^2;q^2)_k)"
                    " = [n]^2 q^{1-n}{1 + (1-aq^n)(a-q^n)/(1-a)^2 (1 - Pochhammer ratio)}"
                    " mod [n]Phi_n^2(1-aq^n)(a-q^n)",
                    false},
                   {inst_n(3), inst_n(5), inst_n(7), inst_n(9)},
                   run_thm_d});
    reg.push_back({{"thm_e", "congruence", kModeQa,
                    "double sum of [4k+1](q;q^2)_k^4(aq,q/a;q^2)_k/(...)q^k = U S1^2 - V S3^2 "
                    "mod [n]Phi_n^3(1-aq^n)(a-q^n)",
                    false},
                   {inst_n(3), inst_n(5), inst_n(7)},
                   run_thm_e});
    reg.push_back({{"thm_f", "congruence", kModeQa,
                    "m-fold sum of [2dk+r](q^r;q^d)_k^4(aq^r,q^r/a;q^d)_k/(...)q^{(2d-3r)k} = "
                    "prefactor (U U1^m - V U3^m) mod Phi_n^4(1-aq^n)(a-q^n)",
                    false},
                   {inst_dmrn(3, 2, 1, 4), inst_dmrn(3, 2, 1, 7)},
                   run_thm_f});
    reg.push_back({{"wei_p", "congruence", kModeQa,
                    "thm_d sum = [n]^2 q^{1-n} U - [n]^2(aq)^{1-n} V (aq^2;q^2)^2/(q^2/a;q^2)^2 "
                    "{sum (q,a,aq;q^2)_k/((q^2,aq^2,aq^2;q^2)_k) q^{2k}}^2 "
                    "mod [n]Phi_n^2(1-aq^n)(a-q^n)",
                    false},
                   {inst_n(3), inst_n(5), inst_n(7)},
                   run_wei_p});
    reg.push_back({{"wei_q", "congruence", kModeQa,
                    "sum (q,a,aq;q^2)_k/((q^2,aq^2,aq^2;q^2)_k) q^{2k} = "
                    "(q,q^2;q^2)_{(n-1)/2}/(aq^2,q/a;q^2)_{(n-1)/2} mod Phi_n",
                    false},
                   odd_grid(3, 11),
                   run_wei_q});
    reg.push_back({{"wei_r", "congruence", kModeQa,
                    "thm_d sum = [n]^2 q^{1-n} U - [n]^2 q^{1-n} V (q^2;q^2)^4/(aq^2,q^2/a;q^2)^2 "
                    "mod [n]Phi_n^2(1-aq^n)(a-q^n)",
                    false},
                   {inst_n(3), inst_n(5), inst_n(7)},
                   run_wei_r});
    reg.push_back({{"wei_gg", "congruence", kModeQa,
                    "thm_e sum = [n]^2 q^{1-n} U S1^2 - [n]^2 (a/q)^{n-1} V "
                    "(q^2/a;q^2)^2/(aq^2;q^2)^2 S2^2 mod [n]Phi_n^3(1-aq^n)(a-q^n)",
                    false},
                   {inst_n(3), inst_n(5), inst_n(7)},
                   run_wei_gg});
    reg.push_back({{"wei_hh", "congruence", kModeQa,
                    "sum (q/a,q;q^2)_k^2/((q^2/a,q^2;q^2)_k^2) q^{2k} = a^{(1-n)/2} "
                    "(aq^2;q^2)/(q^2/a;q^2) sum (q;q^2)_k^4/((aq^2,q^2/a;q^2)_k(q^2;q^2)_k^2) "
                    "q^{2k} mod Phi_n^2",
                    false},
                   odd_grid(3, 9),
                   run_wei_hh});
    reg.push_back({{"wei_ii", "congruence", kModeQa,
                    "thm_e sum = [n]^2 q^{1-n} S1^2 + [n]^2 q^{1-n} V (S1^2 - S3^2) "
                    "mod [n]Phi_n^3(1-aq^n)(a-q^n)",
                    false},
                   {inst_n(3), inst_n(5), inst_n(7)},
                   run_wei_ii});
    reg.push_back({{"wei_ggg", "congruence", kModeQa,
                    "thm_f sum = U prefactor U1^m - V [n]^m (a/q^r)^{m mu} "
                    "(q^{2r}/a;q^d)^m/(aq^d;q^d)^m U2^m mod Phi_n^4(1-aq^n)(a-q^n)",
                    false},
                   {inst_dmrn(3, 2, 1, 4), inst_dmrn(3, 2, 1, 7)},
                   run_wei_ggg});
    reg.push_back({{"wei_hhh", "congruence", kModeQa,
                    "U2 sum = a^{(r-n)/d}(q^{2r},aq^d;q^d)_mu/(q^d,q^{2r}/a;q^d)_mu U3 sum "
                    "mod Phi_n^2",
                    false},
                   {inst_dmrn(3, 2, 1, 4), inst_dmrn(3, 2, 1, 7), inst_dmrn(3, 2, 2, 5),
                    inst_dmrn(3, 2, 2, 8)},
                   run_wei_hhh});
    reg.push_back({{"wei_iii", "congruence", kModeQa,
                    "thm_f sum = prefactor U1^m + prefactor V (U1^m - U3^m) "
                    "mod Phi_n^4(1-aq^n)(a-q^n)",
                    false},
                   {inst_dmrn(3, 2, 1, 4), inst_dmrn(3, 2, 1, 7)},
                   run_wei_iii});
    reg.push_back({{"hopital_c2", "property", "exact",
                    "lim_{a->1} (1/(1-a)^2){1 - (q^2;q^2)_M^4/(aq^2,q^2/a;q^2)_M^2} = "
                    "-2 sum_{t<=(n-1)/2} q^{2t}/(1-q^{2t})^2",
                    false},
                   {inst_n(3), inst_n(5), inst_n(7)},
                   run_hopital_c2});
    reg.push_back({{"hopital_long", "property", "exact",
                    "lim_{a->1} (S1^2-S3^2)/(1-a)^2 = -2 S4 sum_k s4(k) sum_{t<=2k} "
                    "q^t/(1-q^t)^2",
                    false},
                   {inst_n(3), inst_n(5), inst_n(7)},
                   run_hopital_long});
    reg.push_back({{"hopital_general", "property", "exact",
                    "lim_{a->1} (U1^m-U3^m)/(1-a)^2 = -m U3^{m-1} sum_k g(k) sum_{t<=k} "
                    "{q^{dt-d+r}/(1-q^{dt-d+r})^2 + q^{dt}/(1-q^{dt})^2}",
                    false},
                   {inst_dmrn(3, 2, 1, 4), inst_dmrn(3, 2, 1, 7), inst_dmrn(3, 3, 1, 4),
                    inst_dmrn(3, 2, 2, 5), inst_dmrn(4, 3, 3, 7)},
                   run_hopital_general});
}

}  // namespace qcongr::detail
