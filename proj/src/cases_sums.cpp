#include "case_util.hpp"

#include <numeric>

namespace qcongr::detail {

namespace {

const Rat kOne{1};

// [4k+1] (q;q^2)_k^4 / (q^2;q^2)_k^4
std::vector<RF> theta_c4(long bound) {
    return build_terms<Rat>(bound, [](RatioBuilder<Rat>& b, long k) {
        b.mul_poly(q_integer<Rat>(4 * k + 1));
        poch(b, kOne, 1, 2, k, 4);
        poch(b, kOne, 2, 2, k, -4);
    });
}

// [4k+1] (q;q^2)_k^6 / (q^2;q^2)_k^6 q^k
std::vector<RF> theta_c6(long bound) {
    return build_terms<Rat>(bound, [](RatioBuilder<Rat>& b, long k) {
        b.mul_poly(q_integer<Rat>(4 * k + 1));
        poch(b, kOne, 1, 2, k, 6);
        poch(b, kOne, 2, 2, k, -6);
        b.mul_qpow(k);
    });
}

// (q;q^2)_k^4 / (q^2;q^2)_k^4 q^{2k}
RF s4_term(long k) {
    RatioBuilder<Rat> b;
    poch(b, kOne, 1, 2, k, 4);
    poch(b, kOne, 2, 2, k, -4);
    b.mul_qpow(2 * k);
    return b.build();
}

RF s4_sum(long n) {
    std::vector<RF> t;
    for (long k = 0; k <= (n - 1) / 2; ++k) t.push_back(s4_term(k));
    return sum_terms(t);
}

// q^e (1-q)^2 / (1-q^e)^2  — that is q^e / [e]^2 with the denominator kept
// in cyclotomic factors
RF qpow_over_bracket_sq(long e) {
    RatioBuilder<Rat> b;
    b.mul_qpow(e);
    Poly<Rat> om = one_minus_cq(kOne, 1);
    b.mul_poly(om * om);
    b.div_one_minus(QMono<Rat>{kOne, e});
    b.div_one_minus(QMono<Rat>{kOne, e});
    return b.build();
}

RF two_minus_qn(long n) {
    return RF(Poly<Rat>(Rat(2)) - Poly<Rat>::monomial(kOne, static_cast<std::size_t>(n)));
}

Modulus<Rat> bracket_phi(long n, int phi_exp, int bracket_exp = 1) {
    return ModulusBuilder<Rat>().bracket(n, bracket_exp).cyclotomic(n, phi_exp).build();
}

std::vector<Instance> odd_grid(long lo, long hi) {
    std::vector<Instance> v;
    for (long n = lo; n <= hi; n += 2) v.push_back(inst_n(n));
    return v;
}

CaseResult run_van_hamme_c2_q(const Instance& in, const CaseOptions& opt) {
    require_odd(in.n);
    const long n = in.n;
    auto M = bracket_phi(n, 3);
    check_degree_cap(M, opt);
    std::vector<RF> t = theta_c4((n - 1) / 2);
    RF lhs = sum_terms(t);
    Poly<Rat> om = one_minus_cq(kOne, 1);
    RF correction = rf_bracket<Rat>(n).pow(2) * RF(om * om).scaled(make_rat(n * n - 1, 24));
    RF rhs = rf_bracket<Rat>(n) * rf_qpow<Rat>((1 - n) / 2) * (RF(1) + correction);
    return congruence_result("van_hamme_c2_q", in, "exact", lhs, rhs, M);
}

CaseResult run_van_hamme_d2_q(const Instance& in, const CaseOptions& opt) {
    require(in.n > 1 && in.n % 3 == 1, "n must satisfy n = 1 (mod 3), n > 1");
    const long n = in.n;
    const long mu = (n - 1) / 3;
    auto M = bracket_phi(n, 4);
    check_degree_cap(M, opt);
    std::vector<RF> t = build_terms<Rat>(mu, [](RatioBuilder<Rat>& b, long k) {
        b.mul_poly(q_integer<Rat>(6 * k + 1));
        poch(b, kOne, 1, 3, k, 6);
        poch(b, kOne, 3, 3, k, -6);
        b.mul_qpow(3 * k);
    });
    RF lhs = sum_terms(t);
    RatioBuilder<Rat> pb;
    poch(pb, kOne, 2, 3, mu, 3);
    poch(pb, kOne, 3, 3, mu, -3);
    RF inner(0);
    for (long j = 1; j <= mu; ++j)
        inner += qpow_over_bracket_sq(3 * j - 1) - qpow_over_bracket_sq(3 * j);
    RF rhs = rf_bracket<Rat>(n) * pb.build() *
             (RF(1) + rf_bracket<Rat>(n).pow(2) * two_minus_qn(n) * inner);
    return congruence_result("van_hamme_d2_q", in, "exact", lhs, rhs, M);
}

CaseResult run_long_q(const Instance& in, const CaseOptions& opt) {
    require_odd(in.n);
    const long n = in.n;
    auto M = bracket_phi(n, 3);
    check_degree_cap(M, opt);
    RF lhs = sum_terms(theta_c6((n - 1) / 2));
    Poly<Rat> om = one_minus_cq(kOne, 1);
    RF brace = RF(1) + rf_bracket<Rat>(n).pow(2) * RF(om * om).scaled(make_rat(n * n - 1, 24));
    RF rhs = rf_bracket<Rat>(n) * rf_qpow<Rat>((1 - n) / 2) * brace * s4_sum(n);
    return congruence_result("long_q", in, "exact", lhs, rhs, M);
}

CaseResult run_guo_li_c2(const Instance& in, const CaseOptions& opt) {
    require_odd(in.n);
    const long n = in.n;
    auto M = bracket_phi(n, 3);
    check_degree_cap(M, opt);
    RF lhs = multi_sum(theta_c4(n - 1), 2, n - 1);
    RF rhs = rf_bracket<Rat>(n).pow(2) * rf_qpow<Rat>(1 - n);
    return congruence_result("guo_li_c2", in, "exact", lhs, rhs, M);
}

CaseResult run_guo_li_long(const Instance& in, const CaseOptions& opt) {
    require_odd(in.n);
    const long n = in.n;
    auto M = bracket_phi(n, 2);
    check_degree_cap(M, opt);
    RF lhs = multi_sum(theta_c6(n - 1), 2, n - 1);
    RF rhs = rf_bracket<Rat>(n).pow(2) * rf_qpow<Rat>(1 - n) * s4_sum(n).pow(2);
    return congruence_result("guo_li_long", in, "exact", lhs, rhs, M);
}

// sum over k of s4(k) * {1 - c(q) * [n]^2 * sum_{t<=2k} q^t/[t]^2}
RF weighted_s4_sum(long n, const RF& weight) {
    RF bn2 = rf_bracket<Rat>(n).pow(2);
    RF inner(0);
    std::vector<RF> terms;
    for (long k = 0; k <= (n - 1) / 2; ++k) {
        if (k > 0) {
            inner += qpow_over_bracket_sq(2 * k - 1);
            inner += qpow_over_bracket_sq(2 * k);
        }
        terms.push_back(s4_term(k) * (RF(1) - weight * bn2 * inner));
    }
    return sum_terms(terms);
}

CaseResult run_song_wang(const Instance& in, const CaseOptions& opt) {
    require_odd(in.n);
    const long n = in.n;
    auto M = bracket_phi(n, 4);
    check_degree_cap(M, opt);
    RF lhs = multi_sum(theta_c6(n - 1), 2, n - 1);
    RF rhs = rf_bracket<Rat>(n).pow(2) * rf_qpow<Rat>(1 - n) * s4_sum(n) *
             weighted_s4_sum(n, RF(2));
    return congruence_result("song_wang", in, "exact", lhs, rhs, M);
}

CaseResult run_thm_a(const Instance& in, const CaseOptions& opt) {
    require_odd(in.n);
    const long n = in.n;
    auto M = bracket_phi(n, 4);
    check_degree_cap(M, opt);
    RF lhs = multi_sum(theta_c4(n - 1), 2, n - 1);
    RF tail(0);
    for (long t = 1; t <= (n - 1) / 2; ++t) tail += qpow_over_bracket_sq(2 * t) * rf_qpow<Rat>(1);
    RF rhs = rf_bracket<Rat>(n).pow(2) * rf_qpow<Rat>(1 - n) -
             rf_bracket<Rat>(n).pow(4) * tail.scaled(Rat(2));
    return congruence_result("thm_a", in, "exact", lhs, rhs, M);
}

RF thm_b_rhs(long n) {
    return rf_bracket<Rat>(n).pow(2) * rf_qpow<Rat>(1 - n) * s4_sum(n) *
           weighted_s4_sum(n, two_minus_qn(n).scaled(Rat(2)));
}

CaseResult run_thm_b(const Instance& in, const CaseOptions& opt) {
    require_odd(in.n);
    const long n = in.n;
    auto M = bracket_phi(n, 5);
    check_degree_cap(M, opt);
    RF lhs = multi_sum(theta_c6(n - 1), 2, n - 1);
    return congruence_result("thm_b", in, "exact", lhs, thm_b_rhs(n), M);
}

CaseResult run_songwang_conjecture(const Instance& in, const CaseOptions& opt) {
    require_odd(in.n);
    const long n = in.n;
    auto M = bracket_phi(n, 4, 2);
    check_degree_cap(M, opt);
    RF lhs = multi_sum(theta_c6(n - 1), 2, n - 1);
    return congruence_result("songwang_conjecture", in, "exact", lhs, thm_b_rhs(n), M);
}

// (q^r;q^d)_k^3 (q^{d-r};q^d)_k / ((q^d;q^d)_k^3 (q^{2r};q^d)_k) q^{dk}
RF g_term(long d, long r, long k) {
    RatioBuilder<Rat> b;
    poch(b, kOne, r, d, k, 3);
    poch(b, kOne, d - r, d, k, 1);
    poch(b, kOne, d, d, k, -3);
    poch(b, kOne, 2 * r, d, k, -1);
    b.mul_qpow(d * k);
    return b.build();
}

CaseResult run_thm_c(const Instance& in, const CaseOptions& opt) {
    validate_dmrn(in);
    const long d = in.d, m = in.m, r = in.r, n = in.n;
    const long mu = (n - r) / d;
    auto M = ModulusBuilder<Rat>().cyclotomic(n, 6).build();
    check_degree_cap(M, opt);
    std::vector<RF> theta = build_terms<Rat>(n - 1, [&](RatioBuilder<Rat>& b, long k) {
        b.mul_poly(q_integer<Rat>(2 * d * k + r));
        poch(b, kOne, r, d, k, 6);
        poch(b, kOne, d, d, k, -6);
        b.mul_qpow((2 * d - 3 * r) * k);
    });
    RF lhs = multi_sum(theta, m, n - 1);

    std::vector<RF> g;
    for (long k = 0; k <= mu; ++k) g.push_back(g_term(d, r, k));
    RF big_g = sum_terms(g);
    RF bn2 = rf_bracket<Rat>(n).pow(2);
    RF inner(0);
    std::vector<RF> weighted;
    for (long k = 0; k <= mu; ++k) {
        if (k > 0) {
            inner += qpow_over_bracket_sq(d * k - d + r);
            inner += qpow_over_bracket_sq(d * k);
        }
        weighted.push_back(g[static_cast<std::size_t>(k)] *
                           (RF(1) - two_minus_qn(n) * bn2 * inner.scaled(Rat(m))));
    }
    RatioBuilder<Rat> pb;
    poch(pb, kOne, 2 * r, d, mu, static_cast<int>(m));
    poch(pb, kOne, d, d, mu, -static_cast<int>(m));
    RF pref = rf_bracket<Rat>(n).pow(m) * rf_qpow<Rat>(m * r * (r - n) / d) * pb.build();
    RF rhs = pref * big_g.pow(m - 1) * sum_terms(weighted);
    return congruence_result("thm_c", in, "exact", lhs, rhs, M);
}

std::vector<Instance> thm_c_grid() {
    std::vector<Instance> v;
    v.push_back(inst_dmrn(3, 2, 1, 4));
    v.push_back(inst_dmrn(3, 2, 1, 7));
    v.push_back(inst_dmrn(3, 3, 1, 4));
    v.push_back(inst_dmrn(3, 3, 1, 7));
    v.push_back(inst_dmrn(3, 2, 2, 5));
    v.push_back(inst_dmrn(3, 2, 2, 8));
    v.push_back(inst_dmrn(4, 2, 1, 5));
    v.push_back(inst_dmrn(4, 2, 1, 9));
    v.push_back(inst_dmrn(4, 3, 3, 7));
    v.push_back(inst_dmrn(4, 3, 3, 11));
    v.push_back(inst_dmrn(5, 2, 2, 7));
    v.push_back(inst_dmrn(5, 2, 2, 12));
    return v;
}

}  // namespace

void register_sum_cases(Registry& reg) {
    reg.push_back({{"van_hamme_c2_q", "congruence", "exact",
                    "sum [4k+1](q;q^2)_k^4/(q^2;q^2)_k^4 = [n]q^{(1-n)/2}(1+[n]^2(n^2-1)(1-q)^2/24) "
                    "mod [n]Phi_n^3, n odd",
                    false},
                   odd_grid(3, 13),
                   run_van_hamme_c2_q});
    reg.push_back({{"van_hamme_d2_q", "congruence", "exact",
                    "sum [6k+1](q;q^3)_k^6/(q^3;q^3)_k^6 q^{3k} = [n](q^2;q^3)^3/(q^3;q^3)^3 "
                    "{1+[n]^2(2-q^n) sum(q^{3j-1}/[3j-1]^2 - q^{3j}/[3j]^2)} mod [n]Phi_n^4, n=1 mod 3",
                    false},
                   {inst_n(4), inst_n(7), inst_n(10), inst_n(13)},
                   run_van_hamme_d2_q});
    reg.push_back({{"long_q", "congruence", "exact",
                    "sum [4k+1](q;q^2)_k^6/(q^2;q^2)_k^6 q^k = [n]q^{(1-n)/2}"
                    "{1+[n]^2(n^2-1)(1-q)^2/24} sum (q;q^2)_k^4/(q^2;q^2)_k^4 q^{2k} mod [n]Phi_n^3",
                    false},
                   odd_grid(3, 13),
                   run_long_q});
    reg.push_back({{"guo_li_c2", "congruence", "exact",
                    "double sum of [4k+1](q;q^2)_k^4/(q^2;q^2)_k^4 over i+j<=n-1 = [n]^2 q^{1-n} "
                    "mod [n]Phi_n^3",
                    false},
                   odd_grid(3, 13),
                   run_guo_li_c2});
    reg.push_back({{"guo_li_long", "congruence", "exact",
                    "double sum of [4k+1](q;q^2)_k^6/(q^2;q^2)_k^6 q^k = [n]^2 q^{1-n} "
                    "{sum (q;q^2)_k^4/(q^2;q^2)_k^4 q^{2k}}^2 mod [n]Phi_n^2",
                    false},
                   odd_grid(3, 13),
                   run_guo_li_long});
    reg.push_back({{"song_wang", "congruence", "exact",
                    "double sum as in guo_li_long = [n]^2 q^{1-n} S S' with "
                    "S' weighted by {1-2[n]^2 sum_{t<=2k} q^t/[t]^2} mod [n]Phi_n^4",
                    false},
                   odd_grid(3, 13),
                   run_song_wang});
    reg.push_back({{"thm_a", "congruence", "exact",
                    "double sum of [4k+1](q;q^2)_k^4/(q^2;q^2)_k^4 = [n]^2 q^{1-n} - "
                    "2[n]^4 sum_{t<=(n-1)/2} q^{2t+1}/[2t]^2 mod [n]Phi_n^4",
                    false},
                   odd_grid(3, 21),
                   run_thm_a});
    reg.push_back({{"thm_b", "congruence", "exact",
                    "double sum of [4k+1](q;q^2)_k^6/(q^2;q^2)_k^6 q^k = [n]^2 q^{1-n} S S'' "
                    "with S'' weighted by {1-2(2-q^n)[n]^2 sum_{t<=2k} q^t/[t]^2} mod [n]Phi_n^5",
                    false},
                   odd_grid(3, 15),
                   run_thm_b});
    reg.push_back({{"thm_c", "congruence", "exact",
                    "m-fold sum of [2dk+r](q^r;q^d)_k^6/(q^d;q^d)_k^6 q^{(2d-3r)k} = "
                    "[n]^m q^{mr(r-n)/d} Pochhammer prefactor * G^{m-1} * weighted G mod Phi_n^6",
                    false},
                   thm_c_grid(),
                   run_thm_c});
    reg.push_back({{"songwang_conjecture", "congruence", "exact",
                    "the thm_b congruence tested modulo [n]^2 Phi_n^4 instead of [n]Phi_n^5",
                    true},
                   odd_grid(3, 9),
                   run_songwang_conjecture});
}

}  // namespace qcongr::detail
