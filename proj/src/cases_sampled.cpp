#include "case_util.hpp"

#include <numeric>

namespace qcongr::detail {

namespace {

const Rat kOne{1};

// [4k+1] (aq,q/a,bq,q/b;q^2)_k / ((q^2/a,aq^2,q^2/b,bq^2;q^2)_k)
std::vector<RF> beta2_terms(long bound, const Rat& a, const Rat& b) {
    Rat ai = 1 / Rat(a), bi = 1 / Rat(b);
    return build_terms<Rat>(bound, [&](RatioBuilder<Rat>& t, long k) {
        t.mul_poly(q_integer<Rat>(4 * k + 1));
        poch(t, a, 1, 2, k);
        poch(t, ai, 1, 2, k);
        poch(t, b, 1, 2, k);
        poch(t, bi, 1, 2, k);
        poch(t, ai, 2, 2, k, -1);
        poch(t, a, 2, 2, k, -1);
        poch(t, bi, 2, 2, k, -1);
        poch(t, b, 2, 2, k, -1);
    });
}

// [4k+1] (aq,q/a,bq,q/b,q/c,q;q^2)_k / ((q^2/a,aq^2,q^2/b,bq^2,cq^2,q^2;q^2)_k) (cq)^k
std::vector<RF> beta3_terms(long bound, const Rat& a, const Rat& b, const Rat& c) {
    Rat ai = 1 / Rat(a), bi = 1 / Rat(b), ci = 1 / Rat(c);
    return build_terms<Rat>(bound, [&](RatioBuilder<Rat>& t, long k) {
        t.mul_poly(q_integer<Rat>(4 * k + 1));
        poch(t, a, 1, 2, k);
        poch(t, ai, 1, 2, k);
        poch(t, b, 1, 2, k);
        poch(t, bi, 1, 2, k);
        poch(t, ci, 1, 2, k);
        poch(t, kOne, 1, 2, k);
        poch(t, ai, 2, 2, k, -1);
        poch(t, a, 2, 2, k, -1);
        poch(t, bi, 2, 2, k, -1);
        poch(t, b, 2, 2, k, -1);
        poch(t, c, 2, 2, k, -1);
        poch(t, kOne, 2, 2, k, -1);
        t.mul_const(rat_pow(c, k));
        t.mul_qpow(k);
    });
}

// [2dk+r] (aq^r,q^r/a,bq^r,q^r/b,q^r/c,q^r;q^d)_k /
//         ((q^d/a,aq^d,q^d/b,bq^d,cq^d,q^d;q^d)_k) (cq^{2d-3r})^k
std::vector<RF> beta_general_terms(long d, long r, long bound, const Rat& a, const Rat& b,
                                   const Rat& c) {
    Rat ai = 1 / Rat(a), bi = 1 / Rat(b), ci = 1 / Rat(c);
    return build_terms<Rat>(bound, [&](RatioBuilder<Rat>& t, long k) {
        t.mul_poly(q_integer<Rat>(2 * d * k + r));
        poch(t, a, r, d, k);
        poch(t, ai, r, d, k);
        poch(t, b, r, d, k);
        poch(t, bi, r, d, k);
        poch(t, ci, r, d, k);
        poch(t, kOne, r, d, k);
        poch(t, ai, d, d, k, -1);
        poch(t, a, d, d, k, -1);
        poch(t, bi, d, d, k, -1);
        poch(t, b, d, d, k, -1);
        poch(t, c, d, d, k, -1);
        poch(t, kOne, d, d, k, -1);
        t.mul_const(rat_pow(c, k));
        t.mul_qpow((2 * d - 3 * r) * k);
    });
}

// (xq^e;q^d)_len / (q^{2e-?}...): generic single Pochhammer ratio helper
RF poch_ratio(const Rat& num_c, long num_e, const Rat& den_c, long den_e, long d, long len,
              int pw) {
    RatioBuilder<Rat> b;
    poch(b, num_c, num_e, d, len, pw);
    poch(b, den_c, den_e, d, len, -pw);
    return b.build();
}

Modulus<Rat> mod_pair(const Rat& a, long n, int bracket_exp = 0, int phi_exp = 0) {
    ModulusBuilder<Rat> b;
    if (bracket_exp > 0) b.bracket(n, bracket_exp);
    if (phi_exp > 0) b.cyclotomic(n, phi_exp);
    b.factor(one_minus_cq(a, n));
    b.factor(cq_minus(a, n));
    return b.build();
}

std::pair<bool, bool> verdict_of(const RF& lhs, const RF& rhs, const Modulus<Rat>& M) {
    auto v = congruent(lhs, rhs, M);
    return {v.holds, v.denominator_coprime};
}

// (aq;q^2)_len / (q^2/a;q^2)_len
RF gs_side(const Rat& a, long len) {
    return poch_ratio(a, 1, 1 / Rat(a), 2, 2, len, 1);
}

CaseResult run_gs_reflection(const Instance& in, const CaseOptions& opt) {
    require_odd(in.n);
    const long n = in.n;
    auto M = ModulusBuilder<Rat>().cyclotomic(n, 1).build();
    return sampled_result("gs_reflection", in,
                          [&](const std::vector<Rat>& p) -> std::pair<bool, bool> {
                              const Rat& a = p[0];
                              for (long k = 0; k <= (n - 1) / 2; ++k) {
                                  long e = (n - 1) / 2 - 2 * k;
                                  RF lhs = gs_side(a, (n - 1) / 2 - k);
                                  RF rhs = gs_side(a, k).scaled(k_pow(Rat(-a), e)) *
                                           rf_qpow<Rat>((n - 1) * (n - 1) / 4 + k);
                                  auto [h, c] = verdict_of(lhs, rhs, M);
                                  if (!h || !c) return {h, c};
                              }
                              return {true, true};
                          },
                          1, 3, opt.seed);
}

CaseResult run_gs_reflection_b(const Instance& in, const CaseOptions& opt) {
    require_odd(in.n);
    const long n = in.n;
    auto M = ModulusBuilder<Rat>().cyclotomic(n, 1).build();
    return sampled_result("gs_reflection_b", in,
                          [&](const std::vector<Rat>& p) -> std::pair<bool, bool> {
                              const Rat& a = p[0];
                              for (long k = (n + 1) / 2; k <= n - 1; ++k) {
                                  long e = (3 * n - 1) / 2 - 2 * k;
                                  RF lhs = gs_side(a, (3 * n - 1) / 2 - k);
                                  RF rhs = gs_side(a, k).scaled(k_pow(Rat(-a), e)) *
                                           rf_qpow<Rat>((3 * n - 1) * (3 * n - 1) / 4 + k);
                                  auto [h, c] = verdict_of(lhs, rhs, M);
                                  if (!h || !c) return {h, c};
                              }
                              return {true, true};
                          },
                          1, 3, opt.seed);
}

CaseResult run_beta_antisym(const Instance& in, const CaseOptions& opt) {
    require_odd(in.n);
    const long n = in.n;
    auto M = ModulusBuilder<Rat>().cyclotomic(n, 1).build();
    return sampled_result("beta_antisym", in,
                          [&](const std::vector<Rat>& p) -> std::pair<bool, bool> {
                              std::vector<RF> beta = beta2_terms(n - 1, p[0], p[1]);
                              auto at = [&](long k) { return beta[static_cast<std::size_t>(k)]; };
                              for (long k = 0; k <= (n - 1) / 2; ++k) {
                                  auto [h, c] = verdict_of(at(k) + at((n - 1) / 2 - k), RF(0), M);
                                  if (!h || !c) return {h, c};
                              }
                              for (long k = (n + 1) / 2; k <= n - 1; ++k) {
                                  auto [h, c] =
                                      verdict_of(at(k) + at((3 * n - 1) / 2 - k), RF(0), M);
                                  if (!h || !c) return {h, c};
                              }
                              return {true, true};
                          },
                          2, 3, opt.seed);
}

CaseResult run_wei_i(const Instance& in, const CaseOptions& opt) {
    require_odd(in.n);
    const long n = in.n;
    auto M = ModulusBuilder<Rat>().cyclotomic(n, 1).build();
    return sampled_result("wei_i", in,
                          [&](const std::vector<Rat>& p) {
                              RF lhs = multi_sum(beta2_terms(n - 1, p[0], p[1]), 2, n - 1);
                              return verdict_of(lhs, RF(0), M);
                          },
                          2, 3, opt.seed);
}

CaseResult run_wei_j(const Instance& in, const CaseOptions& opt) {
    require_odd(in.n);
    const long n = in.n;
    auto M = ModulusBuilder<Rat>().bracket(n).build();
    return sampled_result("wei_j", in,
                          [&](const std::vector<Rat>& p) {
                              RF lhs = multi_sum(beta2_terms(n - 1, p[0], p[1]), 2, n - 1);
                              return verdict_of(lhs, RF(0), M);
                          },
                          2, 3, opt.seed);
}

// [n]^2 (bq)^{1-n} ((bq^2;q^2)_M^2/(q^2/b;q^2)_M^2)
// {sum (aq,q/a,b,bq;q^2)_k/((q,q^2,bq^2,bq^2;q^2)_k) q^{2k}}^2
RF wei_m_rhs(long n, const Rat& a, const Rat& b) {
    Rat ai = 1 / Rat(a), bi = 1 / Rat(b);
    long M = (n - 1) / 2;
    std::vector<RF> inner = build_terms<Rat>(M, [&](RatioBuilder<Rat>& t, long k) {
        poch(t, a, 1, 2, k);
        poch(t, ai, 1, 2, k);
        poch(t, b, 0, 2, k);
        poch(t, b, 1, 2, k);
        poch(t, kOne, 1, 2, k, -1);
        poch(t, kOne, 2, 2, k, -1);
        poch(t, b, 2, 2, k, -2);
        t.mul_qpow(2 * k);
    });
    return rf_bracket<Rat>(n).pow(2) * rf_qpow<Rat>(1 - n).scaled(rat_pow(b, 1 - n)) *
           poch_ratio(b, 2, bi, 2, 2, M, 2) * sum_terms(inner).pow(2);
}

CaseResult run_wei_m(const Instance& in, const CaseOptions& opt) {
    require_odd(in.n);
    const long n = in.n;
    return sampled_result("wei_m", in,
                          [&](const std::vector<Rat>& p) {
                              auto M = mod_pair(p[0], n);
                              RF lhs = multi_sum(beta2_terms(n - 1, p[0], p[1]), 2, n - 1);
                              return verdict_of(lhs, wei_m_rhs(n, p[0], p[1]), M);
                          },
                          2, 3, opt.seed);
}

CaseResult run_wei_n(const Instance& in, const CaseOptions& opt) {
    require_odd(in.n);
    const long n = in.n;
    return sampled_result("wei_n", in,
                          [&](const std::vector<Rat>& p) {
                              auto M = mod_pair(p[1], n);
                              RF lhs = multi_sum(beta2_terms(n - 1, p[0], p[1]), 2, n - 1);
                              return verdict_of(lhs, wei_m_rhs(n, p[1], p[0]), M);
                          },
                          2, 3, opt.seed);
}

// (1-b q^n)(b-q^n)(-1-a^2+a q^n) / ((a-b)(1-ab)) as a rational function of q
RF crt_unit2(long n, const Rat& a, const Rat& b) {
    Poly<Rat> p = one_minus_cq(b, n) * cq_minus(b, n) *
                  (Poly<Rat>(Rat(-1) - a * a) + Poly<Rat>::monomial(a, static_cast<std::size_t>(n)));
    return RF(p).scaled(1 / Rat((a - b) * (1 - a * b)));
}

CaseResult run_wei_o(const Instance& in, const CaseOptions& opt) {
    require_odd(in.n);
    const long n = in.n;
    return sampled_result("wei_o", in,
                          [&](const std::vector<Rat>& p) {
                              const Rat &a = p[0], &b = p[1];
                              ModulusBuilder<Rat> mb;
                              mb.bracket(n);
                              mb.factor(one_minus_cq(a, n)).factor(cq_minus(a, n));
                              mb.factor(one_minus_cq(b, n)).factor(cq_minus(b, n));
                              auto M = mb.build();
                              RF lhs = multi_sum(beta2_terms(n - 1, a, b), 2, n - 1);
                              RF rhs = crt_unit2(n, a, b) * wei_m_rhs(n, a, b) +
                                       crt_unit2(n, b, a) * wei_m_rhs(n, b, a);
                              return verdict_of(lhs, rhs, M);
                          },
                          2, 3, opt.seed);
}

CaseResult run_lemma_c(const Instance& in, const CaseOptions& opt) {
    require_odd(in.n);
    const long n = in.n;
    auto M = ModulusBuilder<Rat>().bracket(n).build();
    return sampled_result("lemma_c", in,
                          [&](const std::vector<Rat>& p) {
                              RF lhs = sum_terms(beta3_terms((n - 1) / 2, p[0], p[1], p[2]));
                              return verdict_of(lhs, RF(0), M);
                          },
                          3, 3, opt.seed);
}

void validate_drn(const Instance& in) {
    require(in.d >= 1 && in.r >= 1 && in.n >= 1, "d, r, n must be positive");
    require(std::gcd(in.n, in.d) == 1, "need gcd(n, d) = 1");
}

// the unique mu in [0, n-1] with d*mu = -r (mod n)
long solve_mu(long d, long r, long n) {
    for (long mu = 0; mu < n; ++mu)
        if ((d * mu + r) % n == 0) return mu;
    throw OutOfDomain("no valid truncation point for (d, r, n)");
}

CaseResult run_nw_general(const Instance& in, const CaseOptions& opt) {
    validate_drn(in);
    const long d = in.d, r = in.r, n = in.n;
    const long mu = solve_mu(d, r, n);
    auto M = ModulusBuilder<Rat>().bracket(n).build();
    return sampled_result("nw_general", in,
                          [&](const std::vector<Rat>& p) {
                              RF lhs = sum_terms(beta_general_terms(d, r, mu, p[0], p[1], p[2]));
                              return verdict_of(lhs, RF(0), M);
                          },
                          3, 3, opt.seed);
}

CaseResult run_lemma_f(const Instance& in, const CaseOptions& opt) {
    validate_drn(in);
    const long d = in.d, r = in.r, n = in.n;
    require((n - r) % d == 0 && n > r, "need n = r (mod d) with n > r");
    const long mu = (n - r) / d;
    auto M = ModulusBuilder<Rat>().bracket(n).build();
    return sampled_result("lemma_f", in,
                          [&](const std::vector<Rat>& p) {
                              RF lhs = sum_terms(beta_general_terms(d, r, mu, p[0], p[1], p[2]));
                              return verdict_of(lhs, RF(0), M);
                          },
                          3, 3, opt.seed);
}

// ---- the unit relations of the two CRT steps, as exact divisibility in X ----

Poly<Rat> pair_factor(const Rat& a) {
    // (1 - aX)(a - X)
    return one_minus_cq(a, 1) * cq_minus(a, 1);
}

bool lemma_d_rel12(const Rat& a, const Rat& b, const Rat& c) {
    // (1-bX)(b-X)(c-X){-1-a^2-a^4+ac+a^3c+a(1+a^2-ac)X} - (1-ba)(b-a)(1-ac)(a-c)
    Rat a2 = a * a, a3 = a2 * a, a4 = a2 * a2;
    Poly<Rat> brace = Poly<Rat>(Rat(-1) - a2 - a4 + a * c + a3 * c) +
                      Poly<Rat>::monomial(a * (1 + a2 - a * c), 1);
    Poly<Rat> lhs = pair_factor(b) * cq_minus(c, 1) * brace -
                    Poly<Rat>(Rat((1 - b * a) * (b - a) * (1 - a * c) * (a - c)));
    return divides(pair_factor(a), lhs);
}

bool lemma_d_rel3(const Rat& a, const Rat& b, const Rat& c) {
    // (1-aX)(a-X)(1-bX)(b-X) - (1-ac)(a-c)(1-bc)(b-c) divisible by (c-X)
    Poly<Rat> lhs = pair_factor(a) * pair_factor(b) -
                    Poly<Rat>(Rat((1 - a * c) * (a - c) * (1 - b * c) * (b - c)));
    return divides(cq_minus(c, 1), lhs);
}

CaseResult run_lemma_d_units(const Instance& in, const CaseOptions& opt) {
    return sampled_result("lemma_d_units", in,
                          [&](const std::vector<Rat>& p) -> std::pair<bool, bool> {
                              bool ok = lemma_d_rel12(p[0], p[1], p[2]) &&
                                        lemma_d_rel12(p[1], p[0], p[2]) &&
                                        lemma_d_rel3(p[0], p[1], p[2]);
                              return {ok, true};
                          },
                          3, 5, opt.seed);
}

CaseResult run_wei_bb(const Instance& in, const CaseOptions& opt) {
    require_odd(in.n);
    const long n = in.n;
    auto M = ModulusBuilder<Rat>().bracket(n).build();
    return sampled_result("wei_bb", in,
                          [&](const std::vector<Rat>& p) {
                              RF lhs = multi_sum(beta3_terms(n - 1, p[0], p[1], p[2]), 2, n - 1);
                              return verdict_of(lhs, RF(0), M);
                          },
                          3, 3, opt.seed);
}

// [n]^2 (b/q)^{n-1} ((q^2/b;q^2)_M^2/(bq^2;q^2)_M^2)
// {sum (aq,q/a,q/b,cq/b;q^2)_k/((q^2,q^2/b,q^2/b,cq^2;q^2)_k) q^{2k}}^2
RF wei_cc_rhs(long n, const Rat& a, const Rat& b, const Rat& c) {
    Rat ai = 1 / Rat(a), bi = 1 / Rat(b);
    long M = (n - 1) / 2;
    std::vector<RF> inner = build_terms<Rat>(M, [&](RatioBuilder<Rat>& t, long k) {
        poch(t, a, 1, 2, k);
        poch(t, ai, 1, 2, k);
        poch(t, bi, 1, 2, k);
        poch(t, Rat(c * bi), 1, 2, k);
        poch(t, kOne, 2, 2, k, -1);
        poch(t, bi, 2, 2, k, -2);
        poch(t, c, 2, 2, k, -1);
        t.mul_qpow(2 * k);
    });
    return rf_bracket<Rat>(n).pow(2) * rf_qpow<Rat>(1 - n).scaled(rat_pow(b, n - 1)) *
           poch_ratio(bi, 2, b, 2, 2, M, 2) * sum_terms(inner).pow(2);
}

// [n]^2 ((q;q^2)_M^4/(aq^2,q^2/a;q^2)_M^2)
// {sum (q,aq,q/a,q/c;q^2)_k/((q^2,bq^2,q^2/b,q^2/c;q^2)_k) q^{2k}}^2
RF wei_ee_rhs(long n, const Rat& a, const Rat& b, const Rat& c) {
    Rat ai = 1 / Rat(a), bi = 1 / Rat(b), ci = 1 / Rat(c);
    long M = (n - 1) / 2;
    RatioBuilder<Rat> pb;
    poch(pb, kOne, 1, 2, M, 4);
    poch(pb, a, 2, 2, M, -2);
    poch(pb, ai, 2, 2, M, -2);
    std::vector<RF> inner = build_terms<Rat>(M, [&](RatioBuilder<Rat>& t, long k) {
        poch(t, kOne, 1, 2, k);
        poch(t, a, 1, 2, k);
        poch(t, ai, 1, 2, k);
        poch(t, ci, 1, 2, k);
        poch(t, kOne, 2, 2, k, -1);
        poch(t, b, 2, 2, k, -1);
        poch(t, bi, 2, 2, k, -1);
        poch(t, ci, 2, 2, k, -1);
        t.mul_qpow(2 * k);
    });
    return rf_bracket<Rat>(n).pow(2) * pb.build() * sum_terms(inner).pow(2);
}

CaseResult run_wei_cc(const Instance& in, const CaseOptions& opt) {
    require_odd(in.n);
    const long n = in.n;
    return sampled_result("wei_cc", in,
                          [&](const std::vector<Rat>& p) {
                              auto M = mod_pair(p[0], n);
                              RF lhs = multi_sum(beta3_terms(n - 1, p[0], p[1], p[2]), 2, n - 1);
                              return verdict_of(lhs, wei_cc_rhs(n, p[0], p[1], p[2]), M);
                          },
                          3, 3, opt.seed);
}

CaseResult run_wei_dd(const Instance& in, const CaseOptions& opt) {
    require_odd(in.n);
    const long n = in.n;
    return sampled_result("wei_dd", in,
                          [&](const std::vector<Rat>& p) {
                              auto M = mod_pair(p[1], n);
                              RF lhs = multi_sum(beta3_terms(n - 1, p[0], p[1], p[2]), 2, n - 1);
                              return verdict_of(lhs, wei_cc_rhs(n, p[1], p[0], p[2]), M);
                          },
                          3, 3, opt.seed);
}

CaseResult run_wei_ee(const Instance& in, const CaseOptions& opt) {
    require_odd(in.n);
    const long n = in.n;
    return sampled_result("wei_ee", in,
                          [&](const std::vector<Rat>& p) {
                              auto M = ModulusBuilder<Rat>().factor(cq_minus(p[2], n)).build();
                              RF lhs = multi_sum(beta3_terms(n - 1, p[0], p[1], p[2]), 2, n - 1);
                              return verdict_of(lhs, wei_ee_rhs(n, p[0], p[1], p[2]), M);
                          },
                          3, 3, opt.seed);
}

// (1-bX)(b-X)(c-X){...} / ((1-ba)(b-a)(1-ac)(a-c)) with X = q^n
RF crt_unit3_ab(long n, const Rat& a, const Rat& b, const Rat& c) {
    Rat a2 = a * a, a3 = a2 * a, a4 = a2 * a2;
    Poly<Rat> brace = Poly<Rat>(Rat(-1) - a2 - a4 + a * c + a3 * c) +
                      Poly<Rat>::monomial(a * (1 + a2 - a * c), static_cast<std::size_t>(n));
    Poly<Rat> p = one_minus_cq(b, n) * cq_minus(b, n) * cq_minus(c, n) * brace;
    return RF(p).scaled(1 / Rat((1 - b * a) * (b - a) * (1 - a * c) * (a - c)));
}

// (1-aX)(a-X)(1-bX)(b-X) / ((1-ac)(a-c)(1-bc)(b-c)) with X = q^n
RF crt_unit3_c(long n, const Rat& a, const Rat& b, const Rat& c) {
    Poly<Rat> p = one_minus_cq(a, n) * cq_minus(a, n) * one_minus_cq(b, n) * cq_minus(b, n);
    return RF(p).scaled(1 / Rat((1 - a * c) * (a - c) * (1 - b * c) * (b - c)));
}

CaseResult run_wei_ff(const Instance& in, const CaseOptions& opt) {
    require_odd(in.n);
    const long n = in.n;
    return sampled_result("wei_ff", in,
                          [&](const std::vector<Rat>& p) {
                              const Rat &a = p[0], &b = p[1], &c = p[2];
                              ModulusBuilder<Rat> mb;
                              mb.bracket(n);
                              mb.factor(one_minus_cq(a, n)).factor(cq_minus(a, n));
                              mb.factor(one_minus_cq(b, n)).factor(cq_minus(b, n));
                              mb.factor(cq_minus(c, n));
                              auto M = mb.build();
                              RF lhs = multi_sum(beta3_terms(n - 1, a, b, c), 2, n - 1);
                              RF rhs = crt_unit3_ab(n, a, b, c) * wei_cc_rhs(n, a, b, c) +
                                       crt_unit3_ab(n, b, a, c) * wei_cc_rhs(n, b, a, c) +
                                       crt_unit3_c(n, a, b, c) * wei_ee_rhs(n, a, b, c);
                              return verdict_of(lhs, rhs, M);
                          },
                          3, 3, opt.seed);
}

CaseResult run_wei_bbb(const Instance& in, const CaseOptions& opt) {
    validate_dmrn(in);
    const long d = in.d, m = in.m, r = in.r, n = in.n;
    auto M = ModulusBuilder<Rat>().cyclotomic(n, 1).build();
    return sampled_result("wei_bbb", in,
                          [&](const std::vector<Rat>& p) {
                              RF lhs = multi_sum(beta_general_terms(d, r, n - 1, p[0], p[1], p[2]),
                                                 m, n - 1);
                              return verdict_of(lhs, RF(0), M);
                          },
                          3, 3, opt.seed);
}

// [n]^m (b/q^r)^{m mu} ((q^{2r}/b;q^d)_mu^m/(bq^d;q^d)_mu^m)
// {sum (aq^r,q^r/a,q^r/b,cq^{d-r}/b;q^d)_k/((q^d,q^d/b,q^{2r}/b,cq^d;q^d)_k) q^{dk}}^m
RF wei_ccc_rhs(long d, long m, long r, long n, const Rat& a, const Rat& b, const Rat& c) {
    Rat ai = 1 / Rat(a), bi = 1 / Rat(b);
    const long mu = (n - r) / d;
    std::vector<RF> inner = build_terms<Rat>(mu, [&](RatioBuilder<Rat>& t, long k) {
        poch(t, a, r, d, k);
        poch(t, ai, r, d, k);
        poch(t, bi, r, d, k);
        poch(t, Rat(c * bi), d - r, d, k);
        poch(t, kOne, d, d, k, -1);
        poch(t, bi, d, d, k, -1);
        poch(t, bi, 2 * r, d, k, -1);
        poch(t, c, d, d, k, -1);
        t.mul_qpow(d * k);
    });
    return rf_bracket<Rat>(n).pow(m) * rf_qpow<Rat>(-r * m * mu).scaled(rat_pow(b, m * mu)) *
           poch_ratio(bi, 2 * r, b, d, d, mu, static_cast<int>(m)) * sum_terms(inner).pow(m);
}

// [n]^m ((q^r,q^{d-r};q^d)_mu^m/(aq^d,q^d/a;q^d)_mu^m)
// {sum (q^{d-r},aq^r,q^r/a,q^r/c;q^d)_k/((q^d,q^d/b,bq^d,q^{2r}/c;q^d)_k) q^{dk}}^m
RF wei_eee_rhs(long d, long m, long r, long n, const Rat& a, const Rat& b, const Rat& c) {
    Rat ai = 1 / Rat(a), bi = 1 / Rat(b), ci = 1 / Rat(c);
    const long mu = (n - r) / d;
    RatioBuilder<Rat> pb;
    poch(pb, kOne, r, d, mu, static_cast<int>(m));
    poch(pb, kOne, d - r, d, mu, static_cast<int>(m));
    poch(pb, a, d, d, mu, -static_cast<int>(m));
    poch(pb, ai, d, d, mu, -static_cast<int>(m));
    std::vector<RF> inner = build_terms<Rat>(mu, [&](RatioBuilder<Rat>& t, long k) {
        poch(t, kOne, d - r, d, k);
        poch(t, a, r, d, k);
        poch(t, ai, r, d, k);
        poch(t, ci, r, d, k);
        poch(t, kOne, d, d, k, -1);
        poch(t, bi, d, d, k, -1);
        poch(t, b, d, d, k, -1);
        poch(t, ci, 2 * r, d, k, -1);
        t.mul_qpow(d * k);
    });
    return rf_bracket<Rat>(n).pow(m) * pb.build() * sum_terms(inner).pow(m);
}

CaseResult run_wei_ccc(const Instance& in, const CaseOptions& opt) {
    validate_dmrn(in);
    const long d = in.d, m = in.m, r = in.r, n = in.n;
    return sampled_result("wei_ccc", in,
                          [&](const std::vector<Rat>& p) {
                              auto M = mod_pair(p[0], n);
                              RF lhs = multi_sum(beta_general_terms(d, r, n - 1, p[0], p[1], p[2]),
                                                 m, n - 1);
                              return verdict_of(lhs, wei_ccc_rhs(d, m, r, n, p[0], p[1], p[2]), M);
                          },
                          3, 3, opt.seed);
}

CaseResult run_wei_ddd(const Instance& in, const CaseOptions& opt) {
    validate_dmrn(in);
    const long d = in.d, m = in.m, r = in.r, n = in.n;
    return sampled_result("wei_ddd", in,
                          [&](const std::vector<Rat>& p) {
                              auto M = mod_pair(p[1], n);
                              RF lhs = multi_sum(beta_general_terms(d, r, n - 1, p[0], p[1], p[2]),
                                                 m, n - 1);
                              return verdict_of(lhs, wei_ccc_rhs(d, m, r, n, p[1], p[0], p[2]), M);
                          },
                          3, 3, opt.seed);
}

CaseResult run_wei_eee(const Instance& in, const CaseOptions& opt) {
    validate_dmrn(in);
    const long d = in.d, m = in.m, r = in.r, n = in.n;
    return sampled_result("wei_eee", in,
                          [&](const std::vector<Rat>& p) {
                              auto M = ModulusBuilder<Rat>().factor(cq_minus(p[2], n)).build();
                              RF lhs = multi_sum(beta_general_terms(d, r, n - 1, p[0], p[1], p[2]),
                                                 m, n - 1);
                              return verdict_of(lhs, wei_eee_rhs(d, m, r, n, p[0], p[1], p[2]), M);
                          },
                          3, 3, opt.seed);
}

CaseResult run_wei_fff(const Instance& in, const CaseOptions& opt) {
    validate_dmrn(in);
    const long d = in.d, m = in.m, r = in.r, n = in.n;
    return sampled_result("wei_fff", in,
                          [&](const std::vector<Rat>& p) {
                              const Rat &a = p[0], &b = p[1], &c = p[2];
                              ModulusBuilder<Rat> mb;
                              mb.cyclotomic(n, 1);
                              mb.factor(one_minus_cq(a, n)).factor(cq_minus(a, n));
                              mb.factor(one_minus_cq(b, n)).factor(cq_minus(b, n));
                              mb.factor(cq_minus(c, n));
                              auto M = mb.build();
                              RF lhs = multi_sum(beta_general_terms(d, r, n - 1, a, b, c), m,
                                                 n - 1);
                              RF rhs = crt_unit3_ab(n, a, b, c) * wei_ccc_rhs(d, m, r, n, a, b, c) +
                                       crt_unit3_ab(n, b, a, c) * wei_ccc_rhs(d, m, r, n, b, a, c) +
                                       crt_unit3_c(n, a, b, c) * wei_eee_rhs(d, m, r, n, a, b, c);
                              return verdict_of(lhs, rhs, M);
                          },
                          3, 3, opt.seed);
}

std::vector<Instance> odd_grid(long lo, long hi) {
    std::vector<Instance> v;
    for (long n = lo; n <= hi; n += 2) v.push_back(inst_n(n));
    return v;
}

Instance inst_drn(long d, long r, long n) {
    Instance i;
    i.d = d;
    i.r = r;
    i.n = n;
    return i;
}

std::vector<Instance> general_grid() {
    return {inst_dmrn(3, 2, 1, 4), inst_dmrn(3, 2, 1, 7), inst_dmrn(3, 2, 2, 5),
            inst_dmrn(4, 3, 3, 7)};
}

}  // namespace

void register_sampled_cases(Registry& reg) {
    reg.push_back({{"gs_reflection", "congruence", "sampled",
                    "(aq;q^2)_{(n-1)/2-k}/(q^2/a;q^2)_{(n-1)/2-k} = (-a)^{(n-1)/2-2k} "
                    "(aq;q^2)_k/(q^2/a;q^2)_k q^{(n-1)^2/4+k} mod Phi_n, 0<=k<=(n-1)/2",
                    false},
                   odd_grid(3, 11),
                   run_gs_reflection});
    reg.push_back({{"gs_reflection_b", "congruence", "sampled",
                    "(aq;q^2)_{(3n-1)/2-k}/(q^2/a;q^2)_{(3n-1)/2-k} = (-a)^{(3n-1)/2-2k} "
                    "(aq;q^2)_k/(q^2/a;q^2)_k q^{(3n-1)^2/4+k} mod Phi_n, (n+1)/2<=k<=n-1",
                    false},
                   odd_grid(3, 11),
                   run_gs_reflection_b});
    reg.push_back({{"beta_antisym", "congruence", "sampled",
                    "beta(k)+beta((n-1)/2-k) = 0 and beta(k)+beta((3n-1)/2-k) = 0 mod Phi_n "
                    "for beta(k)=[4k+1](aq,q/a,bq,q/b;q^2)_k/((q^2/a,aq^2,q^2/b,bq^2;q^2)_k)",
                    false},
                   odd_grid(3, 11),
                   run_beta_antisym});
    reg.push_back({{"wei_i", "congruence", "sampled",
                    "double sum of beta(i)beta(j) over i+j<=n-1 = 0 mod Phi_n", false},
                   odd_grid(3, 9),
                   run_wei_i});
    reg.push_back({{"wei_j", "congruence", "sampled",
                    "double sum of beta(i)beta(j) over i+j<=n-1 = 0 mod [n]", false},
                   odd_grid(3, 9),
                   run_wei_j});
    reg.push_back({{"wei_m", "congruence", "sampled",
                    "double beta sum = [n]^2(bq)^{1-n}(bq^2;q^2)^2/(q^2/b;q^2)^2 "
                    "{sum (aq,q/a,b,bq;q^2)_k/((q,q^2,bq^2,bq^2;q^2)_k)q^{2k}}^2 "
                    "mod (1-aq^n)(a-q^n)",
                    false},
                   odd_grid(3, 7),
                   run_wei_m});
    reg.push_back({{"wei_n", "congruence", "sampled",
                    "the a<->b dual of the previous congruence, mod (1-bq^n)(b-q^n)", false},
                   odd_grid(3, 7),
                   run_wei_n});
    reg.push_back({{"wei_o", "congruence", "sampled",
                    "CRT combination of the two dual congruences and the mod [n] vanishing, "
                    "mod [n](1-aq^n)(a-q^n)(1-bq^n)(b-q^n)",
                    false},
                   odd_grid(3, 7),
                   run_wei_o});
    reg.push_back({{"lemma_c", "congruence", "sampled",
                    "sum [4k+1](aq,q/a,bq,q/b,q/c,q;q^2)_k/((q^2/a,aq^2,q^2/b,bq^2,cq^2,q^2;"
                    "q^2)_k)(cq)^k over k<=(n-1)/2 = 0 mod [n]",
                    false},
                   odd_grid(3, 11),
                   run_lemma_c});
    reg.push_back({{"nw_general", "congruence", "sampled",
                    "sum [2dk+r](aq^r,q^r/a,bq^r,q^r/b,q^r/c,q^r;q^d)_k/(...)"
                    "(cq^{2d-3r})^k over k<=mu = 0 mod [n], d mu = -r (mod n)",
                    false},
                   {inst_drn(2, 1, 5), inst_drn(3, 1, 7), inst_drn(3, 2, 5), inst_drn(4, 3, 7)},
                   run_nw_general});
    reg.push_back({{"lemma_f", "congruence", "sampled",
                    "the mu=(n-r)/d case of the previous vanishing, n = r (mod d)", false},
                   {inst_drn(2, 1, 5), inst_drn(3, 1, 7), inst_drn(3, 2, 5), inst_drn(4, 3, 7)},
                   run_lemma_f});
    reg.push_back({{"lemma_d_units", "identity", "sampled",
                    "the three CRT unit relations: each combination of pair factors times its "
                    "bracket minus the constant is exactly divisible by the stated pair factor "
                    "in X",
                    false},
                   {Instance{}},
                   run_lemma_d_units});
    reg.push_back({{"wei_bb", "congruence", "sampled",
                    "double sum of the three-parameter beta = 0 mod [n]", false},
                   odd_grid(3, 7),
                   run_wei_bb});
    reg.push_back({{"wei_cc", "congruence", "sampled",
                    "double three-parameter beta sum = [n]^2(b/q)^{n-1}(q^2/b;q^2)^2/(bq^2;q^2)^2"
                    " {sum (aq,q/a,q/b,cq/b;q^2)_k/((q^2,q^2/b,q^2/b,cq^2;q^2)_k)q^{2k}}^2 "
                    "mod (1-aq^n)(a-q^n)",
                    false},
                   odd_grid(3, 7),
                   run_wei_cc});
    reg.push_back({{"wei_dd", "congruence", "sampled",
                    "the a<->b dual of the previous congruence, mod (1-bq^n)(b-q^n)", false},
                   odd_grid(3, 7),
                   run_wei_dd});
    reg.push_back({{"wei_ee", "congruence", "sampled",
                    "double three-parameter beta sum = [n]^2(q;q^2)^4/(aq^2,q^2/a;q^2)^2 "
                    "{sum (q,aq,q/a,q/c;q^2)_k/((q^2,bq^2,q^2/b,q^2/c;q^2)_k)q^{2k}}^2 "
                    "mod (c-q^n)",
                    false},
                   odd_grid(3, 7),
                   run_wei_ee});
    reg.push_back({{"wei_ff", "congruence", "sampled",
                    "three-term CRT combination mod [n](1-aq^n)(a-q^n)(1-bq^n)(b-q^n)(c-q^n)",
                    false},
                   odd_grid(3, 7),
                   run_wei_ff});
    reg.push_back({{"wei_bbb", "congruence", "sampled",
                    "m-fold sum of the general three-parameter beta = 0 mod Phi_n", false},
                   general_grid(),
                   run_wei_bbb});
    reg.push_back({{"wei_ccc", "congruence", "sampled",
                    "m-fold general beta sum = [n]^m(b/q^r)^{m mu}(q^{2r}/b;q^d)^m/(bq^d;q^d)^m "
                    "{sum (aq^r,q^r/a,q^r/b,cq^{d-r}/b;q^d)_k/((q^d,q^d/b,q^{2r}/b,cq^d;q^d)_k)"
                    "q^{dk}}^m mod (1-aq^n)(a-q^n)",
                    false},
                   general_grid(),
                   run_wei_ccc});
    reg.push_back({{"wei_ddd", "congruence", "sampled",
                    "the a<->b dual of the previous congruence, mod (1-bq^n)(b-q^n)", false},
                   general_grid(),
                   run_wei_ddd});
    reg.push_back({{"wei_eee", "congruence", "sampled",
                    "m-fold general beta sum = [n]^m(q^r,q^{d-r};q^d)^m/(aq^d,q^d/a;q^d)^m "
                    "{sum (q^{d-r},aq^r,q^r/a,q^r/c;q^d)_k/((q^d,q^d/b,bq^d,q^{2r}/c;q^d)_k)"
                    "q^{dk}}^m mod (c-q^n)",
                    false},
                   general_grid(),
                   run_wei_eee});
    reg.push_back({{"wei_fff", "congruence", "sampled",
                    "three-term CRT combination mod Phi_n(1-aq^n)(a-q^n)(1-bq^n)(b-q^n)(c-q^n)",
                    false},
                   general_grid(),
                   run_wei_fff});
}

}  // namespace qcongr::detail
