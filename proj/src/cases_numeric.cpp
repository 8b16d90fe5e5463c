#include "case_util.hpp"

#include "qcongr/padic.hpp"

namespace qcongr::detail {

namespace {

long ipow(long b, long e) {
    long acc = 1;
    for (long i = 0; i < e; ++i) acc *= b;
    return acc;
}

void validate_prime(long p) {
    require(is_prime(p) && p != 2, "p must be an odd prime");
}

bool p_integral(const std::vector<Rat>& xs, long p) {
    for (const auto& x : xs)
        if (valuation(Rat(x.get_den()), p) != 0) return false;
    return true;
}

CaseResult numeric_result(const std::string& id, const Instance& inst, const Rat& lhs,
                          const Rat& rhs, long p, long required,
                          const std::vector<Rat>& terms) {
    CaseResult r;
    r.id = id;
    r.inst = inst;
    r.mode = "numeric";
    r.required_valuation = required;
    if (!p_integral(terms, p)) {
        r.denominator_coprime = false;
        r.holds = false;
        r.note = "a summand denominator is not a p-unit";
        return r;
    }
    r.valuation = valuation(lhs - rhs, p);
    r.holds = r.valuation >= required;
    if (!r.holds)
        r.note = "valuation " + std::to_string(r.valuation) + " below required " +
                 std::to_string(required);
    return r;
}

// (4k+1) ((1/2)_k / k!)^e
std::vector<Rat> half_terms(long bound, int e) {
    std::vector<Rat> v;
    v.reserve(static_cast<std::size_t>(bound) + 1);
    for (long k = 0; k <= bound; ++k) {
        Rat ratio = pochhammer_rational(make_rat(1, 2), k) / pochhammer_rational(Rat(1), k);
        v.push_back(Rat(4 * k + 1) * rat_pow(ratio, e));
    }
    return v;
}

// (2dk+r) ((r/d)_k / k!)^6
std::vector<Rat> general_terms(long d, long r, long bound) {
    std::vector<Rat> v;
    v.reserve(static_cast<std::size_t>(bound) + 1);
    for (long k = 0; k <= bound; ++k) {
        Rat ratio = pochhammer_rational(make_rat(r, d), k) / pochhammer_rational(Rat(1), k);
        v.push_back(Rat(2 * d * k + r) * rat_pow(ratio, 6));
    }
    return v;
}

CaseResult run_van_hamme_c2(const Instance& in, const CaseOptions&) {
    validate_prime(in.p);
    require(in.p > 3, "needs p > 3");
    const long p = in.p;
    std::vector<Rat> terms = half_terms((p - 1) / 2, 4);
    Rat lhs(0);
    for (const auto& t : terms) lhs += t;
    return numeric_result("van_hamme_c2", in, lhs, Rat(p), p, 3, terms);
}

CaseResult run_long_numeric(const Instance& in, const CaseOptions&) {
    validate_prime(in.p);
    require(in.p > 3, "needs p > 3");
    const long p = in.p;
    std::vector<Rat> terms = half_terms((p - 1) / 2, 6);
    Rat lhs(0);
    for (const auto& t : terms) lhs += t;
    Rat rhs(0);
    for (long k = 0; k <= (p - 1) / 2; ++k)
        rhs += rat_pow(pochhammer_rational(make_rat(1, 2), k) / pochhammer_rational(Rat(1), k), 4);
    return numeric_result("long_numeric", in, lhs, Rat(p) * rhs, p, 4, terms);
}

CaseResult run_van_hamme_d2(const Instance& in, const CaseOptions& opt) {
    validate_prime(in.p);
    require(in.p % 6 == 1, "needs p = 1 (mod 6)");
    const long p = in.p;
    const long prec = in.m > 0 ? in.m : 4;
    require(prec == 4 || prec == 6, "modulus power must be 4 or 6");
    std::vector<Rat> terms;
    Rat lhs(0);
    for (long k = 0; k <= (p - 1) / 3; ++k) {
        Rat ratio = pochhammer_rational(make_rat(1, 3), k) / pochhammer_rational(Rat(1), k);
        terms.push_back(Rat(6 * k + 1) * rat_pow(ratio, 6));
        lhs += terms.back();
    }
    PadicContext ctx{p, prec, opt.padic_work_cap};
    mpz_class modulus = padic_modulus(ctx);
    mpz_class g = padic_gamma(make_rat(1, 3), ctx);
    mpz_class rhs = -p * g * g * g;
    rhs *= g * g * g;
    rhs *= g * g * g;
    mpz_mod(rhs.get_mpz_t(), rhs.get_mpz_t(), modulus.get_mpz_t());
    return numeric_result("van_hamme_d2", in, lhs, Rat(rhs), p, prec, terms);
}

CaseResult run_cor_a(const Instance& in, const CaseOptions&) {
    validate_prime(in.p);
    require(in.p > 3, "needs p > 3");
    require(in.s >= 1, "needs s >= 1");
    const long p = in.p, s = in.s;
    const long ps = ipow(p, s);
    std::vector<Rat> terms = half_terms(ps - 1, 4);
    Rat lhs = multi_sum(terms, 2, ps - 1);
    Rat rhs = rat_pow(Rat(p), 2 * s) -
              rat_pow(Rat(p), 4 * s) / 2 * harmonic2((ps - 1) / 2);
    return numeric_result("cor_a", in, lhs, rhs, p, s + 4, terms);
}

CaseResult run_cor_b(const Instance& in, const CaseOptions&) {
    validate_prime(in.p);
    require(in.s >= 1, "needs s >= 1");
    const long p = in.p, s = in.s;
    const long ps = ipow(p, s);
    std::vector<Rat> terms = half_terms(ps - 1, 6);
    Rat lhs = multi_sum(terms, 2, ps - 1);
    Rat p2s = rat_pow(Rat(p), 2 * s);
    Rat sum_plain(0), sum_weighted(0);
    for (long k = 0; k <= (ps - 1) / 2; ++k) {
        Rat r4 = rat_pow(pochhammer_rational(make_rat(1, 2), k) / pochhammer_rational(Rat(1), k), 4);
        sum_plain += r4;
        sum_weighted += r4 * (1 - 2 * p2s * harmonic2(2 * k));
    }
    return numeric_result("cor_b", in, lhs, p2s * sum_plain * sum_weighted, p, s + 5, terms);
}

Rat cor_c_rhs(long d, long m, long r, long p) {
    const long mu = (p - r) / d;
    Rat pre = rat_pow(Rat(p), m) *
              rat_pow(pochhammer_rational(make_rat(2 * r, d), mu) /
                          pochhammer_rational(Rat(1), mu),
                      m);
    Rat plain(0), weighted(0);
    for (long k = 0; k <= mu; ++k) {
        Rat g = rat_pow(pochhammer_rational(make_rat(r, d), k), 3) *
                pochhammer_rational(make_rat(d - r, d), k) /
                (rat_pow(pochhammer_rational(Rat(1), k), 3) *
                 pochhammer_rational(make_rat(2 * r, d), k));
        plain += g;
        Rat inner(0);
        for (long t = 1; t <= k; ++t)
            inner += make_rat(1, (d * t - d + r) * (d * t - d + r)) + make_rat(1, d * t * d * t);
        weighted += g * (1 - m * Rat(p) * Rat(p) * inner);
    }
    return pre * rat_pow(plain, m - 1) * weighted;
}

CaseResult run_cor_c_at(const std::string& id, long d, long m, long r, const Instance& in,
                        long p) {
    validate_prime(p);
    require(d >= m && m >= 2 && std::gcd(r, d) == 1, "need d >= m >= 2 and gcd(r, d) = 1");
    require(p % d == r % d && p > r, "need p = r (mod d) with p > r");
    std::vector<Rat> terms = general_terms(d, r, p - 1);
    Rat lhs = multi_sum(terms, m, p - 1);
    return numeric_result(id, in, lhs, cor_c_rhs(d, m, r, p), p, 6, terms);
}

CaseResult run_cor_c(const Instance& in, const CaseOptions&) {
    return run_cor_c_at("cor_c", in.d, in.m, in.r, in, in.p);
}

CaseResult run_cor_d(const Instance& in, const CaseOptions&) {
    return run_cor_c_at("cor_d", 3, 2, 1, in, in.p);
}

CaseResult run_cor_e(const Instance& in, const CaseOptions&) {
    return run_cor_c_at("cor_e", 3, 3, 1, in, in.p);
}

Instance inst_p(long p) {
    Instance i;
    i.p = p;
    return i;
}

Instance inst_pm(long p, long prec) {
    Instance i;
    i.p = p;
    i.m = prec;
    return i;
}

Instance inst_dmrp(long d, long m, long r, long p) {
    Instance i;
    i.d = d;
    i.m = m;
    i.r = r;
    i.p = p;
    return i;
}

}  // namespace

void register_numeric_cases(Registry& reg) {
    reg.push_back({{"van_hamme_c2", "numeric", "numeric",
                    "sum (4k+1)((1/2)_k/k!)^4 over k<=(p-1)/2 = p mod p^3", false},
                   {inst_p(5), inst_p(7), inst_p(11), inst_p(13)},
                   run_van_hamme_c2});
    reg.push_back({{"van_hamme_d2", "numeric", "numeric",
                    "sum (6k+1)((1/3)_k/k!)^6 over k<=(p-1)/3 = -p Gamma_p(1/3)^9 mod p^4 "
                    "(and mod p^6), p = 1 (mod 6)",
                    false},
                   {inst_pm(7, 4), inst_pm(13, 4), inst_pm(19, 4), inst_pm(7, 6), inst_pm(13, 6)},
                   run_van_hamme_d2});
    reg.push_back({{"long_numeric", "numeric", "numeric",
                    "sum (4k+1)((1/2)_k/k!)^6 = p sum ((1/2)_k/k!)^4 mod p^4, k<=(p-1)/2",
                    false},
                   {inst_p(5), inst_p(7), inst_p(11)},
                   run_long_numeric});
    reg.push_back({{"cor_a", "numeric", "numeric",
                    "sum over i+j<=p^s-1 of (4i+1)(4j+1)((1/2)_i(1/2)_j/(i! j!))^4 = "
                    "p^2s - p^4s/2 H^(2)_((p^s-1)/2) mod p^(s+4)",
                    false},
                   {inst_ps(5, 1), inst_ps(7, 1), inst_ps(11, 1), inst_ps(13, 1), inst_ps(5, 2)},
                   run_cor_a});
    reg.push_back({{"cor_b", "numeric", "numeric",
                    "sum over i+j<=p^s-1 of (4i+1)(4j+1)((1/2)_i(1/2)_j/(i! j!))^6 = "
                    "p^2s (sum r4(k)) (sum r4(k)(1-2p^2s H^(2)_2k)) mod p^(s+5)",
                    false},
                   {inst_p(3), inst_p(5), inst_p(7), inst_p(11)},
                   run_cor_b});
    reg.push_back({{"cor_c", "numeric", "numeric",
                    "m-fold sum of (2dk+r)((r/d)_k/k!)^6 over the simplex = "
                    "p^m ((2r/d)_mu/mu!)^m (sum g)^{m-1} sum g(k){1-mp^2 sum(...)} mod p^6",
                    false},
                   {inst_dmrp(3, 2, 1, 7), inst_dmrp(3, 2, 1, 13), inst_dmrp(3, 3, 1, 7),
                    inst_dmrp(3, 3, 1, 13), inst_dmrp(3, 2, 2, 5), inst_dmrp(3, 2, 2, 11),
                    inst_dmrp(4, 2, 1, 5), inst_dmrp(4, 2, 1, 13), inst_dmrp(4, 3, 3, 7),
                    inst_dmrp(4, 3, 3, 11), inst_dmrp(5, 2, 2, 7)},
                   run_cor_c});
    reg.push_back({{"cor_d", "numeric", "numeric",
                    "the (d,m,r)=(3,2,1) double-sum case mod p^6, p = 1 (mod 6)", false},
                   {inst_p(7), inst_p(13)},
                   run_cor_d});
    reg.push_back({{"cor_e", "numeric", "numeric",
                    "the (d,m,r)=(3,3,1) triple-sum case mod p^6, p = 1 (mod 6)", false},
                   {inst_p(7), inst_p(13)},
                   run_cor_e});
}

}  // namespace qcongr::detail
