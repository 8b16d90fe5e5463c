#include "case_util.hpp"

#include "qcongr/cyclotomic.hpp"

#include <random>

namespace qcongr::detail {

namespace {

QMono<Rat> qm(const Rat& c, long e = 0) { return QMono<Rat>{c, e}; }

bool unit_like(const Rat& x) { return x == 0 || x == 1 || x == -1; }

/// Nudges x until pred(x) holds and x stays outside {0, 1, -1}.
Rat fix_param(Rat x, const std::function<bool(const Rat&)>& pred) {
    while (unit_like(x) || !pred(x)) x += 3;
    return x;
}

// ---- the three classical transformations, truncation order n, 5 tuples ----

CaseResult run_watson(const Instance& in, const CaseOptions& opt) {
    require(in.n >= 1 && in.n <= 5, "truncation order must be in 1..5");
    const long m = in.n;
    return sampled_result("watson", in,
                          [&](const std::vector<Rat>& p) -> std::pair<bool, bool> {
                              const Rat &al = p[0], &b = p[1], &c = p[2], &d = p[3];
                              Rat a = al * al;
                              Rat e = fix_param(p[4], [&](const Rat& x) {
                                  return d * x != a && b * x != a && c * x != a;
                              });
                              RF z = rf_qpow<Rat>(m + 2).scaled(a * a / (b * c * d * e));
                              RF lhs = phi_series<Rat>(
                                  {qm(a), qm(al, 1), qm(Rat(-al), 1), qm(b), qm(c), qm(d), qm(e),
                                   qm(Rat(1), -m)},
                                  {qm(al), qm(Rat(-al)), qm(a / b, 1), qm(a / c, 1), qm(a / d, 1),
                                   qm(a / e, 1), qm(a, m + 1)},
                                  1, z, m);
                              RatioBuilder<Rat> pre;
                              poch(pre, a, 1, 1, m);
                              poch(pre, Rat(a / (d * e)), 1, 1, m);
                              poch(pre, Rat(a / d), 1, 1, m, -1);
                              poch(pre, Rat(a / e), 1, 1, m, -1);
                              RF rhs = pre.build() *
                                       phi_series<Rat>(
                                           {qm(Rat(a / (b * c)), 1), qm(d), qm(e), qm(Rat(1), -m)},
                                           {qm(a / b, 1), qm(a / c, 1), qm(Rat(d * e / a), -m)},
                                           1, rf_qpow<Rat>(1), m);
                              return {lhs == rhs, true};
                          },
                          5, 5, opt.seed);
}

CaseResult run_saalschutz(const Instance& in, const CaseOptions& opt) {
    require(in.n >= 1 && in.n <= 5, "truncation order must be in 1..5");
    const long m = in.n;
    return sampled_result("saalschutz", in,
                          [&](const std::vector<Rat>& p) -> std::pair<bool, bool> {
                              const Rat &a = p[0], &b = p[1];
                              Rat c = fix_param(p[2], [&](const Rat& x) {
                                  return a * b != x && x != a && x != b;
                              });
                              RF lhs = phi_series<Rat>({qm(Rat(1), -m), qm(a), qm(b)},
                                                       {qm(c), qm(Rat(a * b / c), 1 - m)}, 1,
                                                       rf_qpow<Rat>(1), m);
                              RatioBuilder<Rat> pre;
                              poch(pre, Rat(c / a), 0, 1, m);
                              poch(pre, Rat(c / b), 0, 1, m);
                              poch(pre, c, 0, 1, m, -1);
                              poch(pre, Rat(c / (a * b)), 0, 1, m, -1);
                              return {lhs == pre.build(), true};
                          },
                          3, 5, opt.seed);
}

CaseResult run_sears(const Instance& in, const CaseOptions& opt) {
    require(in.n >= 1 && in.n <= 5, "truncation order must be in 1..5");
    const long m = in.n;
    return sampled_result("sears", in,
                          [&](const std::vector<Rat>& p) -> std::pair<bool, bool> {
                              const Rat &a = p[0], &b = p[1], &c = p[2], &d = p[3];
                              Rat e = fix_param(p[4], [&](const Rat& x) {
                                  return a * b * c != d * x && b * c != d * x && x != a &&
                                         Rat(a * b * c) != Rat(d * x * x);
                              });
                              // f is pinned by d e f = a b c q^{1-m}
                              Rat fc = a * b * c / (d * e);  // f = fc * q^{1-m}
                              RF lhs = phi_series<Rat>({qm(a), qm(b), qm(c), qm(Rat(1), -m)},
                                                       {qm(d), qm(e), qm(fc, 1 - m)}, 1,
                                                       rf_qpow<Rat>(1), m);
                              RatioBuilder<Rat> pre;
                              pre.mul_const(rat_pow(a, m));
                              poch(pre, Rat(e / a), 0, 1, m);
                              poch(pre, Rat(fc / a), 1 - m, 1, m);
                              poch(pre, e, 0, 1, m, -1);
                              poch(pre, fc, 1 - m, 1, m, -1);
                              RF rhs = pre.build() *
                                       phi_series<Rat>(
                                           {qm(a), qm(Rat(d / b)), qm(Rat(d / c)), qm(Rat(1), -m)},
                                           {qm(d), qm(Rat(a / e), 1 - m), qm(Rat(d * e / (b * c)))},
                                           1, rf_qpow<Rat>(1), m);
                              return {lhs == rhs, true};
                          },
                          5, 5, opt.seed);
}

// (1-X)^2 (1+a^2-aX) = (1-a)^2 + (1-aX)(a-X)(2-X), exact in both variables
CaseResult run_relation_id(const Instance& in, const CaseOptions&) {
    Qx a(Poly<Rat>::monomial(Rat(1), 1));
    Qx one(1);
    auto lin = [&](const Qx& c0, const Qx& c1) {
        return Poly<Qx>(c0) + Poly<Qx>::monomial(c1, 1);
    };
    Poly<Qx> lhs = lin(one, Qx(-1)) * lin(one, Qx(-1)) * lin(one + a * a, Qx(0) - a);
    Poly<Qx> rhs = Poly<Qx>((one - a) * (one - a)) +
                   lin(one, Qx(0) - a) * lin(a, Qx(-1)) * lin(Qx(2), Qx(-1));
    return equality_result("relation_id", in, "exact", lhs == rhs);
}

// ---- seeded property suites for the three summation lemmas ----

constexpr int kPropertyRuns = 20;

Rat random_rat(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 4);
    return make_rat(num(rng), den(rng));
}

Rat random_nonzero(std::mt19937_64& rng) {
    Rat x = random_rat(rng);
    while (x == 0) x = random_rat(rng);
    return x;
}

Poly<Rat> random_poly(std::mt19937_64& rng, long deg) {
    std::vector<Rat> cs;
    cs.reserve(static_cast<std::size_t>(deg) + 1);
    for (long i = 0; i <= deg; ++i) cs.push_back(random_rat(rng));
    return Poly<Rat>::from_coeffs(std::move(cs));
}

CaseResult property_result(const std::string& id, const Instance& inst,
                           const std::function<bool(std::mt19937_64&)>& run_one,
                           unsigned long seed) {
    CaseResult r;
    r.id = id;
    r.inst = inst;
    r.mode = "property";
    r.holds = true;
    for (int i = 0; i < kPropertyRuns; ++i) {
        std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * static_cast<unsigned long>(i + 1));
        ++r.samples;
        if (!run_one(rng)) {
            r.holds = false;
            r.note = "failed at sequence " + std::to_string(i);
            return r;
        }
    }
    return r;
}

// antisymmetric sequences mod Phi_n have a vanishing triangular double sum
CaseResult run_lemma_a_prop(const Instance& in, const CaseOptions& opt) {
    require_odd(in.n);
    const long n = in.n;
    const Poly<Rat>& phi = cyclotomic(n);
    return property_result("lemma_a_prop", in,
                           [&](std::mt19937_64& rng) {
                               std::vector<Poly<Rat>> a(static_cast<std::size_t>(n));
                               auto fill_pair = [&](long k, long j) {
                                   if (k == j) {
                                       a[static_cast<std::size_t>(k)] = phi * random_poly(rng, 2);
                                   } else {
                                       Poly<Rat> r = random_poly(rng, n - 1);
                                       a[static_cast<std::size_t>(k)] = r;
                                       a[static_cast<std::size_t>(j)] =
                                           phi * random_poly(rng, 2) - r;
                                   }
                               };
                               for (long k = 0; 2 * k <= (n - 1) / 2; ++k)
                                   fill_pair(k, (n - 1) / 2 - k);
                               for (long k = (n + 1) / 2; 2 * k <= (3 * n - 1) / 2; ++k)
                                   fill_pair(k, (3 * n - 1) / 2 - k);
                               Poly<Rat> total = multi_sum(a, 2, n - 1);
                               return divides(phi, total);
                           },
                           opt.seed);
}

bool check_window_factorization(std::mt19937_64& rng, long d, long m, long n, long bound) {
    std::vector<Rat> lam(static_cast<std::size_t>(n), Rat(0));
    Rat total(0);
    for (long k = 0; k <= bound; ++k) {
        lam[static_cast<std::size_t>(k)] = random_nonzero(rng);
        total += lam[static_cast<std::size_t>(k)];
    }
    return multi_sum(lam, m, n - 1) == k_pow(total, m);
}

// block-multiplicative sequences split an exact-weight double sum into the
// base-window part times the block part
bool check_block_decomposition(std::mt19937_64& rng, long n) {
    const long lmax = 2;
    std::vector<Rat> base(static_cast<std::size_t>(n), Rat(0));
    base[0] = Rat(1);
    for (long t = 1; t <= (n - 1) / 2; ++t) base[static_cast<std::size_t>(t)] = random_nonzero(rng);
    std::vector<Rat> g(static_cast<std::size_t>(lmax) + 1, Rat(1));
    for (long l = 1; l <= lmax; ++l) g[static_cast<std::size_t>(l)] = random_nonzero(rng);
    auto lam = [&](long idx) {
        return g[static_cast<std::size_t>(idx / n)] * base[static_cast<std::size_t>(idx % n)];
    };
    for (long l = 1; l <= lmax; ++l) {
        for (long k = 0; k <= n - 1; ++k) {
            Rat lhs(0);
            for (long k1 = 0; k1 <= l * n + k; ++k1) lhs += lam(k1) * lam(l * n + k - k1);
            Rat inner(0);
            for (long k1 = 0; k1 <= k; ++k1) inner += base[static_cast<std::size_t>(k1)] *
                                                      base[static_cast<std::size_t>(k - k1)];
            Rat blocks(0);
            for (long s = 0; s <= l; ++s)
                blocks += g[static_cast<std::size_t>(s)] * g[static_cast<std::size_t>(l - s)];
            if (lhs != inner * blocks) return false;
        }
    }
    return true;
}

CaseResult run_lemma_b_prop(const Instance& in, const CaseOptions& opt) {
    require(in.d == in.m && (in.d == 2 || in.d == 3), "need d = m in {2, 3}");
    require(in.n >= 1 && in.n % in.d == 1, "need n = 1 (mod d)");
    const long d = in.d, m = in.m, n = in.n;
    return property_result("lemma_b_prop", in,
                           [&](std::mt19937_64& rng) {
                               if (!check_window_factorization(rng, d, m, n, (n - 1) / d))
                                   return false;
                               if (d == 2 && n <= 9 && !check_block_decomposition(rng, n))
                                   return false;
                               return true;
                           },
                           opt.seed);
}

CaseResult run_lemma_e_prop(const Instance& in, const CaseOptions& opt) {
    validate_dmrn(in);
    const long d = in.d, m = in.m, r = in.r, n = in.n;
    return property_result("lemma_e_prop", in,
                           [&](std::mt19937_64& rng) {
                               return check_window_factorization(rng, d, m, n, (n - r) / d);
                           },
                           opt.seed);
}

std::vector<Instance> truncation_grid() {
    std::vector<Instance> v;
    for (long m = 1; m <= 5; ++m) v.push_back(inst_n(m));
    return v;
}

Instance inst_dmn(long d, long m, long n) {
    Instance i;
    i.d = d;
    i.m = m;
    i.n = n;
    return i;
}

}  // namespace

void register_classical_cases(Registry& reg) {
    reg.push_back({{"watson", "identity", "sampled",
                    "8phi7[a,qa^(1/2),-qa^(1/2),b,c,d,e,q^-m; a^(1/2),-a^(1/2),aq/b,aq/c,aq/d,"
                    "aq/e,aq^(m+1); q, a^2q^(m+2)/(bcde)] = (aq,aq/de;q)_m/(aq/d,aq/e;q)_m "
                    "4phi3[aq/bc,d,e,q^-m; aq/b,aq/c,deq^-m/a; q,q]",
                    false},
                   truncation_grid(),
                   run_watson});
    reg.push_back({{"saalschutz", "identity", "sampled",
                    "3phi2[q^-m,a,b; c,q^(1-m)ab/c; q,q] = (c/a,c/b;q)_m/(c,c/ab;q)_m", false},
                   truncation_grid(),
                   run_saalschutz});
    reg.push_back({{"sears", "identity", "sampled",
                    "4phi3[a,b,c,q^-m; d,e,f; q,q] = a^m (e/a,f/a;q)_m/(e,f;q)_m "
                    "4phi3[a,d/b,d/c,q^-m; d,aq^(1-m)/e,aq^(1-m)/f; q,q] with def=abcq^(1-m)",
                    false},
                   truncation_grid(),
                   run_sears});
    reg.push_back({{"relation_id", "identity", "exact",
                    "(1-X)^2(1+a^2-aX) = (1-a)^2 + (1-aX)(a-X)(2-X) as a two-variable "
                    "polynomial identity",
                    false},
                   {Instance{}},
                   run_relation_id});
    reg.push_back({{"lemma_a_prop", "property", "property",
                    "a_k = -a_{(n-1)/2-k} and a_k = -a_{(3n-1)/2-k} mod Phi_n imply "
                    "sum over i+j<=n-1 of a_i a_j = 0 mod Phi_n",
                    false},
                   {inst_n(3), inst_n(5), inst_n(7), inst_n(9), inst_n(11), inst_n(13)},
                   run_lemma_a_prop});
    reg.push_back({{"lemma_b_prop", "property", "property",
                    "lambda = 0 on the window (n+d-1)/d..n-1 makes the m-fold simplex sum "
                    "factor as (sum_{k<=(n-1)/d} lambda)^m; block-multiplicative sequences "
                    "split exact-weight sums into base times block parts",
                    false},
                   {inst_dmn(2, 2, 3), inst_dmn(2, 2, 5), inst_dmn(2, 2, 7), inst_dmn(2, 2, 9),
                    inst_dmn(2, 2, 11), inst_dmn(2, 2, 13), inst_dmn(3, 3, 4), inst_dmn(3, 3, 7),
                    inst_dmn(3, 3, 10), inst_dmn(3, 3, 13)},
                   run_lemma_b_prop});
    reg.push_back({{"lemma_e_prop", "property", "property",
                    "lambda = 0 on the window (n+d-r)/d..n-1 makes the m-fold simplex sum "
                    "factor as (sum_{k<=(n-r)/d} lambda)^m",
                    false},
                   {inst_dmrn(3, 2, 1, 7), inst_dmrn(3, 3, 1, 7), inst_dmrn(3, 2, 2, 8),
                    inst_dmrn(3, 3, 2, 8), inst_dmrn(4, 2, 3, 11), inst_dmrn(4, 3, 3, 11)},
                   run_lemma_e_prop});
}

}  // namespace qcongr::detail
