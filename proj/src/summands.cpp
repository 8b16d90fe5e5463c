#include "case_util.hpp"

namespace qcongr::detail {

namespace {

const Rat kOne{1};

// [4k+1] (q;q^2)_k^pw / (q^2;q^2)_k^pw, optionally times q^k
std::vector<RF> central_terms(long bound, int pw, bool twist) {
    return build_terms<Rat>(bound, [&](RatioBuilder<Rat>& t, long k) {
        t.mul_poly(q_integer<Rat>(4 * k + 1));
        poch(t, kOne, 1, 2, k, pw);
        poch(t, kOne, 2, 2, k, -pw);
        if (twist) t.mul_qpow(k);
    });
}

// [2dk+r] (q^r;q^d)_k^6 / (q^d;q^d)_k^6 q^{(2d-3r)k}
std::vector<RF> general_sixth_terms(long d, long r, long bound) {
    return build_terms<Rat>(bound, [&](RatioBuilder<Rat>& t, long k) {
        t.mul_poly(q_integer<Rat>(2 * d * k + r));
        poch(t, kOne, r, d, k, 6);
        poch(t, kOne, d, d, k, -6);
        t.mul_qpow((2 * d - 3 * r) * k);
    });
}

// [4k+1] (q;q^2)_k^2 (aq,q/a;q^2)_k / ((q^2;q^2)_k^2 (q^2/a,aq^2;q^2)_k), a rational
std::vector<RF> param_pair_terms(long bound, const Rat& a) {
    Rat ai = 1 / Rat(a);
    return build_terms<Rat>(bound, [&](RatioBuilder<Rat>& t, long k) {
        t.mul_poly(q_integer<Rat>(4 * k + 1));
        poch(t, kOne, 1, 2, k, 2);
        poch(t, a, 1, 2, k);
        poch(t, ai, 1, 2, k);
        poch(t, kOne, 2, 2, k, -2);
        poch(t, ai, 2, 2, k, -1);
        poch(t, a, 2, 2, k, -1);
    });
}

// [4k+1] (aq,q/a,bq,q/b;q^2)_k / ((q^2/a,aq^2,q^2/b,bq^2;q^2)_k)
std::vector<RF> two_param_terms(long bound, const Rat& a, const Rat& b) {
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
std::vector<RF> three_param_terms(long bound, const Rat& a, const Rat& b, const Rat& c) {
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

// [2dk+r] with all three parameters, base q^d
std::vector<RF> general_three_param_terms(long d, long r, long bound, const Rat& a, const Rat& b,
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

}  // namespace

std::vector<std::pair<std::string, std::vector<RF>>> oracle_summands(long bound) {
    Rat a = make_rat(2), b = make_rat(3), c = make_rat(5);
    return {
        {"central_fourth", central_terms(bound, 4, false)},
        {"central_sixth", central_terms(bound, 6, true)},
        {"general_d3_r1", general_sixth_terms(3, 1, bound)},
        {"general_d3_r2", general_sixth_terms(3, 2, bound)},
        {"general_d4_r3", general_sixth_terms(4, 3, bound)},
        {"one_param", param_pair_terms(bound, a)},
        {"two_param", two_param_terms(bound, a, b)},
        {"three_param", three_param_terms(bound, a, b, c)},
        {"general_three_param", general_three_param_terms(3, 1, bound, a, b, c)},
    };
}

}  // namespace qcongr::detail
