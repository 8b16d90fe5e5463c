#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcongr/congruence.hpp"
#include "qcongr/crt.hpp"
#include "qcongr/cyclotomic.hpp"
#include "qcongr/qseries.hpp"

#include <memory>
#include <vector>

using namespace qcongr;

namespace {

using P = Poly<Rat>;
using RF = RatFun<Rat>;

// [4k+1] (q;q^2)_k^4 / (q^2;q^2)_k^4, the central summand family
std::vector<RF> central_terms(long bound) {
    std::vector<RF> v;
    for (long k = 0; k <= bound; ++k) {
        RatioBuilder<Rat> b;
        b.mul_poly(q_integer<Rat>(4 * k + 1));
        for (int i = 0; i < 4; ++i) b.mul_poch(qmono(Rat(1), 1), 2, k);
        for (int i = 0; i < 4; ++i) b.div_poch(qmono(Rat(1), 2), 2, k);
        v.push_back(b.build());
    }
    return v;
}

Modulus<Rat> bracket_phi_modulus(long n, int phi_exp) {
    ModulusBuilder<Rat> mb;
    mb.bracket(n).cyclotomic(n, phi_exp);
    return mb.build();
}

}  // namespace

TEST_CASE("modulus construction") {
    SUBCASE("[3] phi_3 expands to (1+q+q^2)^2") {
        ModulusBuilder<Rat> mb;
        mb.bracket(3).cyclotomic(3);
        CHECK(mb.build().expanded == q_integer<Rat>(3).pow(2));
    }
    SUBCASE("[1] is the empty cyclotomic product") {
        ModulusBuilder<Rat> mb;
        mb.bracket(1);
        CHECK(mb.build().expanded == P(1));
    }
    SUBCASE("[5] phi_5^3 has degree 16") {
        CHECK(bracket_phi_modulus(5, 3).expanded.deg() == 16);
    }
    SUBCASE("extra polynomial factors with a sampled parameter") {
        Rat a = make_rat(2, 3);
        ModulusBuilder<Rat> mb;
        mb.bracket(3).cyclotomic(3, 2);
        mb.factor(P(1) - P::monomial(a, 3));
        mb.factor(P(a) - P::monomial(Rat(1), 3));
        Modulus<Rat> m = mb.build();
        CHECK(m.expanded.deg() == 2 + 4 + 3 + 3);
        CHECK(m.expanded.monic());
    }
}

TEST_CASE("congruence verdicts") {
    Modulus<Rat> m3 = bracket_phi_modulus(3, 3);
    SUBCASE("equal sides always hold") {
        RF x = RF(q_integer<Rat>(7)) / RF(cyclotomic(5));
        auto v = congruent(x, x, m3);
        CHECK(v.holds);
        CHECK(v.denominator_coprime);
        CHECK(v.residue.zero());
    }
    SUBCASE("double central sum at n=3 is [3]^2 q^{-2} mod [3] phi_3^3") {
        RF lhs = multi_sum(central_terms(2), 2, 2);
        RatioBuilder<Rat> rb;
        rb.mul_poly(q_integer<Rat>(3).pow(2));
        rb.mul_qpow(-2);
        auto v = congruent(lhs, rb.build(), m3);
        CHECK(v.holds);
        CHECK(v.denominator_coprime);
    }
    SUBCASE("pole on the modulus is a distinct verdict") {
        Modulus<Rat> m = ModulusBuilder<Rat>().cyclotomic(1).build();  // q - 1
        RF x = RF(1) / RF(P::var() - P(1));
        auto v = congruent(x, RF(0), m);
        CHECK_FALSE(v.denominator_coprime);
        CHECK_FALSE(v.holds);
    }
    SUBCASE("holds implies denominator_coprime") {
        auto v = congruent(RF(q_integer<Rat>(3)), RF(0), ModulusBuilder<Rat>().cyclotomic(3).build());
        CHECK(v.holds);
        CHECK(v.denominator_coprime);
    }
}

TEST_CASE("canonical residues") {
    Modulus<Rat> phi3 = ModulusBuilder<Rat>().cyclotomic(3).build();
    SUBCASE("inverse of q modulo phi_3") {
        RF x = RF(1) / RF::var();
        P r = reduce_mod(x, phi3);
        CHECK((P::var() * r) % phi3.expanded == P(1));
    }
    SUBCASE("low-degree polynomials are their own residue") {
        P p = P::from_coeffs({make_rat(1, 2), Rat(-3)});
        CHECK(reduce_mod(RF(p), phi3) == p);
    }
    SUBCASE("the modulus reduces to zero") {
        CHECK(reduce_mod(RF(cyclotomic(3)), phi3).zero());
    }
    SUBCASE("non-invertible denominator is an error") {
        RF x = RF(1) / RF(cyclotomic(3));
        CHECK_THROWS_WITH_AS(reduce_mod(x, phi3), "denominator shares factor with modulus",
                             std::domain_error);
    }
}

TEST_CASE("quotient-ring fast path agrees with exact accumulation") {
    for (long n : {3L, 5L, 7L}) {
        Modulus<Rat> mod = bracket_phi_modulus(n, 4);
        auto ring = std::make_shared<const ModRing<Rat>>(mod);
        std::vector<RF> terms = central_terms(n - 1);

        // fast path: reduce every term into the quotient ring, then convolve
        std::vector<ModElem<Rat>> reduced;
        for (const auto& t : terms) reduced.push_back(to_mod(ring, t));
        ModElem<Rat> fast(0);
        for (long i = 0; i <= n - 1; ++i)
            for (long j = 0; i + j <= n - 1; ++j)
                fast += reduced[static_cast<std::size_t>(i)] * reduced[static_cast<std::size_t>(j)];

        // exact path: full rational-function double sum, then one reduction
        RF exact = multi_sum(terms, 2, n - 1);
        CHECK(fast.rep() == reduce_mod(exact, mod));

        // and both agree with the congruence verdict against the fast residue
        auto v = congruent(exact, RF(fast.rep()), mod);
        CHECK(v.holds);
    }
}

TEST_CASE("limit operator") {
    using K = RatFun<Rat>;  // the field Q(q); the outer variable plays a
    Poly<K> x = Poly<K>::var();
    Poly<K> one_minus_x = Poly<K>(K(1)) - x;

    SUBCASE("(1-a)^2 (2+q) has limit 2+q") {
        K two_plus_q = K(P::from_coeffs({Rat(2), Rat(1)}));
        RatFun<K> f(one_minus_x * one_minus_x * Poly<K>(two_plus_q));
        CHECK(hopital_limit(f, 2) == two_plus_q);
    }
    SUBCASE("order mismatch is an error") {
        RatFun<K> f(one_minus_x * Poly<K>(K(3)));
        CHECK_THROWS_WITH_AS(hopital_limit(f, 2), "pole order mismatch in limit",
                             std::domain_error);
    }
    SUBCASE("denominator vanishing at the limit point is an error") {
        RatFun<K> f = RatFun<K>(1) / RatFun<K>(x - Poly<K>(K(1)));
        CHECK_THROWS_WITH_AS(hopital_limit(f, 0), "denominator vanishes at the limit point",
                             std::domain_error);
    }
    SUBCASE("the creative-microscoping limit at n=3") {
        // lim_{a->1} (1/(1-a)^2) {1 - a^2(1-q^2)^4 / ((1-aq^2)^2 (a-q^2)^2)}
        // = -2 q^2 / (1-q^2)^2
        K q2 = K(P::monomial(Rat(1), 2));
        K one_minus_q2 = K(1) - q2;
        Poly<K> den_factor = (Poly<K>(K(1)) - Poly<K>::monomial(q2, 1)) * (x - Poly<K>(q2));
        Poly<K> num = x * x * Poly<K>(one_minus_q2 * one_minus_q2 * one_minus_q2 * one_minus_q2);
        FactoredPoly<K> den;
        den.push(den_factor, 2);
        RatFun<K> f = RatFun<K>(1) - RatFun<K>(num, den);
        K expected = K(0) - K(2) * q2 / (one_minus_q2 * one_minus_q2);
        CHECK(hopital_limit(f, 2) == expected);
    }
}

TEST_CASE("parameter sampling") {
    std::vector<Rat> a = sample_params(9, 42);
    std::vector<Rat> b = sample_params(9, 42);
    CHECK(a == b);  // determinism
    CHECK(sample_params(9, 43) != a);
    for (const auto& x : a) {
        CHECK(x != 0);
        CHECK(x != 1);
        CHECK(x != -1);
    }
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            CHECK(a[i] != a[j]);
            CHECK(a[i] * a[j] != 1);
        }
}

TEST_CASE("parametric unit relation modulo (1-aX)(a-X)") {
    // (1-bX)(b-X)(-1-a^2+aX) / ((a-b)(1-ab)) = 1 + multiple of (1-aX)(a-X),
    // with X standing for q^n as a free variable.
    for (unsigned long seed : {1UL, 2UL, 3UL, 4UL, 5UL}) {
        std::vector<Rat> s = sample_params(2, seed);
        Rat a = s[0], b = s[1];
        P X = P::var();
        P unit = (P(1) - P::monomial(b, 1)) * (P(b) - X) *
                 (P(Rat(-1) - a * a) + P::monomial(a, 1));
        unit = unit.scaled(1 / Rat((a - b) * (1 - a * b)));
        P target = (P(1) - P::monomial(a, 1)) * (P(a) - X);
        CHECK(divides(target, unit - P(1)));
    }
}

TEST_CASE("polynomial CRT with parametric moduli") {
    // coefficients in Q(a): phi_n(q) and (1 - a q^n)(a - q^n) are coprime
    using K = RatFun<Rat>;
    K a = K::var();
    Poly<K> m1 = cyclotomic_k<K>(3);
    Poly<K> m2 = (Poly<K>(K(1)) - Poly<K>::monomial(a, 3)) * (Poly<K>(a) - Poly<K>::monomial(K(1), 3));
    Poly<K> r1 = Poly<K>(a) + Poly<K>::monomial(K(2), 1);
    Poly<K> r2 = Poly<K>::monomial(a * a, 4) - Poly<K>(K(1));
    Poly<K> r = crt_pair(r1, m1, r2, m2);
    CHECK(r % m1 == r1 % m1);
    CHECK(r % m2 == r2 % m2);
    CHECK(r.deg() < (m1 * m2).deg());
}
