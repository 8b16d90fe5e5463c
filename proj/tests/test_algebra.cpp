#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcongr/crt.hpp"
#include "qcongr/cyclotomic.hpp"
#include "qcongr/factored.hpp"
#include "qcongr/io.hpp"
#include "qcongr/poly.hpp"
#include "qcongr/ratfun.hpp"
#include "qcongr/rational.hpp"

#include <random>
#include <vector>

using namespace qcongr;

namespace {

using P = Poly<Rat>;
using RF = RatFun<Rat>;

P q_minus_1() { return P::var() - P(1); }
P q_plus_1() { return P::var() + P(1); }

P qpow_minus_1(long n) { return P::monomial(Rat(1), static_cast<std::size_t>(n)) - P(1); }

P bracket(long n) {
    return P::from_coeffs(std::vector<Rat>(static_cast<std::size_t>(n), Rat(1)));
}

P random_poly(std::mt19937_64& rng, int max_deg) {
    std::uniform_int_distribution<int> deg_dist(0, max_deg);
    std::uniform_int_distribution<long> num_dist(-9, 9);
    std::uniform_int_distribution<long> den_dist(1, 5);
    int d = deg_dist(rng);
    std::vector<Rat> c;
    for (int i = 0; i <= d; ++i) c.push_back(make_rat(num_dist(rng), den_dist(rng)));
    return P::from_coeffs(std::move(c));
}

Rat random_rat(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num_dist(-9, 9);
    std::uniform_int_distribution<long> den_dist(1, 5);
    return make_rat(num_dist(rng), den_dist(rng));
}

}  // namespace

TEST_CASE("rationals are canonical") {
    CHECK(make_rat(2, 4) == make_rat(1, 2));
    CHECK(make_rat(-2, -4) == make_rat(1, 2));
    CHECK(make_rat(0, 7) == Rat(0));
    CHECK_THROWS(make_rat(1, 0));
    CHECK(rat_pow(make_rat(2, 3), -2) == make_rat(9, 4));
    CHECK(rat_pow(Rat(5), 0) == Rat(1));
}

TEST_CASE("polynomial division") {
    SUBCASE("(q^2-1) / (q-1) = (q+1, 0)") {
        auto [quot, rem] = divrem(qpow_minus_1(2), q_minus_1());
        CHECK(quot == q_plus_1());
        CHECK(rem.zero());
    }
    SUBCASE("q^3 / (q-1) = (q^2+q+1, 1)") {
        auto [quot, rem] = divrem(P::monomial(Rat(1), 3), q_minus_1());
        CHECK(quot == bracket(3));
        CHECK(rem == P(1));
    }
    SUBCASE("a / a = (1, 0)") {
        P a = P::from_coeffs({make_rat(3, 2), Rat(-1), Rat(7)});
        auto [quot, rem] = divrem(a, a);
        CHECK(quot == P(1));
        CHECK(rem.zero());
    }
    SUBCASE("division by zero") { CHECK_THROWS(divrem(q_plus_1(), P())); }
}

TEST_CASE("extended gcd") {
    SUBCASE("coprime linear factors") {
        auto [g, s, t] = poly_gcd_ext(q_minus_1(), q_plus_1());
        CHECK(g == P(1));
        CHECK(s * q_minus_1() + t * q_plus_1() == P(1));
    }
    SUBCASE("common factor") {
        auto [g, s, t] = poly_gcd_ext(qpow_minus_1(2), q_minus_1());
        CHECK(g == q_minus_1());
        CHECK(s * qpow_minus_1(2) + t * q_minus_1() == g);
    }
    SUBCASE("phi_3^2 vs phi_3") {
        P phi3 = cyclotomic(3);
        auto [g, s, t] = poly_gcd_ext(phi3 * phi3, phi3);
        CHECK(g == phi3);
        CHECK(divides(g, phi3 * phi3));
        CHECK(divides(g, phi3));
        CHECK(s * phi3 * phi3 + t * phi3 == g);
    }
    SUBCASE("both zero") { CHECK_THROWS(poly_gcd_ext(P(), P())); }
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic(1) == q_minus_1());
    CHECK(cyclotomic(2) == q_plus_1());
    CHECK(cyclotomic(6) == P::from_coeffs({Rat(1), Rat(-1), Rat(1)}));
    CHECK(cyclotomic(6) == qpow_minus_1(6) / (cyclotomic(1) * cyclotomic(2) * cyclotomic(3)));
    CHECK_THROWS(cyclotomic(0));
}

TEST_CASE("cyclotomic product, degree, and q-integer factorizations up to 64") {
    for (long n = 1; n <= 64; ++n) {
        P prod(Rat(1));
        for (long d = 1; d <= n; ++d)
            if (n % d == 0) prod *= cyclotomic(d);
        CHECK(prod == qpow_minus_1(n));
        CHECK(cyclotomic(n).deg() == euler_phi(n));
        P br(Rat(1));
        for (long d = 2; d <= n; ++d)
            if (n % d == 0) br *= cyclotomic(d);
        CHECK(br == bracket(n));
    }
}

TEST_CASE("random division reconstruction and Bezout identity") {
    std::mt19937_64 rng(20240817);
    for (int trial = 0; trial < 30; ++trial) {
        P a = random_poly(rng, 8);
        P b = random_poly(rng, 5);
        if (b.zero()) continue;
        auto [quot, rem] = divrem(a, b);
        CHECK(a == quot * b + rem);
        CHECK(rem.deg() < b.deg());
        if (a.zero()) continue;
        auto [g, s, t] = poly_gcd_ext(a, b);
        CHECK(divides(g, a));
        CHECK(divides(g, b));
        CHECK(s * a + t * b == g);
    }
}

TEST_CASE("polynomial CRT") {
    SUBCASE("1 mod (q-1), -1 mod (q+1) gives q") {
        P r = crt_pair(P(1), q_minus_1(), P(-1), q_plus_1());
        CHECK(r == P::var());
    }
    SUBCASE("constant residue survives") {
        P c(make_rat(7, 3));
        P r = crt_pair(c, cyclotomic(3), c, cyclotomic(5));
        CHECK(r == c);
    }
    SUBCASE("0 mod phi_3, 1 mod phi_1") {
        P r = crt_pair(P(), cyclotomic(3), P(1), cyclotomic(1));
        CHECK(divides(cyclotomic(3), r));
        CHECK((r % cyclotomic(1)) == (P(1) % cyclotomic(1)));
        CHECK(r.eval(Rat(1)) == Rat(1));
    }
    SUBCASE("non-coprime moduli carry the gcd") {
        CHECK_THROWS_AS(crt_pair(P(1), qpow_minus_1(2), P(0), q_minus_1()), ModuliNotCoprime);
    }
    SUBCASE("random residues round-trip") {
        std::mt19937_64 rng(99);
        P m1 = cyclotomic(4), m2 = cyclotomic(7);
        for (int trial = 0; trial < 10; ++trial) {
            P r1 = random_poly(rng, 1) % m1;
            P r2 = random_poly(rng, 5) % m2;
            P r = crt_pair(r1, m1, r2, m2);
            CHECK(r.deg() < (m1 * m2).deg());
            CHECK(r % m1 == r1);
            CHECK(r % m2 == r2);
        }
    }
}

TEST_CASE("rational function arithmetic") {
    RF one_minus_q = RF(P(1) - P::var());
    RF one_plus_q = RF(q_plus_1());

    SUBCASE("1/(1-q) + 1/(1+q) = 2/(1-q^2)") {
        RF lhs = RF(1) / one_minus_q + RF(1) / one_plus_q;
        RF rhs = RF(2) / RF(P(1) - P::monomial(Rat(1), 2));
        CHECK(lhs == rhs);
    }
    SUBCASE("x * (1/x) = 1") {
        RF x = RF(bracket(5)) / RF(P::from_coeffs({Rat(2), Rat(0), Rat(-3)}));
        CHECK(x * x.inverse() == RF(1));
        CHECK(x / x == RF(1));
    }
    SUBCASE("(1-q^3)/(1-q) reduces to q^2+q+1") {
        RF x = RF(P(1) - P::monomial(Rat(1), 3)) / one_minus_q;
        CHECK(x.polynomial());
        CHECK(x.num() == bracket(3));
    }
    SUBCASE("division by zero") {
        CHECK_THROWS(one_plus_q / RF(0));
        CHECK_THROWS(RF(0).inverse());
    }
}

TEST_CASE("rational function arithmetic agrees with evaluation") {
    std::mt19937_64 rng(4242);
    RF x = RF(random_poly(rng, 4)) / RF(cyclotomic(5));
    RF y(0);
    while (y.zero()) y = RF(random_poly(rng, 3)) / RF(cyclotomic(3).pow(2));
    int checked = 0;
    while (checked < 20) {
        Rat xi = random_rat(rng);
        Rat dx = x.den_expanded().eval(xi);
        Rat dy = y.den_expanded().eval(xi);
        Rat dsum = (x + y).den_expanded().eval(xi);
        Rat dquot = (x / y).den_expanded().eval(xi);
        if (is_zero(dx) || is_zero(dy) || is_zero(dsum) || is_zero(dquot) || is_zero(y.eval(xi)))
            continue;
        CHECK((x + y).eval(xi) == x.eval(xi) + y.eval(xi));
        CHECK((x - y).eval(xi) == x.eval(xi) - y.eval(xi));
        CHECK((x * y).eval(xi) == x.eval(xi) * y.eval(xi));
        CHECK((x / y).eval(xi) == x.eval(xi) / y.eval(xi));
        ++checked;
    }
}

TEST_CASE("factored polynomials") {
    FactoredPoly<Rat> f;
    f.push_cyclotomic(3, 2);
    f.push_one_minus_qpow(4, 1);
    CHECK(f.expand() == -(cyclotomic(3).pow(2) * (P::monomial(Rat(1), 4) - P(1))));

    SUBCASE("lcm and cofactor") {
        FactoredPoly<Rat> a, b;
        a.push_cyclotomic(3, 2);
        a.push_cyclotomic(5, 1);
        b.push_cyclotomic(3, 1);
        b.push_cyclotomic(7, 1);
        auto l = FactoredPoly<Rat>::lcm(a, b);
        CHECK(l.expand_monic() == cyclotomic(3).pow(2) * cyclotomic(5) * cyclotomic(7));
        CHECK(l.cofactor_of(a).expand_monic() == cyclotomic(7));
        CHECK(l.cofactor_of(b).expand_monic() == cyclotomic(3) * cyclotomic(5));
    }
    SUBCASE("cancel_into strips shared factors") {
        FactoredPoly<Rat> d;
        d.push_cyclotomic(2, 1);
        d.push_cyclotomic(3, 1);
        P num = cyclotomic(3) * cyclotomic(4);  // phi_2 does not divide phi_4
        d.cancel_into(num);
        CHECK(num == cyclotomic(4));
        CHECK(d.expand_monic() == q_plus_1());
    }
}

TEST_CASE("fraction-field tower: polynomials in q over rational functions in a") {
    using K = RatFun<Rat>;
    K a = K::var();
    Poly<K> p = Poly<K>(K(1)) - Poly<K>::monomial(a, 1);  // 1 - a*q
    Poly<K> s = p * (Poly<K>(K(1)) + Poly<K>::monomial(a, 1));
    CHECK(s == Poly<K>(K(1)) - Poly<K>::monomial(a * a, 2));
    CHECK(s.deg() == p.deg() + 1);
    // evaluation at q = 1 collapses to the inner field
    CHECK(s.eval(K(1)) == K(1) - a * a);
}
