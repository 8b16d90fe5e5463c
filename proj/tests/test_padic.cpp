#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcongr/padic.hpp"
#include "qcongr/qseries.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace qcongr;

namespace {

Rat random_rat(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num_dist(-200, 200);
    std::uniform_int_distribution<long> den_dist(1, 60);
    return make_rat(num_dist(rng), den_dist(rng));
}

mpz_class reduce(const mpz_class& x, const mpz_class& modulus) {
    mpz_class r = x % modulus;
    if (r < 0) r += modulus;
    return r;
}

}  // namespace

TEST_CASE("primality by trial division") {
    CHECK(is_prime(2));
    CHECK(is_prime(13));
    CHECK(is_prime(19));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(15));
    CHECK_FALSE(is_prime(121));
}

TEST_CASE("p-adic valuation") {
    CHECK(valuation(Rat(250), 5) == 3);
    CHECK(valuation(make_rat(3, 5), 5) == -1);
    CHECK(valuation(Rat(7), 5) == 0);
    CHECK(valuation(make_rat(49, 36), 7) == 2);
    CHECK(valuation(Rat(0), 5) == kValuationInfinity);
}

TEST_CASE("valuation is additive") {
    std::mt19937_64 rng(314159);
    int checked = 0;
    while (checked < 50) {
        Rat x = random_rat(rng), y = random_rat(rng);
        if (is_zero(x) || is_zero(y)) continue;
        for (long p : {2L, 5L, 7L})
            CHECK(valuation(x * y, p) == valuation(x, p) + valuation(y, p));
        ++checked;
    }
}

TEST_CASE("rising factorials of rationals") {
    CHECK(pochhammer_rational(make_rat(1, 2), 2) == make_rat(3, 4));
    CHECK(pochhammer_rational(make_rat(7, 3), 0) == Rat(1));
    CHECK(pochhammer_rational(make_rat(1, 3), 3) == make_rat(28, 27));
    CHECK(pochhammer_rational(Rat(1), 5) == Rat(120));  // (1)_n = n!
}

TEST_CASE("second-order harmonic numbers") {
    CHECK(harmonic2(0) == Rat(0));
    CHECK(harmonic2(2) == make_rat(5, 4));
    CHECK(harmonic2(3) == make_rat(49, 36));
}

TEST_CASE("p-adic Gamma basics") {
    for (long p : {5L, 7L, 13L}) {
        PadicContext ctx{p, 3};
        mpz_class modulus = padic_modulus(ctx);
        CHECK(padic_gamma(Rat(1), ctx) == modulus - 1);  // Gamma_p(1) = -1
        CHECK(padic_gamma(Rat(2), ctx) == 1);
    }
    SUBCASE("non p-adic integer argument") {
        PadicContext ctx{5, 2};
        CHECK_THROWS_AS(padic_gamma(make_rat(1, 5), ctx), OutOfDomain);
    }
    SUBCASE("work cap") {
        PadicContext ctx{13, 8, 1000};
        CHECK_THROWS_AS(padic_gamma(make_rat(1, 3), ctx), OutOfDomain);
    }
}

TEST_CASE("p-adic Gamma matches the golden fixture") {
    std::ifstream in(std::string(QCONGR_FIXTURE_DIR) + "/padic_gamma_golden.txt");
    REQUIRE(in.good());
    std::string line;
    int records = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        long p, k, num, den;
        std::string residue;
        REQUIRE((row >> p >> k >> num >> den >> residue));
        PadicContext ctx{p, k};
        CHECK(padic_gamma(make_rat(num, den), ctx) == mpz_class(residue));
        ++records;
    }
    CHECK(records >= 8);
}

TEST_CASE("p-adic Gamma functional equation") {
    std::mt19937_64 rng(2718);
    for (long p : {5L, 7L}) {
        for (long k = 1; k <= 4; ++k) {
            PadicContext ctx{p, k};
            mpz_class modulus = padic_modulus(ctx);
            int checked = 0;
            while (checked < 20) {
                Rat x = random_rat(rng);
                if (valuation(x, p) < 0) continue;  // argument must be a p-adic integer
                mpz_class lhs = padic_gamma(Rat(x + 1), ctx);
                mpz_class gx = padic_gamma(x, ctx);
                mpz_class rhs;
                if (valuation(x, p) == 0)
                    rhs = reduce(modulus - residue_mod(x, modulus) * gx, modulus);
                else
                    rhs = reduce(modulus - gx, modulus);
                CHECK(lhs == rhs);
                ++checked;
            }
        }
    }
}

TEST_CASE("p-adic Gamma precision coherence") {
    for (long p : {5L, 7L}) {
        PadicContext lo{p, 2}, hi{p, 4};
        mpz_class m2 = padic_modulus(lo);
        for (long num : {1L, 2L, 5L, 7L, 11L}) {
            Rat x = make_rat(num, 3);
            CHECK(reduce(padic_gamma(x, hi), m2) == padic_gamma(x, lo));
        }
    }
}

TEST_CASE("q to 1 limit of the central double sum matches the rational double sum") {
    // n = 5 on the q side; p = 5, s = 1 on the rational side.
    const long bound = 4;
    std::vector<RatFun<Rat>> qterms;
    for (long k = 0; k <= bound; ++k) {
        RatioBuilder<Rat> b;
        b.mul_poly(q_integer<Rat>(4 * k + 1));
        for (int i = 0; i < 4; ++i) b.mul_poch(qmono(Rat(1), 1), 2, k);
        for (int i = 0; i < 4; ++i) b.div_poch(qmono(Rat(1), 2), 2, k);
        qterms.push_back(b.build());
    }
    RatFun<Rat> qsum = multi_sum(qterms, 2, bound);

    std::vector<Rat> terms;
    for (long k = 0; k <= bound; ++k) {
        Rat ratio = pochhammer_rational(make_rat(1, 2), k) / pochhammer_rational(Rat(1), k);
        terms.push_back(Rat(4 * k + 1) * rat_pow(ratio, 4));
    }
    Rat target = multi_sum(terms, 2, bound);

    CHECK(qsum.eval(Rat(1)) == target);
    CHECK(valuation(target - Rat(25) + make_rat(625, 2) * harmonic2(2), 5) >= 5);
}
