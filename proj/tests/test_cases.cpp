#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcongr/cases.hpp"
#include "qcongr/errors.hpp"

#include <algorithm>
#include <set>
#include <string>

using namespace qcongr;

namespace {

Instance with_n(long n) {
    Instance i;
    i.n = n;
    return i;
}

Instance with_dmrn(long d, long m, long r, long n) {
    Instance i;
    i.d = d;
    i.m = m;
    i.r = r;
    i.n = n;
    return i;
}

Instance with_ps(long p, long s) {
    Instance i;
    i.p = p;
    i.s = s;
    return i;
}

CaseResult run(const std::string& id, const Instance& inst) {
    return run_case(id, inst, CaseOptions{});
}

}  // namespace

TEST_CASE("catalog shape") {
    const auto& cases = list_cases();
    CHECK(cases.size() >= 40);
    CHECK(std::is_sorted(cases.begin(), cases.end(),
                         [](const CaseInfo& a, const CaseInfo& b) { return a.id < b.id; }));
    std::set<std::string> kinds{"congruence", "identity", "property", "numeric"};
    std::set<std::string> ids;
    for (const auto& info : cases) {
        CHECK_FALSE(info.id.empty());
        CHECK_FALSE(info.anchor.empty());
        CHECK_FALSE(info.mode.empty());
        CHECK(kinds.count(info.kind) == 1);
        CHECK(ids.insert(info.id).second);  // ids are unique
        CHECK_FALSE(default_instances(info.id).empty());
    }
    for (const char* id : {"thm_a", "thm_b", "thm_c", "thm_d", "thm_e", "thm_f", "guo_li_c2",
                           "song_wang", "watson", "saalschutz", "sears", "relation_id",
                           "lemma_a_prop", "lemma_b_prop", "lemma_c", "lemma_d_units",
                           "lemma_e_prop", "lemma_f", "nw_general", "gs_reflection",
                           "beta_antisym", "wei_o", "wei_ff", "cor_a", "cor_b", "cor_c",
                           "van_hamme_c2", "van_hamme_d2", "songwang_conjecture"})
        CHECK(find_case(id) != nullptr);
    CHECK(find_case("no_such_case") == nullptr);
    CHECK(find_case("songwang_conjecture")->experimental);
}

TEST_CASE("default instance grids") {
    auto thm_a = default_instances("thm_a");
    REQUIRE(thm_a.size() == 10);
    CHECK(thm_a.front().n == 3);
    CHECK(thm_a.back().n == 21);
    CHECK(default_instances("thm_b").size() == 7);
    CHECK(default_instances("thm_c").size() == 12);
    CHECK_THROWS_AS(default_instances("no_such_case"), UnknownCase);
}

TEST_CASE("instance keys") {
    CHECK(Instance{}.key() == "-");
    CHECK(with_n(5).key() == "n=5");
    CHECK(with_dmrn(3, 2, 1, 7).key() == "d=3,m=2,r=1,n=7");
    CHECK(with_ps(5, 2).key() == "p=5,s=2");
}

TEST_CASE("representative verdicts") {
    SUBCASE("central double sum modulo [n] phi_n^4") {
        CaseResult r = run("thm_a", with_n(3));
        CHECK(r.holds);
        CHECK(r.denominator_coprime);
        CHECK(r.mode == "exact");
        CHECK(r.id == "thm_a");
        CHECK(r.inst.n == 3);
    }
    SUBCASE("two-variable polynomial identity") {
        CHECK(run("relation_id", Instance{}).holds);
    }
    SUBCASE("general sixth-power sum modulo phi_n^6") {
        CaseResult r = run("thm_c", with_dmrn(3, 2, 1, 7));
        CHECK(r.holds);
        CHECK(r.mode == "exact");
    }
    SUBCASE("sampled reflection congruence reports its sample count") {
        CaseResult r = run("gs_reflection", with_n(5));
        CHECK(r.holds);
        CHECK(r.mode == "sampled");
        CHECK(r.samples >= 3);
    }
    SUBCASE("terminating-series transformation at one truncation") {
        CaseResult r = run("saalschutz", with_n(2));
        CHECK(r.holds);
        CHECK(r.samples >= 1);
    }
    SUBCASE("numeric corollary reports valuations") {
        CaseResult r = run("cor_a", with_ps(5, 1));
        CHECK(r.holds);
        CHECK(r.mode == "numeric");
        CHECK(r.required_valuation == 5);
        CHECK(r.valuation >= 5);
    }
    SUBCASE("limit-formula consistency case") {
        CHECK(run("hopital_c2", with_n(5)).holds);
    }
}

TEST_CASE("constraint violations are out-of-domain errors") {
    CHECK_THROWS_AS(run("thm_a", with_n(4)), OutOfDomain);
    CHECK_THROWS_AS(run("thm_a", with_n(0)), OutOfDomain);
    CHECK_THROWS_AS(run("thm_c", with_dmrn(4, 2, 2, 6)), OutOfDomain);  // gcd(r,d) > 1
    CHECK_THROWS_AS(run("thm_c", with_dmrn(3, 2, 1, 6)), OutOfDomain);  // n != r (mod d)
    CHECK_THROWS_AS(run("thm_c", with_dmrn(2, 3, 1, 5)), OutOfDomain);  // d < m
    CHECK_THROWS_AS(run("cor_a", with_ps(4, 1)), OutOfDomain);          // p not prime
    CHECK_THROWS_AS(run("cor_a", with_ps(3, 1)), OutOfDomain);          // p > 3 required
    CHECK_THROWS_AS(run("cor_d", with_ps(5, 1)), OutOfDomain);          // p = 1 (mod 6) required
    CHECK_THROWS_AS(run("no_such_case", with_n(3)), UnknownCase);
}

TEST_CASE("degree cap bounds the modulus") {
    CaseOptions opt;
    opt.degree_cap = 10;
    CHECK_THROWS_AS(run_case("thm_a", with_n(21), opt), OutOfDomain);
    opt.degree_cap = 2500;
    CHECK(run_case("thm_a", with_n(3), opt).holds);
}

TEST_CASE("experimental cases are gated") {
    CHECK_THROWS_AS(run("songwang_conjecture", with_n(3)), OutOfDomain);
    CaseOptions opt;
    opt.experimental = true;
    CaseResult r = run_case("songwang_conjecture", with_n(3), opt);
    CHECK(r.id == "songwang_conjecture");
    CHECK(r.holds);
}

TEST_CASE("seeded runs are reproducible") {
    CaseOptions opt;
    opt.seed = 1234;
    CaseResult a = run_case("beta_antisym", with_n(5), opt);
    CaseResult b = run_case("beta_antisym", with_n(5), opt);
    CHECK(a.holds);
    CHECK(a.holds == b.holds);
    CHECK(a.samples == b.samples);
    CHECK(a.note == b.note);
}
