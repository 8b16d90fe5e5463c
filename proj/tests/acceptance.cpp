// Acceptance gate: one line per criterion, PASS or FAIL, nonzero exit on any
// failure. Each criterion re-verifies its full instance grid from scratch.

#include "case_util.hpp"
#include "qcongr/cases.hpp"
#include "qcongr/padic.hpp"
#include "qcongr/qseries.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace qcongr;

namespace {

int g_failures = 0;

struct Reporter {
    int criterion;
    std::string description;
    std::vector<std::string> problems;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void fail(std::string what) { problems.push_back(std::move(what)); }

    ~Reporter() {
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (problems.empty()) {
            std::printf("PASS criterion %2d: %s (%.1fs)\n", criterion, description.c_str(), secs);
        } else {
            ++g_failures;
            std::printf("FAIL criterion %2d: %s (%.1fs)\n", criterion, description.c_str(), secs);
            for (const auto& p : problems) std::printf("      %s\n", p.c_str());
        }
        std::fflush(stdout);
    }
};

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

/// Runs every instance and records any non-holding result on the reporter.
void expect_all_hold(Reporter& rep, const std::string& id, const std::vector<Instance>& grid,
                     const std::function<void(const CaseResult&)>& extra = nullptr) {
    for (const auto& inst : grid) {
        CaseResult r;
        try {
            r = run_case(id, inst, CaseOptions{});
        } catch (const std::exception& e) {
            rep.fail(id + " " + inst.key() + ": " + e.what());
            continue;
        }
        if (!r.holds)
            rep.fail(id + " " + inst.key() + ": " +
                     (r.note.empty() ? std::string("does not hold") : r.note));
        if (extra) extra(r);
    }
}

void expect_defaults_hold(Reporter& rep, const std::string& id,
                          const std::function<void(const CaseResult&)>& extra = nullptr) {
    expect_all_hold(rep, id, default_instances(id), extra);
}

std::vector<Instance> odd_grid(long lo, long hi) {
    std::vector<Instance> v;
    for (long n = lo; n <= hi; n += 2) v.push_back(with_n(n));
    return v;
}

void criterion_1() {
    Reporter rep{1, "central double sum modulo [n]Phi_n^4, odd n in 3..21"};
    expect_all_hold(rep, "thm_a", odd_grid(3, 21));
}

void criterion_2() {
    Reporter rep{2, "twisted sixth-power double sum modulo [n]Phi_n^5, odd n in 3..15"};
    expect_all_hold(rep, "thm_b", odd_grid(3, 15));
}

void criterion_3() {
    Reporter rep{3, "m-fold general sum modulo Phi_n^6 over the (d,m,r) grid"};
    std::vector<Instance> grid;
    for (auto [d, m, r] : {std::tuple{3L, 2L, 1L}, {3L, 3L, 1L}, {3L, 2L, 2L},
                           {4L, 2L, 1L}, {4L, 3L, 3L}, {5L, 2L, 2L}}) {
        long n = r + d;  // two smallest n > r with n = r (mod d)
        grid.push_back(with_dmrn(d, m, r, n));
        grid.push_back(with_dmrn(d, m, r, n + d));
    }
    expect_all_hold(rep, "thm_c", grid);
}

void criterion_4() {
    Reporter rep{4, "one-parameter theorems exactly over Q(a)"};
    expect_all_hold(rep, "thm_d", {with_n(3), with_n(5), with_n(7), with_n(9)});
    expect_all_hold(rep, "thm_e", {with_n(3), with_n(5), with_n(7)});
    expect_all_hold(rep, "thm_f", {with_dmrn(3, 2, 1, 4), with_dmrn(3, 2, 1, 7)});
}

void criterion_5() {
    Reporter rep{5, "multi-parameter congruences at seeded samples, small n"};
    auto at_least_3 = [&rep](const CaseResult& r) {
        if (r.samples < 3)
            rep.fail(r.id + " " + r.inst.key() + ": only " + std::to_string(r.samples) +
                     " samples");
    };
    for (const char* id : {"wei_o", "wei_ff", "lemma_c", "nw_general", "lemma_d_units",
                           "beta_antisym", "gs_reflection"})
        expect_defaults_hold(rep, id, at_least_3);
}

void criterion_6() {
    Reporter rep{6, "classical transformations for truncations 1..5 and the polynomial relation"};
    auto five_tuples = [&rep](const CaseResult& r) {
        if (r.samples < 5)
            rep.fail(r.id + " " + r.inst.key() + ": only " + std::to_string(r.samples) +
                     " parameter tuples");
    };
    for (const char* id : {"watson", "saalschutz", "sears"}) {
        std::vector<Instance> grid;
        for (long m = 1; m <= 5; ++m) grid.push_back(with_n(m));
        expect_all_hold(rep, id, grid, five_tuples);
    }
    expect_all_hold(rep, "relation_id", {Instance{}});
}

void criterion_7() {
    Reporter rep{7, "introduction congruences on their stated grids"};
    for (const char* id : {"guo_li_c2", "song_wang", "guo_li_long", "van_hamme_c2_q", "long_q"})
        expect_all_hold(rep, id, odd_grid(3, 13));
    expect_all_hold(rep, "van_hamme_d2_q", {with_n(4), with_n(7), with_n(10), with_n(13)});
}

void criterion_8() {
    Reporter rep{8, "prefix-convolution sums match the brute oracle, m in {2,3}, N <= 8"};
    for (long bound : {5L, 8L}) {
        auto families = detail::oracle_summands(bound);
        for (const auto& [name, terms] : families)
            for (long m = 2; m <= 3; ++m)
                if (!(multi_sum(terms, m, bound) == multi_sum_oracle(terms, m, bound)))
                    rep.fail(name + " m=" + std::to_string(m) + " N=" + std::to_string(bound));
    }
}

void criterion_9() {
    Reporter rep{9, "lemma property suites over 20 seeded sequences each"};
    auto twenty = [&rep](const CaseResult& r) {
        if (r.samples != 20)
            rep.fail(r.id + " " + r.inst.key() + ": " + std::to_string(r.samples) +
                     " sequences instead of 20");
    };
    for (const char* id : {"lemma_a_prop", "lemma_b_prop", "lemma_e_prop"})
        expect_defaults_hold(rep, id, twenty);
}

void criterion_10() {
    Reporter rep{10, "numeric corollaries reach their required p-adic valuations"};
    auto met = [&rep](const CaseResult& r) {
        if (r.valuation < r.required_valuation)
            rep.fail(r.id + " " + r.inst.key() + ": valuation " + std::to_string(r.valuation) +
                     " < " + std::to_string(r.required_valuation));
    };
    expect_all_hold(rep, "cor_a",
                    {with_ps(5, 1), with_ps(7, 1), with_ps(11, 1), with_ps(13, 1), with_ps(5, 2)},
                    met);
    // p = 3 counts only if the p-integrality assertion passes there
    for (long p : {3L, 5L, 7L, 11L}) {
        CaseResult r = run_case("cor_b", with_ps(p, 1), CaseOptions{});
        if (p == 3 && !r.denominator_coprime) {
            std::printf("      note: cor_b p=3 skipped, p-integrality assertion failed\n");
            continue;
        }
        if (!r.holds) rep.fail("cor_b " + r.inst.key() + ": " + r.note);
        met(r);
    }
    expect_defaults_hold(rep, "cor_c", met);
    expect_all_hold(rep, "cor_d", {with_ps(7, 1), with_ps(13, 1)}, met);
    expect_all_hold(rep, "cor_e", {with_ps(7, 1), with_ps(13, 1)}, met);
}

void criterion_11() {
    Reporter rep{11, "classical supercongruences, including the Gamma_p target"};
    expect_all_hold(rep, "van_hamme_c2",
                    {with_ps(5, 1), with_ps(7, 1), with_ps(11, 1), with_ps(13, 1)});
    expect_all_hold(rep, "long_numeric", {with_ps(5, 1), with_ps(7, 1), with_ps(11, 1)});
    std::vector<Instance> d2;
    for (long p : {7L, 13L, 19L}) {
        Instance i = with_ps(p, 1);
        i.m = 4;  // check modulo p^4
        d2.push_back(i);
    }
    for (long p : {7L, 13L}) {
        Instance i = with_ps(p, 1);
        i.m = 6;  // the strengthened form modulo p^6
        d2.push_back(i);
    }
    expect_all_hold(rep, "van_hamme_d2", d2);
}

void criterion_12() {
    Reporter rep{12, "the a->1 limit operator reproduces the displayed limit sums"};
    expect_all_hold(rep, "hopital_c2", {with_n(3), with_n(5), with_n(7)});
    expect_all_hold(rep, "hopital_long", {with_n(3), with_n(5), with_n(7)});
    expect_defaults_hold(rep, "hopital_general");
}

std::pair<int, std::string> capture(const std::string& cmd) {
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, out};
    char buf[8192];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

void criterion_13() {
    Reporter rep{13, "the default suite is deterministic and byte-identical across runs"};
    const std::string cmd =
        std::string(QCONGR_BIN) + " verify --output json --no-timing --seed 42 2>/dev/null";
    auto [code1, out1] = capture(cmd);
    auto [code2, out2] = capture(cmd);
    if (code1 != 0) rep.fail("first run exited with " + std::to_string(code1));
    if (code2 != 0) rep.fail("second run exited with " + std::to_string(code2));
    if (out1.empty()) rep.fail("first run produced no output");
    if (out1 != out2) rep.fail("the two JSON reports differ");
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();
    criterion_13();
    if (g_failures == 0) {
        std::printf("all 13 acceptance criteria hold\n");
        return 0;
    }
    std::printf("%d criteria failed\n", g_failures);
    return 1;
}
