#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <string>

namespace {

struct RunOutput {
    int exit_code = -1;
    std::string out;
};

/// Runs the verifier binary with the given arguments, capturing stdout.
RunOutput run_cli(const std::string& args, const std::string& env = "") {
    std::string cmd = env.empty() ? "" : env + " ";
    cmd += std::string(QCONGR_BIN) + " " + args + " 2>/dev/null";
    RunOutput r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

int count_lines(const std::string& s) {
    int n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

}  // namespace

TEST_CASE("list prints the catalog") {
    RunOutput r = run_cli("list");
    CHECK(r.exit_code == 0);
    CHECK(count_lines(r.out) >= 40);
    CHECK(r.out.find("thm_a") != std::string::npos);
    CHECK(r.out.find("songwang_conjecture") == std::string::npos);  // experimental hidden
    RunOutput with_exp = run_cli("list --experimental");
    CHECK(with_exp.out.find("songwang_conjecture") != std::string::npos);
}

TEST_CASE("range sweeps filter out-of-domain instances") {
    RunOutput r = run_cli("verify --case thm_a --n 3..9");
    CHECK(r.exit_code == 0);
    // header plus one row per odd n in 3..9
    CHECK(count_lines(r.out) == 1 + 4);
}

TEST_CASE("explicit out-of-domain instances fail the run") {
    RunOutput r = run_cli("verify --case thm_a --n 4");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("FAIL") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli("verify --no-such-flag").exit_code == 2);
    CHECK(run_cli("verify --output yaml").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);  // a subcommand is required
    CHECK(run_cli("oracle --bound 13").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("json report shape") {
    RunOutput r = run_cli("verify --case relation_id --output json --no-timing --seed 42");
    CHECK(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["version"] == 1);
    CHECK(doc["seed"] == 42);
    REQUIRE(doc["records"].is_array());
    REQUIRE(doc["records"].size() == 1);
    const auto& rec = doc["records"][0];
    CHECK(rec["id"] == "relation_id");
    CHECK(rec["holds"] == true);
    CHECK(rec["coprime"] == true);
    CHECK(rec.contains("mode"));
    CHECK(rec.contains("samples"));
    CHECK(rec.contains("valuation"));
    CHECK(rec.contains("engine"));
    CHECK(rec.contains("seed"));
    CHECK_FALSE(rec.contains("elapsed_ms"));  // suppressed by --no-timing

    RunOutput timed = run_cli("verify --case relation_id --output json --seed 42");
    auto timed_doc = nlohmann::json::parse(timed.out);
    CHECK(timed_doc["records"][0].contains("elapsed_ms"));
}

TEST_CASE("environment seed is honored and overridden by the flag") {
    RunOutput env_run = run_cli("verify --case relation_id --output json --no-timing",
                                "QCONGR_SEED=7");
    auto env_doc = nlohmann::json::parse(env_run.out);
    CHECK(env_doc["seed"] == 7);

    RunOutput flag_run = run_cli("verify --case relation_id --output json --no-timing --seed 9",
                                 "QCONGR_SEED=7");
    auto flag_doc = nlohmann::json::parse(flag_run.out);
    CHECK(flag_doc["seed"] == 9);
}

TEST_CASE("glob filters select multiple cases") {
    // the range sweep drops hopital_general, whose overridden n=3 instances
    // violate its (d,m,r,n) constraints
    RunOutput r = run_cli("verify --case 'hopital_*' --n 3..3 --output json --no-timing");
    CHECK(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.out);
    bool saw_c2 = false, saw_long = false;
    for (const auto& rec : doc["records"]) saw_c2 |= (rec["id"] == "hopital_c2");
    for (const auto& rec : doc["records"]) saw_long |= (rec["id"] == "hopital_long");
    CHECK(saw_c2);
    CHECK(saw_long);
}

TEST_CASE("repeated runs with a fixed seed are byte-identical") {
    const std::string args =
        "verify --case 'relation_id' --output json --no-timing --seed 42";
    RunOutput a = run_cli(args);
    RunOutput b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);

    const std::string sampled =
        "verify --case 'beta_antisym' --n 3,5 --output json --no-timing --seed 42";
    RunOutput c = run_cli(sampled);
    RunOutput d = run_cli(sampled);
    CHECK(c.exit_code == 0);
    CHECK(c.out == d.out);
}

TEST_CASE("oracle cross-check subcommand") {
    RunOutput r = run_cli("oracle --bound 3 --output json --no-timing");
    CHECK(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["records"].size() >= 18);  // nine summand families, m = 2 and 3
    for (const auto& rec : doc["records"]) CHECK(rec["holds"] == true);
}
