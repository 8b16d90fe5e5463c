#include "case_util.hpp"

#include "qcongr/cases.hpp"
#include "qcongr/errors.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace {

using nlohmann::ordered_json;
using namespace qcongr;

constexpr const char* kEngineVersion = "qcongr 1.0.0";

bool glob_match(const char* pat, const char* str) {
    for (; *pat; ++pat, ++str) {
        if (*pat == '*') {
            while (*(pat + 1) == '*') ++pat;
            for (const char* s = str;; ++s) {
                if (glob_match(pat + 1, s)) return true;
                if (!*s) return false;
            }
        }
        if (!*str || (*pat != '?' && *pat != *str)) return false;
    }
    return !*str;
}

struct FieldSel {
    std::vector<long> values;
    bool is_range = false;
    bool set = false;
};

/// Parses "3..21", "3,7,11", or "5".
FieldSel parse_selector(const std::string& text) {
    FieldSel sel;
    sel.set = true;
    auto dots = text.find("..");
    if (dots != std::string::npos) {
        long lo = std::stol(text.substr(0, dots));
        long hi = std::stol(text.substr(dots + 2));
        if (lo > hi) throw CLI::ValidationError("range", "empty range " + text);
        for (long v = lo; v <= hi; ++v) sel.values.push_back(v);
        sel.is_range = true;
        return sel;
    }
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        sel.values.push_back(std::stol(text.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    if (sel.values.empty()) throw CLI::ValidationError("range", "empty selector");
    return sel;
}

struct Job {
    std::string id;
    Instance inst;
    bool from_range = false;
};

struct Record {
    CaseResult result;
    double elapsed_ms = 0;
    bool skipped = false;  // out-of-domain value produced by a range sweep
    std::string error;     // nonempty when the run failed outside the verdict
};

struct Selectors {
    FieldSel n, d, m, r, p, s;
};

std::vector<Job> build_jobs(const CaseInfo& info, const Selectors& sel) {
    std::vector<Job> jobs;
    bool any = sel.n.set || sel.d.set || sel.m.set || sel.r.set || sel.p.set || sel.s.set;
    std::vector<Instance> base = default_instances(info.id);
    if (!any) {
        for (const auto& in : base) jobs.push_back({info.id, in, false});
        return jobs;
    }
    auto expand = [](std::vector<Job> in, const FieldSel& f, long Instance::*field,
                     const std::string& id) {
        if (!f.set) return in;
        std::vector<Job> out;
        for (const auto& j : in)
            for (long v : f.values) {
                Job k = j;
                k.inst.*field = v;
                k.from_range = k.from_range || f.is_range;
                k.id = id;
                out.push_back(k);
            }
        return out;
    };
    std::vector<Job> grid;
    for (const auto& in : base) grid.push_back({info.id, in, false});
    grid = expand(std::move(grid), sel.n, &Instance::n, info.id);
    grid = expand(std::move(grid), sel.d, &Instance::d, info.id);
    grid = expand(std::move(grid), sel.m, &Instance::m, info.id);
    grid = expand(std::move(grid), sel.r, &Instance::r, info.id);
    grid = expand(std::move(grid), sel.p, &Instance::p, info.id);
    grid = expand(std::move(grid), sel.s, &Instance::s, info.id);
    std::vector<std::string> seen;
    for (const auto& j : grid) {
        std::string key = j.inst.key();
        if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
        seen.push_back(key);
        jobs.push_back(j);
    }
    return jobs;
}

ordered_json instance_json(const Instance& in) {
    ordered_json o = ordered_json::object();
    if (in.d > 0) o["d"] = in.d;
    if (in.m > 0) o["m"] = in.m;
    if (in.r > 0) o["r"] = in.r;
    if (in.n > 0) o["n"] = in.n;
    if (in.p > 0) {
        o["p"] = in.p;
        o["s"] = in.s;
    }
    return o;
}

ordered_json record_json(const Record& rec, unsigned long seed, bool timing) {
    const CaseResult& r = rec.result;
    ordered_json o;
    o["id"] = r.id;
    o["instance"] = instance_json(r.inst);
    o["holds"] = r.holds;
    o["coprime"] = r.denominator_coprime;
    o["mode"] = r.mode;
    o["samples"] = r.samples;
    o["valuation"] = r.valuation;
    o["required_valuation"] = r.required_valuation;
    o["note"] = rec.error.empty() ? r.note : rec.error;
    if (timing) o["elapsed_ms"] = rec.elapsed_ms;
    o["engine"] = kEngineVersion;
    o["seed"] = seed;
    return o;
}

void print_table(const std::vector<Record>& records, bool timing) {
    std::printf("%-20s %-22s %-6s %-10s %7s %4s", "case", "instance", "ok", "mode", "samples",
                "val");
    if (timing) std::printf(" %9s", "ms");
    std::printf(" %s\n", "note");
    for (const auto& rec : records) {
        const CaseResult& r = rec.result;
        std::printf("%-20s %-22s %-6s %-10s %7d %4ld", r.id.c_str(), r.inst.key().c_str(),
                    r.holds ? "ok" : "FAIL", r.mode.c_str(), r.samples, r.valuation);
        if (timing) std::printf(" %9.1f", rec.elapsed_ms);
        std::printf(" %s\n", rec.error.empty() ? r.note.c_str() : rec.error.c_str());
    }
}

std::vector<Record> run_jobs(const std::vector<Job>& jobs, const CaseOptions& opt, long nthreads) {
    std::vector<Record> records(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= jobs.size()) return;
            auto t0 = std::chrono::steady_clock::now();
            Record& rec = records[i];
            try {
                rec.result = run_case(jobs[i].id, jobs[i].inst, opt);
            } catch (const OutOfDomain& e) {
                rec.result.id = jobs[i].id;
                rec.result.inst = jobs[i].inst;
                rec.result.mode = "error";
                if (jobs[i].from_range) {
                    rec.skipped = true;
                } else {
                    rec.error = e.what();
                }
            } catch (const std::exception& e) {
                rec.result.id = jobs[i].id;
                rec.result.inst = jobs[i].inst;
                rec.result.mode = "error";
                rec.error = e.what();
            }
            rec.elapsed_ms = std::chrono::duration<double, std::milli>(
                                 std::chrono::steady_clock::now() - t0)
                                 .count();
        }
    };
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (long t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return records;
}

std::vector<Record> run_oracle(long bound) {
    std::vector<Record> records;
    for (auto& [name, terms] : detail::oracle_summands(bound)) {
        for (long m = 2; m <= 3; ++m) {
            Record rec;
            rec.result.id = "oracle/" + name;
            rec.result.inst.m = m;
            rec.result.inst.n = bound;
            rec.result.mode = "oracle";
            auto t0 = std::chrono::steady_clock::now();
            RatFun<Rat> fast = multi_sum(terms, m, bound);
            RatFun<Rat> slow = multi_sum_oracle(terms, m, bound);
            rec.result.holds = (fast == slow);
            if (!rec.result.holds) rec.result.note = "prefix-convolution sum differs from oracle";
            rec.elapsed_ms = std::chrono::duration<double, std::milli>(
                                 std::chrono::steady_clock::now() - t0)
                                 .count();
            records.push_back(std::move(rec));
        }
    }
    return records;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verifier for q-supercongruences of multiple basic hypergeometric series"};
    app.require_subcommand(1);

    auto* list_cmd = app.add_subcommand("list", "print the case catalog");
    bool list_experimental = false;
    list_cmd->add_flag("--experimental", list_experimental, "include experimental cases");

    auto* verify = app.add_subcommand("verify", "run verification cases");
    std::string case_glob = "*";
    std::string n_text, d_text, m_text, r_text, p_text, s_text;
    unsigned long seed = 42;
    long jobs_count = 1;
    std::string output = "table";
    bool experimental = false, no_timing = false;
    CaseOptions opt;
    verify->add_option("--case", case_glob, "case id glob filter");
    verify->add_option("--n", n_text, "n values: 3..21 or 3,7,11");
    verify->add_option("--d", d_text, "d values");
    verify->add_option("--m", m_text, "m values");
    verify->add_option("--r", r_text, "r values");
    verify->add_option("--p", p_text, "p values");
    verify->add_option("--s", s_text, "s values");
    verify->add_option("--seed", seed, "sampling seed")->envname("QCONGR_SEED");
    verify->add_option("--jobs", jobs_count, "worker count");
    verify->add_option("--degree-cap", opt.degree_cap, "maximum modulus degree");
    verify->add_option("--padic-work-cap", opt.padic_work_cap, "p-adic Gamma loop cap");
    verify->add_option("--output", output, "table or json")
        ->check(CLI::IsMember({"table", "json"}));
    verify->add_flag("--experimental", experimental, "include experimental cases");
    verify->add_flag("--no-timing", no_timing, "omit elapsed times from output");

    auto* oracle = app.add_subcommand("oracle", "cross-check multi_sum against the brute oracle");
    long oracle_bound = 8;
    std::string oracle_output = "table";
    bool oracle_no_timing = false;
    oracle->add_option("--bound", oracle_bound, "summation bound (<= 12)");
    oracle->add_option("--output", oracle_output, "table or json")
        ->check(CLI::IsMember({"table", "json"}));
    oracle->add_flag("--no-timing", oracle_no_timing, "omit elapsed times from output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::fflush(stdout);
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    if (list_cmd->parsed()) {
        for (const auto& info : list_cases()) {
            if (info.experimental && !list_experimental) continue;
            std::printf("%-20s %-11s %-10s%s %s\n", info.id.c_str(), info.kind.c_str(),
                        info.mode.c_str(), info.experimental ? " [experimental]" : "",
                        info.anchor.c_str());
        }
        return 0;
    }

    std::vector<Record> records;
    bool timing = true;
    std::string format = "table";
    unsigned long used_seed = 42;

    if (verify->parsed()) {
        opt.seed = seed;
        opt.experimental = experimental;
        used_seed = seed;
        timing = !no_timing;
        format = output;
        Selectors sel;
        try {
            if (!n_text.empty()) sel.n = parse_selector(n_text);
            if (!d_text.empty()) sel.d = parse_selector(d_text);
            if (!m_text.empty()) sel.m = parse_selector(m_text);
            if (!r_text.empty()) sel.r = parse_selector(r_text);
            if (!p_text.empty()) sel.p = parse_selector(p_text);
            if (!s_text.empty()) sel.s = parse_selector(s_text);
        } catch (const std::exception& e) {
            std::fprintf(stderr, "error: %s\n", e.what());
            return 2;
        }
        std::vector<Job> jobs;
        for (const auto& info : list_cases()) {
            if (!glob_match(case_glob.c_str(), info.id.c_str())) continue;
            if (info.experimental && !experimental) continue;
            auto case_jobs = build_jobs(info, sel);
            jobs.insert(jobs.end(), case_jobs.begin(), case_jobs.end());
        }
        std::stable_sort(jobs.begin(), jobs.end(), [](const Job& a, const Job& b) {
            if (a.id != b.id) return a.id < b.id;
            return a.inst.key() < b.inst.key();
        });
        records = run_jobs(jobs, opt, jobs_count);
        // drop out-of-domain instances that came from range sweeps, with a notice
        std::vector<Record> kept;
        for (auto& rec : records) {
            if (rec.skipped) {
                std::fprintf(stderr, "notice: skipping %s %s (out of domain for this case)\n",
                             rec.result.id.c_str(), rec.result.inst.key().c_str());
                continue;
            }
            kept.push_back(std::move(rec));
        }
        records = std::move(kept);
    } else if (oracle->parsed()) {
        timing = !oracle_no_timing;
        format = oracle_output;
        if (oracle_bound < 1 || oracle_bound > 12) {
            std::fprintf(stderr, "error: --bound must be in 1..12\n");
            return 2;
        }
        records = run_oracle(oracle_bound);
    }

    if (format == "json") {
        ordered_json out;
        out["version"] = 1;
        out["seed"] = used_seed;
        out["records"] = ordered_json::array();
        for (const auto& rec : records) out["records"].push_back(record_json(rec, used_seed, timing));
        std::printf("%s\n", out.dump(2).c_str());
    } else {
        print_table(records, timing);
    }

    for (const auto& rec : records)
        if (!rec.result.holds) return 1;
    return 0;
}
