#pragma once

#include <optional>
#include <string>
#include <vector>

namespace qcongr {

/// One verification instance. Unused parameters stay at their defaults; each
/// case validates the fields it needs.
struct Instance {
    long n = 0;
    long d = 0;
    long m = 0;
    long r = 0;
    long p = 0;
    long s = 1;

    std::string key() const;
};

struct CaseOptions {
    unsigned long seed = 42;
    long degree_cap = 2500;
    long padic_work_cap = 100000000L;
    bool experimental = false;
};

struct CaseResult {
    std::string id;
    Instance inst;
    bool holds = false;
    bool denominator_coprime = true;
    std::string mode;  // exact | exact-Q(a) | sampled | identity | property | numeric
    int samples = 0;
    long valuation = -1;           // numeric cases: p-adic valuation achieved
    long required_valuation = -1;  // numeric cases: required valuation
    std::string note;
};

struct CaseInfo {
    std::string id;
    std::string kind;  // congruence | identity | property | numeric
    std::string mode;
    std::string anchor;  // the statement being checked, in math shorthand
    bool experimental = false;
};

/// Full catalog, ordered by id.
const std::vector<CaseInfo>& list_cases();

const CaseInfo* find_case(const std::string& id);

/// The instance grid a bare `verify` runs for this case.
std::vector<Instance> default_instances(const std::string& id);

/// Runs one (case, instance) pair. Throws OutOfDomain on constraint
/// violations and UnknownCase for ids not in the catalog.
CaseResult run_case(const std::string& id, const Instance& inst, const CaseOptions& opt);

}  // namespace qcongr
