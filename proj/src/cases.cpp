#include "qcongr/cases.hpp"

#include "case_util.hpp"
#include "qcongr/errors.hpp"

#include <algorithm>
#include <mutex>

namespace qcongr {

std::string Instance::key() const {
    std::string s;
    auto add = [&s](const char* name, long v) {
        if (!s.empty()) s += ",";
        s += name;
        s += "=";
        s += std::to_string(v);
    };
    if (d > 0) add("d", d);
    if (m > 0) add("m", m);
    if (r > 0) add("r", r);
    if (n > 0) add("n", n);
    if (p > 0) {
        add("p", p);
        add("s", this->s);
    }
    return s.empty() ? "-" : s;
}

namespace detail {

Instance inst_n(long n) {
    Instance i;
    i.n = n;
    return i;
}

Instance inst_dmrn(long d, long m, long r, long n) {
    Instance i;
    i.d = d;
    i.m = m;
    i.r = r;
    i.n = n;
    return i;
}

Instance inst_ps(long p, long s) {
    Instance i;
    i.p = p;
    i.s = s;
    return i;
}

namespace {

const Registry& registry() {
    static Registry reg;
    static std::once_flag once;
    std::call_once(once, [] {
        register_sum_cases(reg);
        register_param_cases(reg);
        register_sampled_cases(reg);
        register_classical_cases(reg);
        register_numeric_cases(reg);
        std::sort(reg.begin(), reg.end(),
                  [](const CaseDef& a, const CaseDef& b) { return a.info.id < b.info.id; });
    });
    return reg;
}

const CaseDef* find_def(const std::string& id) {
    const Registry& reg = registry();
    auto it = std::lower_bound(reg.begin(), reg.end(), id,
                               [](const CaseDef& d, const std::string& s) { return d.info.id < s; });
    if (it == reg.end() || it->info.id != id) return nullptr;
    return &*it;
}

}  // namespace

}  // namespace detail

const std::vector<CaseInfo>& list_cases() {
    static std::vector<CaseInfo> infos = [] {
        std::vector<CaseInfo> v;
        for (const auto& d : detail::registry()) v.push_back(d.info);
        return v;
    }();
    return infos;
}

const CaseInfo* find_case(const std::string& id) {
    const detail::CaseDef* d = detail::find_def(id);
    return d ? &d->info : nullptr;
}

std::vector<Instance> default_instances(const std::string& id) {
    const detail::CaseDef* d = detail::find_def(id);
    if (!d) throw UnknownCase(id);
    return d->defaults;
}

CaseResult run_case(const std::string& id, const Instance& inst, const CaseOptions& opt) {
    const detail::CaseDef* d = detail::find_def(id);
    if (!d) throw UnknownCase(id);
    if (d->info.experimental && !opt.experimental)
        throw OutOfDomain("case " + id + " requires the experimental flag");
    return d->run(inst, opt);
}

}  // namespace qcongr
