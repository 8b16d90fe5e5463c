#pragma once

#include <stdexcept>
#include <string>

namespace qcongr {

struct OutOfDomain : std::invalid_argument {
    explicit OutOfDomain(const std::string& msg) : std::invalid_argument("instance out of domain: " + msg) {}
};

struct PoleInSeries : std::domain_error {
    explicit PoleInSeries(const std::string& msg) : std::domain_error("pole in truncated series: " + msg) {}
};

struct UnknownCase : std::invalid_argument {
    explicit UnknownCase(const std::string& id) : std::invalid_argument("unknown case id: " + id) {}
};

}  // namespace qcongr
