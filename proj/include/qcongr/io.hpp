#pragma once

#include "qcongr/poly.hpp"
#include "qcongr/ratfun.hpp"
#include "qcongr/rational.hpp"

#include <string>

namespace qcongr {

template <class K>
std::string to_string(const Poly<K>& p, const std::string& var = "q") {
    if (p.zero()) return "0";
    std::string s;
    for (int i = p.deg(); i >= 0; --i) {
        const K& c = p.coeff(static_cast<std::size_t>(i));
        if (is_zero(c)) continue;
        if (!s.empty()) s += " + ";
        std::string cs = to_string(c);
        if (i == 0) {
            s += cs;
        } else {
            if (cs != "1") s += "(" + cs + ")*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

template <class K>
std::string to_string(const RatFun<K>& x, const std::string& var = "q") {
    if (x.polynomial()) return to_string(x.num(), var);
    return "(" + to_string(x.num(), var) + ") / (" + to_string(x.den_expanded(), var) + ")";
}

}  // namespace qcongr
