#pragma once

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>

#include <doctest.h>
#include <json.hpp>

#include "hgc/gen.hpp"
#include "hgc/poly.hpp"

namespace test {

using hgc::cd;
using hgc::PolyC;
constexpr double pi = std::numbers::pi;
inline const cd I(0.0, 1.0);

inline const nlohmann::json& oracles() {
    static const nlohmann::json j = [] {
        std::ifstream f(HGC_ORACLE_FILE);
        REQUIRE(f.good());
        return nlohmann::json::parse(f);
    }();
    return j;
}

inline cd cx(const nlohmann::json& v) { return {v[0].get<double>(), v[1].get<double>()}; }

inline double rel(cd a, cd b) {
    double s = std::max(std::abs(a), std::abs(b));
    return s > 0 ? std::abs(a - b) / s : 0.0;
}

inline PolyC random_poly(hgc::Gen& g, int deg, double r = 1.0) {
    std::vector<cd> c;
    for (int k = 0; k <= deg; ++k) c.push_back(g.complex(-r, r));
    return PolyC(c);
}

} // namespace test
