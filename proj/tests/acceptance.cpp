#include <chrono>
#include <cstdio>
#include <exception>
#include <string>
#include <utility>
#include <vector>

#include "hgc/suites.hpp"

int main() {
    const std::vector<std::pair<int, std::string>> criteria = {
        {1, "lie"},       {2, "symmetry"}, {3, "factorization"}, {4, "series"},    {5, "recurrence"},     {6, "integral"},
        {7, "f20"},       {8, "orthogonality"}, {9, "degenerate"}, {10, "chebyshev"}, {11, "classification"},
    };
    int failed = 0;
    for (const auto& [n, suite] : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        std::string detail;
        try {
            hgc::SuiteResult r = hgc::run_suite(suite);
            ok = r.pass();
            for (const auto& c : r.checks)
                if (!c.pass()) detail += " " + c.name;
        } catch (const std::exception& e) {
            detail = std::string(" exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("criterion %d (%s): %s [%.2fs]%s\n", n, suite.c_str(), ok ? "PASS" : "FAIL", secs,
                    ok ? "" : (" failing:" + detail).c_str());
        if (!ok) ++failed;
    }
    std::printf("%d/%zu criteria passed\n", int(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
