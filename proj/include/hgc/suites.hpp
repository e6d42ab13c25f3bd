#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hgc/params.hpp"

namespace hgc {

struct Check {
    std::string name;
    double residual = 0.0;
    double tol = 0.0;
    bool above = false;  // pass when residual > tol instead of below it
    int samples = 1;
    std::string note;
    bool pass() const { return above ? residual > tol : residual < tol; }
};

struct SuiteResult {
    std::string suite;
    std::vector<Check> checks;
    bool pass() const;
};

struct SuiteOptions {
    // restricts the parameter-driven suites (lie, symmetry, factorization) to one equation
    std::optional<EquationParams> params;
    std::uint64_t seed = 20240611;
};

// lie symmetry factorization series recurrence integral f20 orthogonality degenerate chebyshev classification
const std::vector<std::string>& suite_names();
SuiteResult run_suite(const std::string& name, const SuiteOptions& o = {});
// "all" expands to every suite
std::vector<SuiteResult> run_suites(const std::string& name, const SuiteOptions& o = {});

} // namespace hgc
