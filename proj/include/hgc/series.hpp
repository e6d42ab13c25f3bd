#pragma once

#include <string>

#include "hgc/params.hpp"

namespace hgc {

enum class EvalMethod { Series, Integral, ClosedForm, Continuation };
std::string to_string(EvalMethod m);

struct EvalResult {
    cd value = 0.0;
    int terms_used = 0;
    double truncation_estimate = 0.0;
    EvalMethod method = EvalMethod::Series;
};

// value with first and second derivatives of the summed partial series
struct Jet {
    cd value = 0.0, d1 = 0.0, d2 = 0.0;
    EvalResult info;
};

struct SeriesOptions {
    double tol = 1e-14;
    int max_terms = 10000;
};

// F(sigma, kappa, omega; z) around the singular point 0.
EvalResult unified_F(const EquationParams& p, cd z, double tol = 1e-14, int max_terms = 10000);
Jet unified_jet(const EquationParams& p, cd z, const SeriesOptions& o = {});

// F / Gamma(1 + m), m = kappa(0)/sigma'(0); regular at negative integer m.
EvalResult olver_F(const EquationParams& p, cd z, const SeriesOptions& o = {});
Jet olver_jet(const EquationParams& p, cd z, const SeriesOptions& o = {});

// The five classical functions by their own series (olver: divide by Gamma(c)).
EvalResult eval_classical(ClassicalType t, const NamedParams& np, cd z, bool olver = false);

// F(a, b; -; w)
EvalResult f20_general(cd a, cd b, cd w);
// Index-shifted remainder form with shift n >= 1 (valid for Re(a + n) > 0).
EvalResult f20_continued(cd a, cd b, cd w, int n);
// sum_{j<n} (a)_j (b)_j w^j / j!
cd f20_partial_sum(cd a, cd b, cd w, int n);

// (1 + mu u)^{a/mu}, e^{a u} at mu = 0
cd powexp(cd a, cd mu, cd u);

struct DegenerateReport {
    cd lhs, rhs;
    double max_rel_err = 0.0;
};

// F(sigma, kappa°, omega°; z) against prod_{j<m}(omega - kappa'(j+1/2) + sigma'' j(j+1)/2) (-z)^m F(sigma, kappa, omega; z)
DegenerateReport degenerate_proportionality(const EquationParams& p, cd z);

} // namespace hgc
