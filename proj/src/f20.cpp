#include <cmath>

#include "hgc/errors.hpp"
#include "hgc/gamma.hpp"
#include "hgc/quad.hpp"
#include "hgc/series.hpp"

namespace hgc {

cd f20_partial_sum(cd a, cd b, cd w, int n) {
    cd P = 1.0, sum = 0.0;
    for (int j = 0; j < n; ++j) {
        sum += P;
        P *= (a + double(j)) * (b + double(j)) * w / double(j + 1);
    }
    return sum;
}

namespace {

bool on_cut(cd w) { return std::abs(w.imag()) <= 1e-300 && w.real() >= 0; }

// (1/Gamma(a)) int_0^inf e^{-t} t^{a-1} (1 - w t)^{-b} dt, Re a > 0
EvalResult laplace_form(cd a, cd b, cd w) {
    auto f = [&](cd t) { return std::exp(-t + (a - 1.0) * std::log(t) - b * std::log(1.0 - w * t)); };
    QuadResult q = integrate(f, half_line(0.0, 1.0));
    EvalResult r;
    r.value = q.value * rgamma(a);
    r.truncation_estimate = q.err_estimate * std::abs(rgamma(a));
    r.terms_used = q.evaluations;
    r.method = EvalMethod::Integral;
    return r;
}

} // namespace

EvalResult f20_general(cd a, cd b, cd w) {
    EvalResult r;
    for (cd p : {a, b}) {
        if (is_nonpositive_integer(p)) {
            int n = int(std::round(-p.real()));
            r.value = f20_partial_sum(a, b, w, n + 1);
            r.terms_used = n + 1;
            r.method = EvalMethod::Series;
            return r;
        }
    }
    if (w == cd(0)) {
        r.value = 1.0;
        r.terms_used = 1;
        return r;
    }
    if (on_cut(w)) throw BranchCut("2F0 is cut along [0, inf)");
    // t^{a-1} with Re a near 0 is out of reach of the double-exponential rule
    if (a.real() >= 1) return laplace_form(a, b, w);
    if (b.real() >= 1) return laplace_form(b, a, w);
    int n = int(std::floor(1.0 - std::max(a.real(), b.real()))) + 1;
    return f20_continued(a, b, w, n);
}

EvalResult f20_continued(cd a, cd b, cd w, int n) {
    if (n < 1) throw InvalidArgument("continuation shift must be >= 1");
    if (on_cut(w) && w != cd(0)) throw BranchCut("2F0 is cut along [0, inf)");
    cd an = a + double(n), bn = b + double(n);
    if (an.real() <= 0 && bn.real() <= 0) throw InvalidArgument("shift too small for the remainder integral");
    cd pref = std::pow(w, n) * pochhammer(a, n) * pochhammer(b, n);
    for (int j = 1; j < n; ++j) pref /= double(j);
    int evals = 0;
    auto f = [&](cd s) {
        EvalResult in = f20_general(an, bn, w * s);
        evals += in.terms_used;
        return std::pow(1.0 - s, n - 1) * in.value;
    };
    ContourSpec seg = segment(0.0, 1.0);
    seg.rel_tol = 1e-11;
    QuadResult q = integrate(f, seg);
    EvalResult r;
    r.value = f20_partial_sum(a, b, w, n) + pref * q.value;
    r.truncation_estimate = std::abs(pref) * q.err_estimate;
    r.terms_used = evals + n;
    r.method = EvalMethod::Continuation;
    return r;
}

} // namespace hgc
