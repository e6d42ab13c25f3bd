#include "hgc/series.hpp"

#include <algorithm>
#include <functional>

#include "hgc/errors.hpp"
#include "hgc/gamma.hpp"
#include "hgc/quad.hpp"

namespace hgc {

std::string to_string(EvalMethod m) {
    switch (m) {
        case EvalMethod::Series: return "Series";
        case EvalMethod::Integral: return "Integral";
        case EvalMethod::ClosedForm: return "ClosedForm";
        case EvalMethod::Continuation: return "Continuation";
    }
    return "?";
}

namespace {

constexpr int kSmallRun = 3;

// sum_{n >= n0} c_n z^n with c_{n+1} = c_n * ratio(n); stops after `last` when last >= 0
Jet sum_series(int n0, cd c0, const std::function<cd(int)>& ratio, int last, cd z, const SeriesOptions& o) {
    Jet j;
    cd p0 = 1.0, p1 = 0.0, p2 = 0.0;  // z^n, z^{n-1}, z^{n-2}
    for (int k = 0; k < n0; ++k) {
        p2 = p1;
        p1 = p0;
        p0 *= z;
    }
    cd c = c0;
    int small = 0;
    for (int n = n0;; ++n) {
        cd term = c * p0;
        j.value += term;
        j.d1 += double(n) * c * p1;
        j.d2 += double(n) * double(n - 1) * c * p2;
        ++j.info.terms_used;
        if (last >= 0 && n >= last) {
            j.info.truncation_estimate = 0.0;
            return j;
        }
        cd next = c * ratio(n);
        p2 = p1;
        p1 = p0;
        p0 *= z;
        double nt = std::abs(next * p0);
        if (nt <= o.tol * std::abs(j.value) || (nt == 0.0 && j.value == cd(0)))
            ++small;
        else
            small = 0;
        if (small >= kSmallRun) {
            j.info.truncation_estimate = nt;
            return j;
        }
        if (j.info.terms_used >= o.max_terms)
            throw NoConvergence("series did not converge within max_terms", std::abs(j.value));
        c = next;
    }
}

// smallest non-negative integer n with q(n) = 0, q(n) = s2/2 n^2 + (s2/2 + k1) n + k1/2 + w
int termination_index(cd s2, cd k1, cd w) {
    cd A = s2 / 2.0, B = s2 / 2.0 + k1, C = k1 / 2.0 + w;
    std::vector<cd> rs;
    double scale = std::max({std::abs(A), std::abs(B), std::abs(C), 1e-300});
    if (std::abs(A) > 1e-14 * scale) {
        cd d = std::sqrt(B * B - 4.0 * A * C);
        rs = {(-B + d) / (2.0 * A), (-B - d) / (2.0 * A)};
    } else if (std::abs(B) > 1e-14 * scale) {
        rs = {-C / B};
    } else if (std::abs(C) <= 1e-300) {
        return 0;
    }
    int best = -1;
    for (cd r : rs) {
        double rr = std::round(r.real());
        if (rr >= 0 && std::abs(r - rr) <= 1e-10 * (1.0 + std::abs(r)) && (best < 0 || rr < best)) best = int(rr);
    }
    return best;
}

void check_singular_point(const EquationParams& p) {
    double scale = std::max(p.sigma.max_abs(), 1e-300);
    if (std::abs(p.sigma[0]) > 1e-14 * scale) throw NotApplicable("series needs sigma(0) = 0");
}

void convergence_guard(const EquationParams& p, cd z, int last) {
    if (last >= 0) return;
    cd s1 = p.sigma[1], s2 = p.sigma2();
    if (s2 == cd(0)) return;
    double R = std::abs(2.0 * s1 / s2);
    if (std::abs(z) >= 0.95 * R)
        throw NoConvergence("|z| beyond the convergence guard; use an integral representation", 0.0);
}

cd numerator(const EquationParams& p, int j) {
    return p.omega + (j + 0.5) * p.kappa1() + double(j) * double(j + 1) * p.sigma2() / 2.0;
}

} // namespace

Jet unified_jet(const EquationParams& p, cd z, const SeriesOptions& o) {
    check_singular_point(p);
    const cd s1 = p.sigma[1], k0 = p.kappa[0];
    int last = termination_index(p.sigma2(), p.kappa1(), p.omega);
    double scale = std::max({p.sigma.max_abs(), p.kappa.max_abs(), 1e-300});
    if (std::abs(s1) <= 1e-14 * scale) {
        if (last < 0) throw AsymptoticOnly("sigma'(0) = 0: the series is only asymptotic; use f20_general");
        if (last > 0 && std::abs(k0) <= 1e-14 * scale) throw PoleInParameters("kappa(0) + (j+1) sigma'(0) = 0");
    } else {
        cd m = k0 / s1;
        if (is_nonpositive_integer(m + 1.0)) {
            int k = int(std::round(-m.real()));
            if (last < 0 || last >= k) throw PoleInParameters("kappa(0) + (j+1) sigma'(0) vanishes");
        }
    }
    convergence_guard(p, z, last);
    auto ratio = [&](int n) { return -numerator(p, n) / ((k0 + double(n + 1) * s1) * double(n + 1)); };
    Jet j = sum_series(0, 1.0, ratio, last, z, o);
    j.info.value = j.value;
    j.info.method = EvalMethod::Series;
    return j;
}

EvalResult unified_F(const EquationParams& p, cd z, double tol, int max_terms) {
    return unified_jet(p, z, {tol, max_terms}).info;
}

Jet olver_jet(const EquationParams& p, cd z, const SeriesOptions& o) {
    check_singular_point(p);
    const cd s1 = p.sigma[1];
    double scale = std::max({p.sigma.max_abs(), p.kappa.max_abs(), 1e-300});
    if (std::abs(s1) <= 1e-14 * scale) throw AsymptoticOnly("Olver normalization needs sigma'(0) != 0");
    int last = termination_index(p.sigma2(), p.kappa1(), p.omega);
    convergence_guard(p, z, last);
    cd m = p.kappa[0] / s1;
    int n0 = 0;
    if (is_nonpositive_integer(m + 1.0)) n0 = int(std::round(-m.real()));

    Jet j;
    j.info.method = EvalMethod::Series;
    if (last >= 0 && last < n0) {
        j.info.terms_used = 1;
        return j;
    }
    cd c0 = n0 == 0 ? rgamma(m + 1.0) : cd(1.0);
    for (int k = 0; k < n0; ++k) c0 *= -numerator(p, k) / s1 / double(k + 1);
    auto ratio = [&](int n) { return -numerator(p, n) / s1 / ((m + double(n + 1)) * double(n + 1)); };
    Jet r = sum_series(n0, c0, ratio, last, z, o);
    r.info.value = r.value;
    r.info.method = EvalMethod::Series;
    return r;
}

EvalResult olver_F(const EquationParams& p, cd z, const SeriesOptions& o) { return olver_jet(p, z, o).info; }

namespace {

// sum (a)_j (b)_j / (c)_j z^j / j! with missing parameters flagged; olver divides by Gamma(c + j)
EvalResult pfq_plain(bool has_a, cd a, bool has_b, cd b, bool has_c, cd c, cd z) {
    int last = -1;
    auto upd = [&](bool has, cd v) {
        if (has && is_nonpositive_integer(v)) {
            int k = int(std::round(-v.real()));
            if (last < 0 || k < last) last = k;
        }
    };
    upd(has_a, a);
    upd(has_b, b);
    if (has_c && is_nonpositive_integer(c)) {
        int k = int(std::round(-c.real()));
        if (last < 0 || last > k) throw PoleInParameters("lower parameter is a non-positive integer");
    }
    SeriesOptions o;
    EvalResult r;
    r.method = EvalMethod::Series;
    cd P = 1.0, sum = 0.0;
    int small = 0;
    for (int j = 0; j < o.max_terms; ++j) {
        sum += P;
        ++r.terms_used;
        if (last >= 0 && j >= last) {
            r.value = sum;
            return r;
        }
        cd rat = z / double(j + 1);
        if (has_a) rat *= a + double(j);
        if (has_b) rat *= b + double(j);
        if (has_c) rat /= c + double(j);
        P *= rat;
        double ant = std::abs(P);
        if (ant <= o.tol * std::abs(sum) || (ant == 0.0 && sum == cd(0)))
            ++small;
        else
            small = 0;
        if (small >= kSmallRun) {
            r.value = sum;
            r.truncation_estimate = ant;
            return r;
        }
    }
    throw NoConvergence("hypergeometric series did not converge", std::abs(sum));
}

EvalResult pfq(bool has_a, cd a, bool has_b, cd b, bool has_c, cd c, cd z, bool olver) {
    if (!olver || !has_c) return pfq_plain(has_a, a, has_b, b, has_c, c, z);
    if (!is_nonpositive_integer(c)) {
        EvalResult r = pfq_plain(has_a, a, has_b, b, has_c, c, z);
        cd g = rgamma(c);
        r.value *= g;
        r.truncation_estimate *= std::abs(g);
        return r;
    }
    // c = -k: the terms start at j = k + 1, where 1/Gamma(c + j) = 1/i!
    int k = int(std::round(-c.real()));
    cd P = 1.0;
    for (int i = 0; i <= k; ++i) {
        if (has_a) P *= a + double(i);
        if (has_b) P *= b + double(i);
        P *= z / double(i + 1);
    }
    EvalResult r;
    r.terms_used = k + 1;
    if (P == cd(0)) return r;
    EvalResult t = pfq_plain(has_a, a + double(k + 1), has_b, b + double(k + 1), true, double(k + 2), z);
    r.value = P * t.value;
    r.truncation_estimate = std::abs(P) * t.truncation_estimate;
    r.terms_used += t.terms_used;
    return r;
}

} // namespace

EvalResult eval_classical(ClassicalType t, const NamedParams& np, cd z, bool olver) {
    const cd a = np.a, b = np.b, c = np.c;
    switch (t) {
        case ClassicalType::Gauss2F1:
            if (std::abs(z) >= 1.0 && !(is_nonpositive_integer(a) || is_nonpositive_integer(b)))
                throw DomainError("2F1 series needs |z| < 1; use the Euler integral representation");
            return pfq(true, a, true, b, true, c, z, olver);
        case ClassicalType::Kummer1F1: return pfq(true, a, false, 0.0, true, c, z, olver);
        case ClassicalType::ZeroF1: return pfq(false, 0.0, false, 0.0, true, c, z, olver);
        case ClassicalType::TwoF0: return f20_general(a, b, z);
        case ClassicalType::Hermite: {
            EvalResult r;
            if (is_nonpositive_integer(a)) {
                // z^{n} F(-n/2, (1-n)/2; -; -z^{-2}) as a polynomial
                int n = int(std::round(-a.real()));
                cd P = 1.0, sum = 0.0;
                for (int j = 0; 2 * j <= n; ++j) {
                    sum += P * std::pow(z, n - 2 * j);
                    P *= (a / 2.0 + double(j)) * ((a + 1.0) / 2.0 + double(j)) * (-1.0) / double(j + 1);
                    ++r.terms_used;
                }
                r.value = sum;
                r.method = EvalMethod::Series;
                return r;
            }
            if (z.real() > 0) {
                r = f20_general(a / 2.0, (a + 1.0) / 2.0, -1.0 / (z * z));
                r.value *= std::exp(-a * std::log(z));
                return r;
            }
            if (std::abs(z.imag()) <= 1e-300 && z.real() <= 0)
                throw DomainError("Hermite S is cut along (-inf, 0]");
            if (a.real() <= 0)
                throw DomainError("Hermite S with Re z <= 0 needs Re a > 0; use the Euler integral representation");
            // 2^a / Gamma(a) int_0^inf e^{-t^2 - 2 t z} t^{a-1} dt
            auto f = [&](cd t) { return std::exp(-t * t - 2.0 * t * z + (a - 1.0) * std::log(t)); };
            QuadResult q = integrate(f, half_line(0.0, 1.0));
            cd k = std::pow(cd(2.0), a) * rgamma(a);
            r.value = k * q.value;
            r.truncation_estimate = std::abs(k) * q.err_estimate;
            r.terms_used = q.evaluations;
            r.method = EvalMethod::Integral;
            return r;
        }
    }
    throw InvalidArgument("unknown classical type");
}

cd powexp(cd a, cd mu, cd u) {
    if (mu == cd(0)) return std::exp(a * u);
    cd base = 1.0 + mu * u;
    if (base == cd(0)) throw PoleError("powexp evaluated at u = -1/mu");
    return std::exp(a / mu * std::log(base));
}

DegenerateReport degenerate_proportionality(const EquationParams& p, cd z) {
    double scale = std::max(p.sigma.max_abs(), 1e-300);
    if (std::abs(p.sigma[0]) > 1e-14 * scale || std::abs(p.sigma[1] - 1.0) > 1e-14 * scale)
        throw NotApplicable("needs sigma(0) = 0 and sigma'(0) = 1");
    cd m = p.kappa[0];
    if (!is_integer(m) || m.real() < -0.5) throw NotApplicable("needs kappa(0) a non-negative integer");
    int mi = int(std::round(m.real()));
    const cd s2 = p.sigma2(), k1 = p.kappa1();
    EquationParams q(p.sigma, PolyC{-m, k1 - m * s2}, p.omega - m * k1 + m * m * s2 / 2.0);
    DegenerateReport r;
    r.lhs = olver_F(q, z).value;
    cd prod = 1.0;
    for (int j = 0; j < mi; ++j) prod *= p.omega - k1 * (j + 0.5) + s2 * double(j) * double(j + 1) / 2.0;
    r.rhs = prod * std::pow(-z, mi) * olver_F(p, z).value;
    r.max_rel_err = std::abs(r.lhs - r.rhs) / std::max({std::abs(r.lhs), std::abs(r.rhs), 1e-300});
    return r;
}

} // namespace hgc
