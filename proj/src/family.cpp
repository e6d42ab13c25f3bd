#include "hgc/family.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "hgc/errors.hpp"
#include "hgc/gamma.hpp"
#include "hgc/quad.hpp"
#include "hgc/symmetry.hpp"
#include "hgc/weight.hpp"

namespace hgc {

std::string to_string(FamilyKind k) {
    switch (k) {
        case FamilyKind::Jacobi: return "jacobi";
        case FamilyKind::Laguerre: return "laguerre";
        case FamilyKind::BesselPoly: return "bessel";
        case FamilyKind::HermitePoly: return "hermite";
    }
    return "?";
}

FamilyKind family_from_string(const std::string& s) {
    if (s == "jacobi" || s == "Jacobi") return FamilyKind::Jacobi;
    if (s == "laguerre" || s == "Laguerre") return FamilyKind::Laguerre;
    if (s == "bessel" || s == "Bessel" || s == "BesselPoly") return FamilyKind::BesselPoly;
    if (s == "hermite" || s == "Hermite" || s == "HermitePoly") return FamilyKind::HermitePoly;
    throw InvalidArgument("unknown family: " + s);
}

PolyC FamilySpec::sigma() const {
    switch (kind) {
        case FamilyKind::Jacobi: return PolyC{1.0, 0.0, -1.0};
        case FamilyKind::Laguerre: return PolyC{0.0, 1.0};
        case FamilyKind::BesselPoly: return PolyC{0.0, 0.0, 1.0};
        case FamilyKind::HermitePoly: return PolyC{1.0};
    }
    return PolyC();
}

PolyC FamilySpec::kappa() const {
    switch (kind) {
        case FamilyKind::Jacobi: return PolyC{beta - alpha, -(alpha + beta)};
        case FamilyKind::Laguerre: return PolyC{alpha, -1.0};
        case FamilyKind::BesselPoly: return PolyC{-1.0, theta};
        case FamilyKind::HermitePoly: return PolyC{0.0, -2.0};
    }
    return PolyC();
}

FamilySpec FamilySpec::shifted(int n) const {
    FamilySpec f = *this;
    switch (kind) {
        case FamilyKind::Jacobi: f.alpha -= n; f.beta -= n; break;
        case FamilyKind::Laguerre: f.alpha -= n; break;
        case FamilyKind::BesselPoly: f.theta -= 2.0 * n; break;
        case FamilyKind::HermitePoly: break;
    }
    return f;
}

double FamilySpec::prefactor() const {
    switch (kind) {
        case FamilyKind::Jacobi: return -0.5;
        case FamilyKind::HermitePoly: return -1.0;
        default: return 1.0;
    }
}

std::string FamilySpec::describe() const {
    std::ostringstream os;
    os << to_string(kind);
    switch (kind) {
        case FamilyKind::Jacobi: os << "(alpha=" << alpha << ", beta=" << beta << ")"; break;
        case FamilyKind::Laguerre: os << "(alpha=" << alpha << ")"; break;
        case FamilyKind::BesselPoly: os << "(theta=" << theta << ")"; break;
        case FamilyKind::HermitePoly: break;
    }
    return os.str();
}

namespace {

// coefficient vectors, lowest first
template <class T>
using Coeffs = std::vector<T>;

template <class T>
Coeffs<T> add(const Coeffs<T>& a, const Coeffs<T>& b) {
    Coeffs<T> r(std::max(a.size(), b.size()), T(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

template <class T>
Coeffs<T> mul(const Coeffs<T>& a, const Coeffs<T>& b) {
    if (a.empty() || b.empty()) return {};
    Coeffs<T> r(a.size() + b.size() - 1, T(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

template <class T>
Coeffs<T> deriv(const Coeffs<T>& a) {
    if (a.size() < 2) return {};
    Coeffs<T> r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * T(i);
    return r;
}

template <class T>
Coeffs<T> rodrigues_coeffs(const Coeffs<T>& sigma, const Coeffs<T>& kappa, int n) {
    const Coeffs<T> ds = deriv(sigma);
    Coeffs<T> p{T(1)};
    for (int k = 0; k < n; ++k) {
        Coeffs<T> m = ds;
        for (auto& c : m) c *= T(n - k);
        p = add(mul(add(m, kappa), p), mul(sigma, deriv(p)));
    }
    T fact(1);
    for (int j = 2; j <= n; ++j) fact *= T(j);
    for (auto& c : p) c /= fact;
    return p;
}

using Wide = __float128;

Coeffs<Wide> to_wide(const PolyC& p) {
    Coeffs<Wide> r(p.degree() + 1);
    for (int i = 0; i <= p.degree(); ++i) r[i] = p[i].real();
    return r;
}

PolyC from_wide(const Coeffs<Wide>& c) {
    std::vector<cd> v;
    for (Wide x : c) v.emplace_back(static_cast<double>(x));
    return PolyC(v);
}

bool near_int(double x) { return std::abs(x - std::round(x)) <= 1e-12 * std::max(1.0, std::abs(x)); }

// family polynomial in quad precision with the degree rules applied
Coeffs<Wide> classical_coeffs(const FamilySpec& f, int n) {
    Coeffs<Wide> p = rodrigues_coeffs(to_wide(f.sigma()), to_wide(f.kappa()), n);
    const Wide pre = f.prefactor();
    for (int j = 0; j < n; ++j)
        for (auto& c : p) c *= pre;
    if (f.kind == FamilyKind::Jacobi) {
        JacobiDegree d = jacobi_degree(f.alpha, f.beta, n);
        if (d.case_no == 3) return {};
        if (d.case_no == 2) p.resize(d.degree + 1);
    }
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

double factorial(int n) {
    double f = 1.0;
    for (int j = 2; j <= n; ++j) f *= j;
    return f;
}

// generalized binomial coefficient
cd binom(cd a, int j) {
    cd r = 1.0;
    for (int i = 0; i < j; ++i) r *= (a - double(i)) / double(i + 1);
    return r;
}

} // namespace

PolyC rodrigues(const PolyC& sigma, const PolyC& kappa, int n) {
    if (n < 0) throw InvalidArgument("n must be non-negative");
    return PolyC(rodrigues_coeffs(sigma.to_vector(), kappa.to_vector(), n));
}

cd rodrigues_contour(const PolyC& sigma, const PolyC& kappa, int n, cd z, double radius) {
    const WeightForm w = weight_form(sigma, kappa);
    if (radius <= 0.0) {
        double d = 2.0;
        if (sigma.degree() >= 1)
            for (cd r : small_roots(sigma)) d = std::min(d, std::abs(z - r));
        if (d == 0.0) throw DomainError("z is a root of sigma");
        radius = 0.5 * d;
    }
    // rho(s)/rho(z) with each power factor as (1 + (s - z)/(z - r))^e, which stays
    // off the cut while the circle avoids the roots
    auto ratio = [&](cd s) {
        cd l = w.exp_poly(s) - w.exp_poly(z);
        for (const PowerFactor& pf : w.power_factors) l += pf.exponent * std::log(1.0 + (s - z) / (z - pf.root));
        if (w.exp_pole) l += w.exp_pole->residue * (1.0 / (s - w.exp_pole->root) - 1.0 / (z - w.exp_pole->root));
        return std::exp(l);
    };
    auto f = [&](cd s) { return std::pow(sigma(s), n) * ratio(s) / std::pow(s - z, n + 1); };
    QuadResult q = integrate(f, circle(z, radius, 128));
    return q.value / (2.0 * std::numbers::pi * cd(0, 1));
}

JacobiDegree jacobi_degree(double alpha, double beta, int n) {
    JacobiDegree d{1, n};
    const double s = alpha + beta;
    if (n > 0 && near_int(s) && std::round(s) >= -2.0 * n && std::round(s) <= -n - 1.0) {
        // sigma^n rho is then a polynomial of degree < n
        auto in_range = [&](double v) { return near_int(v) && std::round(v) >= -n && std::round(v) <= -1.0; };
        if (in_range(alpha) && in_range(beta)) return {3, -1};
        return {2, static_cast<int>(std::round(-s)) - n - 1};
    }
    return d;
}

PolyC classical_poly(const FamilySpec& f, int n) {
    if (n < 0) throw InvalidArgument("n must be non-negative");
    return from_wide(classical_coeffs(f, n));
}

PolyC hypergeometric_poly(const FamilySpec& f, int n) {
    if (n < 0) throw InvalidArgument("n must be non-negative");
    PolyC r;
    const double nf = factorial(n);
    switch (f.kind) {
        case FamilyKind::Jacobi: {
            const PolyC u{0.5, -0.5};
            PolyC uk(1.0);
            for (int k = 0; k <= n; ++k) {
                cd c = pochhammer(-double(n), k) * pochhammer(n + f.alpha + f.beta + 1.0, k) *
                       pochhammer(f.alpha + 1.0 + k, n - k) / (nf * factorial(k));
                r += c * uk;
                uk *= u;
            }
            return r;
        }
        case FamilyKind::Laguerre:
            for (int k = 0; k <= n; ++k)
                r += PolyC::monomial(
                    k, pochhammer(-double(n), k) * pochhammer(f.alpha + 1.0 + k, n - k) / (nf * factorial(k)));
            return r;
        case FamilyKind::HermitePoly:
            for (int k = 0; 2 * k <= n; ++k) {
                cd c = pochhammer(-0.5 * n, k) * pochhammer(0.5 * (1 - n), k) * std::pow(-1.0, k) / factorial(k);
                r += PolyC::monomial(n - 2 * k, c * std::pow(2.0, n) / nf);
            }
            return r;
        case FamilyKind::BesselPoly:
            for (int k = 0; k <= n; ++k)
                r += PolyC::monomial(
                    k, pochhammer(-double(n), k) * pochhammer(n + f.theta + 1.0, k) / (nf * factorial(k)));
            return r;
    }
    return r;
}

BesselConventionRatios bessel_convention_ratios(double theta, int n, cd z) {
    const cd b = classical_poly(FamilySpec::bessel(theta), n)(z);
    const cd f = hypergeometric_poly(FamilySpec::bessel(theta), n)(z);
    const cd l = std::pow(-z, n) * classical_poly(FamilySpec::laguerre(-theta - 2.0 * n - 1.0), n)(-1.0 / z);
    return {b / f, b / l};
}

EigenReport eigen_residual(const PolyC& sigma, const PolyC& kappa, int n) {
    const cd s2 = 2.0 * sigma[2], k1 = kappa[1];
    const cd omega = -double(n) * (n + 1) * s2 / 2.0 - (n + 0.5) * k1;
    const EquationParams p(sigma, kappa, omega);
    const PolyC P = rodrigues(sigma, kappa, n);
    const PolyC r = hgc_operator(p).apply(P);
    double scale = std::max({sigma.max_abs(), p.tau().max_abs(), std::abs(p.eta()), 1.0}) * std::max(P.max_abs(), 1e-300);
    EigenReport e;
    e.residual = r.max_abs() / scale;
    e.degree_relation = std::abs(double(n) * (n - 1) * s2 / 2.0 + double(n) * p.tau()[1] + p.eta());
    return e;
}

EigenReport eigen_residual(const FamilySpec& f, int n) { return eigen_residual(f.sigma(), f.kappa(), n); }

double RecurrenceReport::max() const {
    return std::max({generic_raising, generic_lowering, family_raising, family_lowering});
}

RecurrenceReport polynomial_recurrences(const FamilySpec& f, int n) {
    if (n < 0) throw InvalidArgument("n must be non-negative");
    RecurrenceReport r;
    const PolyC sigma = f.sigma(), kappa = f.kappa(), ds = derivative(sigma);
    const cd s2 = 2.0 * sigma[2];
    const PolyC kn = kappa - double(n) * ds, kn1 = kappa - double(n + 1) * ds;
    const PolyC Pn = rodrigues(sigma, kn, n), Pn1 = rodrigues(sigma, kn1, n + 1);
    r.generic_raising = rel_diff(sigma * derivative(Pn) + kn * Pn, double(n + 1) * Pn1);
    r.generic_lowering = rel_diff(derivative(Pn1), (kappa[1] - double(n) * s2 / 2.0) * Pn);

    auto P = [&](const FamilySpec& g, int m) { return m < 0 ? PolyC() : classical_poly(g, m); };
    const PolyC cur = P(f, n);
    FamilySpec up = f, down = f;
    PolyC raised, lowered;
    cd down_c = 1.0;
    switch (f.kind) {
        case FamilyKind::Jacobi:
            up.alpha -= 1; up.beta -= 1;
            down.alpha += 1; down.beta += 1;
            raised = -0.5 * (sigma * derivative(cur) + kappa * cur);
            down_c = (f.alpha + f.beta + n + 1.0) / 2.0;
            break;
        case FamilyKind::Laguerre:
            up.alpha -= 1;
            down.alpha += 1;
            raised = sigma * derivative(cur) + kappa * cur;
            down_c = -1.0;
            break;
        case FamilyKind::BesselPoly:
            up.theta -= 2;
            down.theta += 2;
            raised = sigma * derivative(cur) + kappa * cur;
            down_c = n + f.theta + 1.0;
            break;
        case FamilyKind::HermitePoly:
            raised = -derivative(cur) + PolyC{0.0, 2.0} * cur;
            down_c = 2.0;
            break;
    }
    r.family_raising = rel_diff(raised, double(n + 1) * P(up, n + 1));
    r.family_lowering = rel_diff(derivative(cur), down_c * P(down, n - 1));
    return r;
}

namespace {

using TSeries = std::vector<PolyC>;

TSeries tmul(const TSeries& a, const TSeries& b) {
    TSeries r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; i + j < a.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// exp(F) with F[0] = 0: n E_n = sum_k k F_k E_{n-k}
TSeries texp(const TSeries& F) {
    TSeries E(F.size());
    E[0] = PolyC(1.0);
    for (std::size_t n = 1; n < F.size(); ++n) {
        PolyC acc;
        for (std::size_t k = 1; k <= n; ++k) acc += double(k) * F[k] * E[n - k];
        E[n] = acc / double(n);
    }
    return E;
}

// (1 + t q)^e
TSeries tbinom(const PolyC& q, cd e, int order) {
    TSeries r(order + 1);
    PolyC qj(1.0);
    for (int j = 0; j <= order; ++j) {
        r[j] = binom(e, j) * qj;
        qj *= q;
    }
    return r;
}

} // namespace

std::vector<PolyC> generating_expand(const PolyC& sigma, const PolyC& kappa, int order) {
    if (order < 1) throw InvalidArgument("t order must be at least 1");
    const WeightForm w = weight_form(sigma, kappa);
    TSeries g(order + 1);
    g[0] = PolyC(1.0);
    for (const PowerFactor& pf : w.power_factors)
        g = tmul(g, tbinom(divide_linear(sigma, pf.root).quot, pf.exponent, order));
    TSeries F(order + 1);
    // p(z + t sigma) - p(z)
    const PolyC& p = w.exp_poly;
    for (int k = 1; k <= p.degree(); ++k)
        for (int j = 1; j <= std::min(k, order); ++j)
            F[j] += p[k] * binom(double(k), j) * pow(PolyC::x(), k - j) * pow(sigma, j);
    if (w.exp_pole) {
        // res/(z + t sigma - r) - res/(z - r) with sigma = s2 (z - r)^2
        const cd r = w.exp_pole->root, res = w.exp_pole->residue, s2 = sigma[2];
        const PolyC lin{-r, 1.0};
        for (int j = 1; j <= order; ++j) F[j] += res * std::pow(-s2, j) * pow(lin, j - 1);
    }
    return tmul(g, texp(F));
}

std::vector<PolyC> generating_expand(const FamilySpec& f, int order) {
    if (order < 1) throw InvalidArgument("t order must be at least 1");
    TSeries F(order + 1);
    switch (f.kind) {
        case FamilyKind::Jacobi:
            return tmul(tbinom(PolyC{1.0, 1.0}, f.alpha, order), tbinom(PolyC{-1.0, 1.0}, f.beta, order));
        case FamilyKind::Laguerre:
            F[1] = PolyC{0.0, -1.0};
            return tmul(texp(F), tbinom(PolyC(1.0), f.alpha, order));
        case FamilyKind::BesselPoly:
            // -t/(1 + t z) = -sum_j (-z)^j t^{j+1}
            for (int j = 0; j + 1 <= order; ++j) F[j + 1] = -pow(PolyC{0.0, -1.0}, j);
            return tmul(tbinom(PolyC::x(), f.theta, order), texp(F));
        case FamilyKind::HermitePoly:
            F[1] = PolyC{0.0, 2.0};
            if (order >= 2) F[2] = PolyC(-1.0);
            return texp(F);
    }
    return F;
}

double generating_scale(const FamilySpec& f) { return f.kind == FamilyKind::Jacobi ? 2.0 : 1.0; }

MomentTable::MomentTable(const FamilySpec& f) : spec_(f) {
    switch (f.kind) {
        case FamilyKind::BesselPoly:
            throw NoOrthogonalityInterval("Bessel polynomials have no orthogonality interval");
        case FamilyKind::Jacobi:
            if (!(f.alpha > -1.0 && f.beta > -1.0)) throw DomainError("Jacobi weight needs alpha, beta > -1");
            break;
        case FamilyKind::Laguerre:
            if (!(f.alpha > -1.0)) throw DomainError("Laguerre weight needs alpha > -1");
            break;
        case FamilyKind::HermitePoly: break;
    }
}

std::string MomentTable::interval() const {
    switch (spec_.kind) {
        case FamilyKind::Jacobi: return "[-1,1]";
        case FamilyKind::Laguerre: return "[0,inf)";
        default: return "(-inf,inf)";
    }
}

double MomentTable::operator()(int k) const { return static_cast<double>(wide(k)); }

__float128 MomentTable::wide(int k) const {
    if (k < 0) throw InvalidArgument("negative moment index");
    if (auto it = cache_.find(k); it != cache_.end()) return it->second;
    const long double a = spec_.alpha, b = spec_.beta;
    Wide m = 0;
    switch (spec_.kind) {
        case FamilyKind::Jacobi:
            // int (x^k tau + k x^{k-1} sigma) rho = 0, tau = (b - a) - (a + b + 2) x
            if (k == 0)
                m = std::pow(2.0L, a + b + 1) * std::tgamma(a + 1) * std::tgamma(b + 1) / std::tgamma(a + b + 2);
            else
                m = (Wide(b - a) * wide(k - 1) + (k > 1 ? Wide(k - 1) * wide(k - 2) : Wide(0))) / Wide(a + b + 1 + k);
            break;
        case FamilyKind::Laguerre:
            m = k == 0 ? Wide(std::tgamma(a + 1)) : Wide(a + k) * wide(k - 1);
            break;
        case FamilyKind::HermitePoly:
            if (k % 2 == 0)
                m = k == 0 ? Wide(std::sqrt(std::numbers::pi_v<long double>)) : Wide(k - 1) / 2 * wide(k - 2);
            break;
        case FamilyKind::BesselPoly: break;
    }
    cache_.emplace(k, m);
    return m;
}

double jacobi_moment_binomial(double alpha, double beta, int k) {
    double s = 0.0;
    for (int i = 0; i <= k; ++i) {
        double beta_fn = std::exp(std::lgamma(alpha + 1) + std::lgamma(beta + 1 + i) - std::lgamma(alpha + beta + 2 + i));
        s += binom(double(k), i).real() * ((k - i) % 2 ? -1.0 : 1.0) * std::pow(2.0, alpha + beta + i + 1) * beta_fn;
    }
    return s;
}

namespace {

Wide contract(const Coeffs<Wide>& p, const Coeffs<Wide>& q, const MomentTable& m) {
    Wide s = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j) s += p[i] * q[j] * m.wide(static_cast<int>(i + j));
    return s;
}

Coeffs<Wide> part(const PolyC& p, bool imag) {
    Coeffs<Wide> r(p.degree() + 1);
    for (int i = 0; i <= p.degree(); ++i) r[i] = imag ? p[i].imag() : p[i].real();
    return r;
}

} // namespace

cd inner_product_moments(const PolyC& p, const PolyC& q, const MomentTable& m) {
    const Coeffs<Wide> pr = part(p, false), pi = part(p, true), qr = part(q, false), qi = part(q, true);
    const Wide re = contract(pr, qr, m) - contract(pi, qi, m), im = contract(pr, qi, m) + contract(pi, qr, m);
    return {static_cast<double>(re), static_cast<double>(im)};
}

cd inner_product_moments(const PolyC& p, const PolyC& q, const FamilySpec& f) {
    return inner_product_moments(p, q, MomentTable(f));
}

double family_norm(const FamilySpec& f, int n) {
    const long double a = f.alpha, b = f.beta;
    long double nf = 1.0L;
    for (int j = 2; j <= n; ++j) nf *= j;
    switch (f.kind) {
        case FamilyKind::Jacobi: {
            // (1 + 2n + a + b) Gamma(1 + a + b + n) = Gamma(2 + a + b) at n = 0
            long double den = n == 0 ? std::tgamma(2 + a + b) : (1 + 2 * n + a + b) * std::tgamma(1 + a + b + n);
            return static_cast<double>(std::tgamma(1 + a + n) * std::tgamma(1 + b + n) * std::pow(2.0L, a + b + 1) /
                                       (den * nf));
        }
        case FamilyKind::Laguerre: return static_cast<double>(std::tgamma(1 + a + n) / nf);
        case FamilyKind::HermitePoly:
            return static_cast<double>(std::sqrt(std::numbers::pi_v<long double>) * std::pow(2.0L, n) / nf);
        case FamilyKind::BesselPoly:
            throw NoOrthogonalityInterval("Bessel polynomials have no orthogonality interval");
    }
    return 0.0;
}

OrthogonalityReport orthogonality_check(const FamilySpec& f, int n_max) {
    if (n_max < 0) throw InvalidArgument("n_max must be non-negative");
    const MomentTable m(f);
    std::vector<Coeffs<Wide>> P;
    for (int n = 0; n <= n_max; ++n) P.push_back(classical_coeffs(f, n));
    OrthogonalityReport r;
    r.gram.resize(n_max + 1, n_max + 1);
    for (int i = 0; i <= n_max; ++i)
        for (int j = 0; j <= i; ++j) r.gram(i, j) = r.gram(j, i) = static_cast<double>(contract(P[i], P[j], m));
    for (int i = 0; i <= n_max; ++i)
        for (int j = 0; j < i; ++j)
            r.max_offdiag = std::max(r.max_offdiag, std::abs(r.gram(i, j)) / std::sqrt(r.gram(i, i) * r.gram(j, j)));

    const Coeffs<Wide> sigma = to_wide(f.sigma());
    const Wide k1 = f.kappa()[1].real(), s2 = 2.0 * f.sigma()[2].real(), pre = f.prefactor();
    Coeffs<Wide> sn{Wide(1)};
    for (int n = 0; n <= n_max; ++n) {
        const Wide int_sn = contract(sn, {Wide(1)}, m);
        Wide corrected = 1, printed = 1, nf = 1, pre2 = 1;
        for (int j = 1; j <= n; ++j) {
            nf *= j;
            pre2 *= pre * pre;
            printed *= -k1 + j * s2 / 2;
            corrected *= -k1 - (n + j) * s2 / 2;
        }
        const double g = r.gram(n, n);
        r.norms.push_back(g);
        r.norm_formula.push_back(static_cast<double>(pre2 * corrected * int_sn / nf));
        r.norm_printed.push_back(static_cast<double>(pre2 * printed * int_sn / nf));
        r.norm_family.push_back(family_norm(f, n));
        auto rel = [&](double v) { return std::abs(g - v) / std::max(std::abs(v), 1e-300); };
        r.max_formula_err = std::max(r.max_formula_err, rel(r.norm_formula.back()));
        r.max_family_err = std::max(r.max_family_err, rel(r.norm_family.back()));
        r.max_printed_err = std::max(r.max_printed_err, rel(r.norm_printed.back()));
        sn = mul(sn, sigma);
    }
    return r;
}

std::string poly_table_csv(const FamilySpec& f, int n_max) {
    std::vector<PolyC> rows;
    int width = 0;
    for (int n = 0; n <= n_max; ++n) {
        rows.push_back(classical_poly(f, n));
        width = std::max(width, rows.back().degree() + 1);
    }
    std::ostringstream os;
    os << "n,degree";
    for (int k = 0; k < width; ++k) os << ",c" << k << "_re,c" << k << "_im";
    os << "\n";
    char buf[64];
    for (int n = 0; n <= n_max; ++n) {
        os << n << "," << rows[n].degree();
        for (int k = 0; k < width; ++k) {
            cd c = rows[n][k];
            std::snprintf(buf, sizeof buf, ",%.15e,%.15e", c.real(), c.imag());
            os << buf;
        }
        os << "\n";
    }
    return os.str();
}

} // namespace hgc
