#include "hgc/params.hpp"

#include <algorithm>

#include "hgc/errors.hpp"

namespace hgc {

EquationParams::EquationParams(PolyC s, PolyC k, cd w) : sigma(std::move(s)), kappa(std::move(k)), omega(w) {
    if (sigma.is_zero()) throw InvalidDegree("sigma must be nonzero");
    if (sigma.degree() > 2) throw InvalidDegree("deg sigma must be <= 2");
    if (kappa.degree() > 1) throw InvalidDegree("deg kappa must be <= 1");
}

EquationParams params_from_sty(const PolyC& sigma, const PolyC& tau, cd eta) {
    if (sigma.is_zero() || sigma.degree() > 2) throw InvalidDegree("sigma must be nonzero of degree <= 2");
    if (tau.degree() > 1) throw InvalidDegree("deg tau must be <= 1");
    PolyC kappa = tau - derivative(sigma);
    return EquationParams(sigma, kappa, eta - kappa[1] / 2.0);
}

StyTriple params_to_sty(const EquationParams& p) { return {p.sigma, p.tau(), p.eta()}; }

EquationParams ladder_params(const EquationParams& base, cd n) {
    PolyC kn = base.kappa + n * derivative(base.sigma);
    cd wn = n * n * base.sigma2() / 2.0 + n * base.kappa1() + base.omega;
    return EquationParams(base.sigma, kn, wn);
}

EquationParams scaled(const EquationParams& p, cd s) {
    cd inv = 1.0 / s;
    return EquationParams(p.sigma * inv, p.kappa * inv, p.omega * inv);
}

double rel_diff(const EquationParams& a, const EquationParams& b) {
    double s = std::max({a.sigma.max_abs(), b.sigma.max_abs(), a.kappa.max_abs(), b.kappa.max_abs(),
                         std::abs(a.omega), std::abs(b.omega), 1e-300});
    double d = std::max({(a.sigma - b.sigma).max_abs(), (a.kappa - b.kappa).max_abs(), std::abs(a.omega - b.omega)});
    return d / s;
}

std::string to_string(ClassicalType t) {
    switch (t) {
        case ClassicalType::Gauss2F1: return "2F1";
        case ClassicalType::Kummer1F1: return "1F1";
        case ClassicalType::TwoF0: return "2F0";
        case ClassicalType::ZeroF1: return "0F1";
        case ClassicalType::Hermite: return "Hermite";
    }
    return "?";
}

ClassicalType classical_type_from_string(const std::string& s) {
    if (s == "2F1" || s == "Gauss2F1") return ClassicalType::Gauss2F1;
    if (s == "1F1" || s == "Kummer1F1") return ClassicalType::Kummer1F1;
    if (s == "2F0" || s == "TwoF0") return ClassicalType::TwoF0;
    if (s == "0F1" || s == "ZeroF1") return ClassicalType::ZeroF1;
    if (s == "Hermite" || s == "S") return ClassicalType::Hermite;
    throw InvalidArgument("unknown classical type: " + s);
}

EquationParams classical_params(ClassicalType t, const NamedParams& p) {
    const cd a = p.a, b = p.b, c = p.c;
    switch (t) {
        case ClassicalType::Gauss2F1:
            return {PolyC{0.0, 1.0, -1.0}, PolyC{c - 1.0, -(a + b - 1.0)}, -(a - 0.5) * (b - 0.5) - 0.25};
        case ClassicalType::Kummer1F1:
            return {PolyC{0.0, 1.0}, PolyC{c - 1.0, -1.0}, -a + 0.5};
        case ClassicalType::TwoF0:
            return {PolyC{0.0, 0.0, 1.0}, PolyC{-1.0, a + b - 1.0}, (a - 0.5) * (b - 0.5) + 0.25};
        case ClassicalType::ZeroF1:
            return {PolyC{0.0, 1.0}, PolyC{c - 1.0}, cd(-1.0)};
        case ClassicalType::Hermite:
            return {PolyC{1.0}, PolyC{0.0, -2.0}, -2.0 * a + 1.0};
    }
    throw InvalidArgument("unknown classical type");
}

PolyC DegenerateParams::sigma() const { return PolyC{0.0, 1.0, -mu * nu}; }

PolyC DegenerateParams::kappa_m() const {
    cd s2 = -2.0 * mu * nu;
    return PolyC{cd(m), s2 / 2.0 * double(m - 1) - mu * b - nu * a};
}

cd DegenerateParams::omega_m() const {
    cd s2 = -2.0 * mu * nu;
    return 0.5 * (mu * b + nu * a) - a * b - double(m) * mu * b - s2 / 4.0 * double(m - 1);
}

cd DegenerateParams::omega_tilde_m() const {
    cd s2 = -2.0 * mu * nu;
    return 0.5 * (mu * b + nu * a) - a * b - double(m) * nu * a - s2 / 4.0 * double(m - 1);
}

EquationParams DegenerateParams::params(bool tilde) const {
    return EquationParams(sigma(), kappa_m(), tilde ? omega_tilde_m() : omega_m());
}

} // namespace hgc
