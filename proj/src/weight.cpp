#include "hgc/weight.hpp"

#include <algorithm>

#include "hgc/errors.hpp"

namespace hgc {

namespace {

bool root_less(cd a, cd b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

} // namespace

cd WeightForm::log(cd z) const {
    cd acc = std::log(scale);
    for (const auto& f : power_factors) {
        if (f.exponent == cd(0)) continue;
        acc += f.exponent * std::log(z - f.root);
    }
    acc += exp_poly(z);
    if (exp_pole) acc += exp_pole->residue / (z - exp_pole->root);
    return acc;
}

RatFun WeightForm::log_derivative() const {
    RatFun acc(derivative(exp_poly));
    for (const auto& f : power_factors) {
        if (f.exponent == cd(0)) continue;
        acc = acc + RatFun(PolyC(f.exponent), PolyC{-f.root, 1.0});
    }
    if (exp_pole && exp_pole->residue != cd(0)) {
        PolyC lin{-exp_pole->root, 1.0};
        acc = acc + RatFun(PolyC(-exp_pole->residue), lin * lin);
    }
    return acc;
}

WeightForm WeightForm::inverse() const {
    WeightForm w = *this;
    for (auto& f : w.power_factors) f.exponent = -f.exponent;
    w.exp_poly = -exp_poly;
    if (w.exp_pole) w.exp_pole->residue = -w.exp_pole->residue;
    w.scale = 1.0 / scale;
    return w;
}

WeightForm operator*(const WeightForm& a, const WeightForm& b) {
    WeightForm w = a;
    for (const auto& f : b.power_factors) {
        auto it = std::find_if(w.power_factors.begin(), w.power_factors.end(),
                               [&](const PowerFactor& g) { return g.root == f.root; });
        if (it != w.power_factors.end())
            it->exponent += f.exponent;
        else
            w.power_factors.push_back(f);
    }
    w.exp_poly = a.exp_poly + b.exp_poly;
    if (b.exp_pole) {
        if (w.exp_pole && w.exp_pole->root == b.exp_pole->root)
            w.exp_pole->residue += b.exp_pole->residue;
        else if (w.exp_pole)
            throw InvalidArgument("weights with two distinct exponential poles");
        else
            w.exp_pole = b.exp_pole;
    }
    w.scale = a.scale * b.scale;
    return w;
}

WeightForm weight_form(const PolyC& sigma, const PolyC& kappa) {
    if (sigma.is_zero()) throw InvalidDegree("sigma must be nonzero");
    WeightForm w;
    const cd k1 = kappa[1];
    switch (sigma.degree()) {
        case 2: {
            bool dbl = false;
            auto rs = small_roots(sigma, 1e-10, &dbl);
            cd s2 = sigma[2];
            if (dbl) {
                cd r = rs[0];
                w.power_factors.push_back({r, k1 / s2});
                w.exp_pole = ExpPole{r, -kappa(r) / s2};
            } else {
                std::sort(rs.begin(), rs.end(), root_less);
                cd r1 = rs[0], r2 = rs[1];
                w.power_factors.push_back({r1, kappa(r1) / (s2 * (r1 - r2))});
                w.power_factors.push_back({r2, kappa(r2) / (s2 * (r2 - r1))});
            }
            break;
        }
        case 1: {
            cd s1 = sigma[1];
            cd r = -sigma[0] / s1;
            w.power_factors.push_back({r, kappa(r) / s1});
            w.exp_poly = PolyC{0.0, k1 / s1};
            break;
        }
        default: {
            cd s0 = sigma[0];
            w.exp_poly = PolyC{0.0, kappa[0] / s0, k1 / (2.0 * s0)};
            break;
        }
    }
    return w;
}

WeightForm weight_form(const EquationParams& p) { return weight_form(p.sigma, p.kappa); }

double weight_residual(const WeightForm& w, const PolyC& sigma, const PolyC& kappa) {
    RatFun ld = w.log_derivative();
    PolyC lhs = sigma * ld.num();
    PolyC rhs = kappa * ld.den();
    double s = std::max({lhs.max_abs(), rhs.max_abs(), 1e-300});
    return (lhs - rhs).max_abs() / s;
}

} // namespace hgc
