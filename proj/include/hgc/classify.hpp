#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hgc/ratfun.hpp"

namespace hgc {

enum class NormalType {
    Gauss2F1,
    Kummer1F1,
    TwoF0,
    ZeroF1,
    Hermite,
    Airy,
    EulerI,
    EulerII,
    Helmholtz1d,
    Laplace1d
};

std::string to_string(NormalType t);

// Operator sigma d^2 + tau d + free, free rational (xi/sigma).
struct RiemannOperator {
    PolyC sigma;
    RatFun tau, free;
};

struct NormalFormReport {
    NormalType type_tag = NormalType::Laplace1d;
    // x = affine_a * z + affine_b is the normal variable.
    cd affine_a = 1.0, affine_b = 0.0;
    cd scalar_divisor = 1.0;
    std::vector<std::pair<std::string, cd>> normal_params;
    bool hypergeometric_class = true;
    // f = (z - gauge_root)^gauge_power * exp(gauge_exp(z)) * g, applied before the affine map.
    cd gauge_root = 0.0, gauge_power = 0.0;
    PolyC gauge_exp;
    // Coefficient residual of the transformed operator against the normal form.
    double residual = 0.0;

    cd param(const std::string& name) const;
};

RiemannOperator normal_form_operator(NormalType t, const std::vector<std::pair<std::string, cd>>& params);

// Conjugation by the gauge, then x = a z + b, then division by d.
RiemannOperator transform_operator(const RiemannOperator& op, const NormalFormReport& r);

double rel_diff(const RiemannOperator& a, const RiemannOperator& b);

NormalFormReport classify_riemann(const PolyC& sigma, const PolyC& tau, const PolyC& xi);

} // namespace hgc
