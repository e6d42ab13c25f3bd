#pragma once

#include <optional>
#include <vector>

#include "hgc/params.hpp"
#include "hgc/ratfun.hpp"

namespace hgc {

struct PowerFactor {
    cd root;
    cd exponent;
};

struct ExpPole {
    cd root;
    cd residue;
};

// prod (z - root)^exponent * exp(exp_poly(z)) * exp(residue/(z - root)) * scale
struct WeightForm {
    std::vector<PowerFactor> power_factors;
    PolyC exp_poly;
    std::optional<ExpPole> exp_pole;
    cd scale = 1.0;

    static WeightForm power(cd root, cd exponent) { return {{{root, exponent}}, PolyC(), std::nullopt, 1.0}; }
    static WeightForm exponential(PolyC p) { return {{}, std::move(p), std::nullopt, 1.0}; }

    cd log(cd z) const;
    cd operator()(cd z) const { return std::exp(log(z)); }
    RatFun log_derivative() const;
    WeightForm inverse() const;
};

WeightForm operator*(const WeightForm& a, const WeightForm& b);

// Solution of sigma rho' = kappa rho with unit scale.
WeightForm weight_form(const EquationParams& p);
WeightForm weight_form(const PolyC& sigma, const PolyC& kappa);

// Max coefficient of sigma * (log rho)' - kappa after clearing denominators,
// relative to the operands.
double weight_residual(const WeightForm& w, const PolyC& sigma, const PolyC& kappa);

} // namespace hgc
