#pragma once

#include <string>

#include "hgc/poly.hpp"

namespace hgc {

// The operator sigma d^2 + (sigma' + kappa) d + kappa'/2 + omega.
struct EquationParams {
    PolyC sigma;
    PolyC kappa;
    cd omega = 0.0;

    EquationParams() = default;
    EquationParams(PolyC s, PolyC k, cd w);

    cd sigma2() const { return 2.0 * sigma[2]; }  // sigma''
    cd kappa1() const { return kappa[1]; }        // kappa'
    PolyC tau() const { return kappa + derivative(sigma); }
    cd eta() const { return kappa[1] / 2.0 + omega; }
};

struct StyTriple {
    PolyC sigma;
    PolyC tau;
    cd eta = 0.0;
};

EquationParams params_from_sty(const PolyC& sigma, const PolyC& tau, cd eta);
StyTriple params_to_sty(const EquationParams& p);

// kappa_n = n sigma' + kappa, omega_n = n^2 sigma''/2 + n kappa' + omega.
EquationParams ladder_params(const EquationParams& base, cd n);

// Parameters of the same equation divided by a nonzero scalar.
EquationParams scaled(const EquationParams& p, cd s);

// Coefficientwise agreement of all three components.
double rel_diff(const EquationParams& a, const EquationParams& b);

enum class ClassicalType { Gauss2F1, Kummer1F1, TwoF0, ZeroF1, Hermite };

struct NamedParams {
    cd a = 0.0, b = 0.0, c = 0.0;
};

std::string to_string(ClassicalType t);
ClassicalType classical_type_from_string(const std::string& s);

// Parameter dictionaries of the five classical types.
EquationParams classical_params(ClassicalType t, const NamedParams& np);

// sigma = z - mu nu z^2 with kappa_m, omega_m (or the tilde variant).
struct DegenerateParams {
    cd a = 0.0, b = 0.0, mu = 0.0, nu = 0.0;
    int m = 0;

    PolyC sigma() const;
    PolyC kappa_m() const;
    cd omega_m() const;
    cd omega_tilde_m() const;
    EquationParams params(bool tilde = false) const;
};

} // namespace hgc
