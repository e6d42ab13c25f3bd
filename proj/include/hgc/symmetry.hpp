#pragma once

#include <optional>
#include <string>

#include "hgc/diffop.hpp"
#include "hgc/params.hpp"

namespace hgc {

// sigma d^2 + (sigma' + kappa) d + kappa'/2 + omega
DiffOp hgc_operator(const EquationParams& p);

// sigma d^2 + (kappa + sigma'(n+1)) d + sigma'' n(n+1)/2 + kappa'(n+1/2) + omega
DiffOp casimir_restrict(const EquationParams& p, cd n);

// sigma d + kappa_n
DiffOp lowering_operator(const EquationParams& p, cd n);

enum class SymmetryKind { Basic, Power, Inversion };
std::string to_string(SymmetryKind k);

struct SymmetryReport {
    SymmetryKind kind;
    EquationParams transformed;
    double residual = 0.0;
    std::optional<cd> zeta;
    // which constant convention satisfied the identity (Inversion only)
    std::string variant;
    // transform applied to the transformed parameters, compared with the input
    // (Inversion: up to an overall sign of the triple, which is the same equation)
    double twice_residual = 0.0;
};

// Transformed parameters without the operator check; variant index for Inversion.
EquationParams symmetry_params(SymmetryKind kind, const EquationParams& p, cd* zeta = nullptr, int variant = -1,
                               int root = 0);

SymmetryReport verify_symmetry(SymmetryKind kind, const EquationParams& p);

struct FactorizationReport {
    double factor_residual_up = 0, factor_residual_down = 0;
    double transmutation_residual_up = 0, transmutation_residual_down = 0;
    // difference of the two factorization constants against -sigma'' n - kappa'
    double constant_gap_residual = 0;
    double max_residual() const;
};

FactorizationReport verify_factorization(const EquationParams& p, cd n);

// (sigma d + kappa_{-(n-1)}) ... (sigma d + kappa_0) against sigma^n rho^{-1} d^n rho,
// as operators and on test polynomials of degree <= max_degree.
double verify_descending_product(const EquationParams& p, int n, int max_degree = 8);

} // namespace hgc
