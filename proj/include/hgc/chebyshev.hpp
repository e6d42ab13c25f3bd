#pragma once

#include <string>
#include <vector>

#include "hgc/params.hpp"
#include "hgc/series.hpp"

namespace hgc {

// Elementary (Chebyshev) closed forms.  The 0F1 kinds are functions of z,
// the 2F1 kinds of w with the hypergeometric argument (1 - w)/2.
enum class ChebyshevKind { TwoF1Sin, TwoF1Cos, ZeroF1Sinh, ZeroF1Cosh };
std::string to_string(ChebyshevKind k);

// prefactor(z) * d^k kernel(z); lambda only used by the 2F1 kinds
EvalResult chebyshev_eval(ChebyshevKind kind, int k, cd lambda, cd z);

// The hypergeometric value the closed form is paired with, as printed
// (swapped = the other 2F1 left-hand side).
cd chebyshev_partner(ChebyshevKind kind, int k, cd lambda, cd z, bool swapped = false);

struct ChebyshevCheck {
    ChebyshevKind kind;
    int k = 0;
    cd closed_form, partner, partner_swapped;
    cd ratio;          // partner / closed_form
    cd ratio_swapped;  // partner_swapped / closed_form
    bool matches = false;          // ratio == 1
    bool matches_swapped = false;  // ratio_swapped == 1
};
std::vector<ChebyshevCheck> chebyshev_pairing_report(cd lambda, cd w, cd z, int kmax, double tol = 1e-10);

// Relative residual of H(sigma, -+sigma'/2) + omega + sigma''/4 applied to
// sin(q y) or cos(q y) (divided by sqrt(sigma) for the + sign), y' = sigma^{-1/2},
// q = sqrt(omega), or q = omega with sqrt_reading off.  Second differences in z.
struct ChebyshevResidualOptions {
    bool plus_half = false;    // kappa = +sigma'/2 (candidate divided by sqrt(sigma))
    bool use_cos = false;
    bool sqrt_reading = true;  // q = sqrt(omega); false: q = omega
    double h = 1e-4;
    std::vector<cd> samples = {0.2, 0.35, 0.5, 0.65, 0.8};
};
double chebyshev_residual(const PolyC& sigma, cd omega, const ChebyshevResidualOptions& o = {});

} // namespace hgc
