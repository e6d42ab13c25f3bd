#pragma once

#include <string>

#include "hgc/params.hpp"
#include "hgc/quad.hpp"
#include "hgc/weight.hpp"

namespace hgc {

constexpr double kBoundaryTol = 1e-10;
constexpr double kFar = 1e150;

// f_n(z) = int (s - z)^{-n-1} rho0^{-1}(s) ds, rho0 from (sigma, kappa0); the
// normalized variant divides by Gamma(n + 1).  Multivalued factors are
// continued along the path.  boundary_term is sigma (s - z)^{-n-2} rho0^{-1}
// taken between the contour ends.
QuadResult euler_transform(const PolyC& sigma, const PolyC& kappa0, cd n, const ContourSpec& c, cd z,
                           bool normalized = false);

// delta0 solving (sigma(-d) s + kappa0(-d)) delta0 = 0; needs sigma'' = 0.
WeightForm laplace_kernel(const PolyC& sigma, const PolyC& kappa0);

// g_n(z) = int delta0(s) s^n e^{z s} ds with boundary (sigma' s^{n+2} + kappa0' s^{n+1}) delta0 e^{s z}.
QuadResult laplace_transform(const PolyC& sigma, const PolyC& kappa0, cd n, const ContourSpec& c, cd z);

enum class ReprName {
    Repr2F1Euler,
    Repr1F1Hankel,
    Repr1F1Algebraic,
    Repr2F0,
    Repr0F1Loop,
    ReprHermiteLaplace,
    ReprHermiteEuler,
    PsiLoop,
    PsiTildeLoop
};
std::string to_string(ReprName r);
ReprName repr_from_string(const std::string& s);

struct ReprArgs {
    NamedParams np;         // classical parameters (Hermite: a)
    DegenerateParams dp;    // Psi loops
    double radius = 0.0;    // loop radius override, 0: automatic
};

// value = quad.value / prefactor is the function the series evaluators compute:
// Olver-normalized F for 2F1/1F1/0F1, F(a,b;-;z), S(a;z), Psi_m, Psi~_m.
struct ReprResult {
    QuadResult quad;
    cd prefactor = 1.0;
    cd value = 0.0;
};
ReprResult named_representation(ReprName name, const ReprArgs& args, cd z);

// Coefficient of u^m in the Psi (tilde: Psi~) generating kernel, by a circle
// of the given radius inside the Laurent annulus.
cd psi_laurent_coefficient(const DegenerateParams& dp, cd z, int m, double radius, bool tilde = false);
// The kernel itself.
cd psi_kernel(const DegenerateParams& dp, cd z, cd u, bool tilde = false);
// Psi_m (tilde: Psi~_m) by multiplying out the two binomial series of the kernel;
// needs |mu nu z| < 1.
cd psi_series(const DegenerateParams& dp, cd z, bool tilde = false, double tol = 1e-15, int max_terms = 2000);
// Radius inside the annulus where the kernel's Laurent series converges.
double psi_annulus_radius(const DegenerateParams& dp, cd z, bool tilde = false);

} // namespace hgc
