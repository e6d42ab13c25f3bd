#pragma once

#include <Eigen/Core>
#include <map>
#include <string>
#include <vector>

#include "hgc/poly.hpp"

namespace hgc {

enum class FamilyKind { Jacobi, Laguerre, BesselPoly, HermitePoly };
std::string to_string(FamilyKind k);
FamilyKind family_from_string(const std::string& s);

// Jacobi: sigma = 1 - z^2, kappa = beta(1 - z) - alpha(1 + z)
// Laguerre: sigma = z, kappa = alpha - z
// Bessel: sigma = z^2, kappa = -1 + theta z
// Hermite: sigma = 1, kappa = -2z
struct FamilySpec {
    FamilyKind kind = FamilyKind::HermitePoly;
    double alpha = 0.0, beta = 0.0, theta = 0.0;

    static FamilySpec jacobi(double a, double b) { return {FamilyKind::Jacobi, a, b, 0.0}; }
    static FamilySpec laguerre(double a) { return {FamilyKind::Laguerre, a, 0.0, 0.0}; }
    static FamilySpec bessel(double t) { return {FamilyKind::BesselPoly, 0.0, 0.0, t}; }
    static FamilySpec hermite() { return {FamilyKind::HermitePoly, 0.0, 0.0, 0.0}; }

    PolyC sigma() const;
    PolyC kappa() const;
    // parameters of the n-th generating-function coefficient
    // (alpha - n, beta - n), alpha - n, theta - 2n, unchanged
    FamilySpec shifted(int n) const;
    // P_n^{family} = prefactor^n * rodrigues(sigma, kappa, n)
    double prefactor() const;
    std::string describe() const;
};

// (1/n!) rho^{-1} d^n sigma^n rho via p_0 = 1, p_{k+1} = ((n-k) sigma' + kappa) p_k + sigma p_k'
PolyC rodrigues(const PolyC& sigma, const PolyC& kappa, int n);

// 1/(2 pi i) rho^{-1}(z) loop_z sigma^n(s) rho(s) (s - z)^{-n-1} ds on a circle
// around z; radius 0 picks half the distance to the nearest root of sigma.
cd rodrigues_contour(const PolyC& sigma, const PolyC& kappa, int n, cd z, double radius = 0.0);

struct JacobiDegree {
    // 1: degree n, 2: degree drops to -alpha-beta-n-1, 3: zero polynomial (alpha and beta both in {-n..-1})
    int case_no = 1;
    int degree = 0;   // -1 for the zero polynomial
};
JacobiDegree jacobi_degree(double alpha, double beta, int n);

PolyC classical_poly(const FamilySpec& f, int n);

// Terminating hypergeometric expansion of the same polynomial:
// Jacobi (1+a)_n/n! 2F1(-n, n+a+b+1; a+1; (1-x)/2), Laguerre (1+a)_n/n! 1F1(-n; 1+a; x),
// Hermite 2^n/n! S(-n; x), Bessel (1/n!) 2F0(-n, n+theta+1; -; x)
PolyC hypergeometric_poly(const FamilySpec& f, int n);

// Bessel: the generic polynomial divided by the 2F0 form and by (-z)^n L_n^{-theta-2n-1}(-1/z), at z
struct BesselConventionRatios {
    cd ratio_2f0, ratio_laguerre;
};
BesselConventionRatios bessel_convention_ratios(double theta, int n, cd z);

struct EigenReport {
    double residual = 0.0;  // (H(sigma,kappa) - n(n+1)sigma''/2 - (n+1/2)kappa') P_n, relative
    double degree_relation = 0.0;  // |n(n-1)sigma''/2 + n tau' + eta|
};
EigenReport eigen_residual(const PolyC& sigma, const PolyC& kappa, int n);
EigenReport eigen_residual(const FamilySpec& f, int n);

struct RecurrenceReport {
    // (sigma d + kappa_{-n}) P_n(kappa_{-n}) = (n+1) P_{n+1}(kappa_{-n-1})
    double generic_raising = 0.0;
    // d P_{n+1}(kappa_{-n-1}) = (n sigma''/2 + kappa'_{-n}) P_n(kappa_{-n})
    double generic_lowering = 0.0;
    double family_raising = 0.0;
    double family_lowering = 0.0;
    double max() const;
};
RecurrenceReport polynomial_recurrences(const FamilySpec& f, int n);

// Taylor coefficients in t of rho(z + t sigma)/rho(z), through t^order
std::vector<PolyC> generating_expand(const PolyC& sigma, const PolyC& kappa, int order);
// The family's own closed-form generating function, through t^order
std::vector<PolyC> generating_expand(const FamilySpec& f, int order);
// coefficient n of the family generating function is scale^n P_n^{shifted(n)}
double generating_scale(const FamilySpec& f);

class MomentTable {
public:
    explicit MomentTable(const FamilySpec& f);
    const FamilySpec& spec() const { return spec_; }
    std::string interval() const;
    double operator()(int k) const;  // int x^k rho(x) dx
    __float128 wide(int k) const;

private:
    FamilySpec spec_;
    mutable std::map<int, __float128> cache_;
};

// int p q rho; the contraction runs in quad precision
cd inner_product_moments(const PolyC& p, const PolyC& q, const FamilySpec& f);
cd inner_product_moments(const PolyC& p, const PolyC& q, const MomentTable& m);

// Jacobi moments by the binomial expansion of ((1+x) - 1)^k against Beta values
double jacobi_moment_binomial(double alpha, double beta, int k);

struct OrthogonalityReport {
    Eigen::MatrixXd gram;
    double max_offdiag = 0.0;             // |G_mn| / sqrt(G_mm G_nn)
    std::vector<double> norms;            // G_nn
    std::vector<double> norm_formula;     // (1/n!) prod_{j=n+1}^{2n} (-kappa' - j sigma''/2) int sigma^n rho, scaled
    std::vector<double> norm_printed;     // the same with prod_{j=1}^{n} (-kappa' + j sigma''/2)
    std::vector<double> norm_family;      // family closed form
    double max_formula_err = 0.0;
    double max_family_err = 0.0;
    double max_printed_err = 0.0;
};
OrthogonalityReport orthogonality_check(const FamilySpec& f, int n_max);

// Closed-form norms; throws NoOrthogonalityInterval for Bessel.
double family_norm(const FamilySpec& f, int n);

// One row per n: n, degree, re/im coefficient pairs lowest first.
std::string poly_table_csv(const FamilySpec& f, int n_max);

} // namespace hgc
