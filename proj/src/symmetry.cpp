#include "hgc/symmetry.hpp"

#include <algorithm>
#include <array>

#include "hgc/errors.hpp"
#include "hgc/weight.hpp"

namespace hgc {

DiffOp hgc_operator(const EquationParams& p) {
    DiffOp op = DiffOp::term(2, RatFun(p.sigma)) + DiffOp::term(1, RatFun(p.tau()));
    return op + DiffOp(p.kappa1() / 2.0 + p.omega);
}

DiffOp casimir_restrict(const EquationParams& p, cd n) {
    PolyC ds = derivative(p.sigma);
    cd c0 = p.sigma2() / 2.0 * n * (n + 1.0) + p.kappa1() * (n + 0.5) + p.omega;
    return DiffOp::term(2, RatFun(p.sigma)) + DiffOp::term(1, RatFun(p.kappa + (n + 1.0) * ds)) + DiffOp(c0);
}

DiffOp lowering_operator(const EquationParams& p, cd n) {
    return DiffOp::term(1, RatFun(p.sigma)) + DiffOp(p.kappa + n * derivative(p.sigma));
}

std::string to_string(SymmetryKind k) {
    switch (k) {
        case SymmetryKind::Basic: return "basic";
        case SymmetryKind::Power: return "power";
        case SymmetryKind::Inversion: return "inversion";
    }
    return "?";
}

namespace {

constexpr double kTol = 1e-10;
constexpr int kInversionVariants = 3;
const char* kVariantNames[kInversionVariants] = {"printed", "printed-kappa0", "corrected"};

double param_scale(const EquationParams& p) {
    return std::max({p.sigma.max_abs(), p.kappa.max_abs(), std::abs(p.omega), 1e-300});
}

EquationParams negated(const EquationParams& p) { return EquationParams(-p.sigma, -p.kappa, -p.omega); }

// roots of q2 x^2 + q1 x + q0, degrading to the linear case
std::vector<cd> quad_roots(cd q2, cd q1, cd q0, double scale) {
    if (std::abs(q2) > 1e-14 * scale) {
        cd disc = std::sqrt(q1 * q1 - 4.0 * q2 * q0);
        return {(-q1 + disc) / (2.0 * q2), (-q1 - disc) / (2.0 * q2)};
    }
    if (std::abs(q1) > 1e-14 * scale) return {-q0 / q1};
    throw NoExponent("no finite exponent for the inversion symmetry");
}

} // namespace

EquationParams symmetry_params(SymmetryKind kind, const EquationParams& p, cd* zeta_out, int variant, int root) {
    const double scale = param_scale(p);
    const cd s1 = p.sigma[1], s2 = p.sigma2(), k0 = p.kappa[0], k1 = p.kappa1(), w = p.omega;
    switch (kind) {
        case SymmetryKind::Basic: return EquationParams(p.sigma, -p.kappa, p.omega);
        case SymmetryKind::Power: {
            if (std::abs(p.sigma[0]) > 1e-14 * scale || std::abs(s1 - 1.0) > 1e-14 * scale)
                throw NotApplicable("power symmetry needs sigma(0)=0 and sigma'(0)=1");
            cd m = k0;
            return EquationParams(p.sigma, PolyC{-m, k1 - m * s2}, w - m * k1 + m * m * s2 / 2.0);
        }
        case SymmetryKind::Inversion: {
            if (std::abs(p.sigma[0]) > 1e-14 * scale) throw NotApplicable("inversion symmetry needs sigma(0)=0");
            if (std::abs(s2) <= 1e-14 * scale && std::abs(k1) <= 1e-14 * scale)
                throw NotApplicable("inversion symmetry needs sigma''!=0 or kappa'!=0");
            if (variant < 0) variant = kInversionVariants - 1;
            std::vector<cd> zs;
            if (variant == 0)
                zs = quad_roots(s2 / 2.0, s2 + k1, k1 / 2.0 + w, scale);
            else if (variant == 1)
                zs = quad_roots(s2 / 2.0, s2 + k1, k0 / 2.0 + w, scale);
            else
                zs = quad_roots(s2 / 2.0, s2 / 2.0 + k1, k1 / 2.0 + w, scale);
            cd z = zs[std::min<std::size_t>(root, zs.size() - 1)];
            if (zeta_out) *zeta_out = z;
            PolyC sig{0.0, s2 / 2.0, -s1};
            if (variant < 2)
                return EquationParams(sig, PolyC{-s2 * (1.0 + z) - k1, k0 + 2.0 * (z + 1.0) * s1},
                                      -s1 * (1.0 + z) * (1.0 + z) - k0 * (z + 0.5));
            return EquationParams(sig, PolyC{-(s2 / 2.0) * (2.0 * z + 1.0) - k1, k0 + (2.0 * z + 1.0) * s1},
                                  -s1 * (z * z + z + 0.5) - k0 * (z + 0.5));
        }
    }
    throw InvalidArgument("unknown symmetry");
}

namespace {

DiffOp transformed_lhs(SymmetryKind kind, const EquationParams& p, cd zeta) {
    DiffOp op = hgc_operator(p);
    switch (kind) {
        case SymmetryKind::Basic: return gauge_conjugate(op, weight_form(p), false);
        case SymmetryKind::Power: return gauge_conjugate(op, WeightForm::power(0.0, p.kappa[0]), false);
        case SymmetryKind::Inversion: {
            DiffOp g = gauge_conjugate(op, WeightForm::power(0.0, -zeta), false);
            g = DiffOp(PolyC{0.0, -1.0}) * g;
            return mobius_substitute(g, 0.0, -1.0, 1.0, 0.0);
        }
    }
    return op;
}

struct Attempt {
    EquationParams q;
    double residual;
    cd zeta;
    int variant;
};

Attempt best_attempt(SymmetryKind kind, const EquationParams& p) {
    if (kind != SymmetryKind::Inversion) {
        EquationParams q = symmetry_params(kind, p);
        return {q, residual(transformed_lhs(kind, p, 0.0), hgc_operator(q)), 0.0, -1};
    }
    Attempt best{p, 1e300, 0.0, -1};
    for (int v = 0; v < kInversionVariants; ++v) {
        for (int r = 0; r < 2; ++r) {
            cd z;
            EquationParams q = symmetry_params(kind, p, &z, v, r);
            double res = residual(transformed_lhs(kind, p, z), hgc_operator(q));
            if (res < best.residual) best = {q, res, z, v};
            if (res < kTol) return best;
        }
    }
    return best;
}

} // namespace

SymmetryReport verify_symmetry(SymmetryKind kind, const EquationParams& p) {
    SymmetryReport rep;
    rep.kind = kind;
    Attempt a = best_attempt(kind, p);
    rep.transformed = a.q;
    rep.residual = a.residual;
    if (kind == SymmetryKind::Inversion) {
        rep.zeta = a.zeta;
        rep.variant = kVariantNames[a.variant];
        double best = 1e300;
        for (int r = 0; r < 2; ++r) {
            EquationParams back = symmetry_params(kind, a.q, nullptr, a.variant, r);
            best = std::min({best, rel_diff(back, p), rel_diff(back, negated(p))});
        }
        rep.twice_residual = best;
    } else {
        rep.twice_residual = rel_diff(symmetry_params(kind, a.q), p);
    }
    return rep;
}

double FactorizationReport::max_residual() const {
    return std::max({factor_residual_up, factor_residual_down, transmutation_residual_up,
                     transmutation_residual_down, constant_gap_residual});
}

FactorizationReport verify_factorization(const EquationParams& p, cd n) {
    FactorizationReport r;
    const cd s2 = p.sigma2(), k1 = p.kappa1();
    DiffOp Hn = hgc_operator(ladder_params(p, n));
    DiffOp Hn1 = hgc_operator(ladder_params(p, n + 1.0));
    DiffOp D = DiffOp::d();
    DiffOp low_n1 = lowering_operator(p, n + 1.0);
    DiffOp low_n = lowering_operator(p, n);

    cd c_up = n * (n + 1.0) * s2 / 2.0 + (n + 0.5) * k1 + p.omega;
    cd c_down = n * (n - 1.0) * s2 / 2.0 + (n - 0.5) * k1 + p.omega;
    r.factor_residual_up = residual(Hn, low_n1 * D + DiffOp(c_up));
    r.factor_residual_down = residual(Hn, D * low_n + DiffOp(c_down));
    r.transmutation_residual_up = residual(D * Hn, Hn1 * D);
    r.transmutation_residual_down = residual(low_n1 * Hn1, Hn * low_n1);
    cd gap = c_down - c_up, expect = -s2 * n - k1;
    r.constant_gap_residual = std::abs(gap - expect) / std::max({std::abs(gap), std::abs(expect), 1.0});
    return r;
}

double verify_descending_product(const EquationParams& p, int n, int max_degree) {
    DiffOp lhs(cd(1));
    for (int j = n - 1; j >= 0; --j) lhs = lhs * lowering_operator(p, -double(j));
    // sigma^n rho^{-1} d^n rho = sum_k C(n,k) sigma^{n-k} q_k d^{n-k},
    // q_0 = 1, q_{k+1} = sigma q_k' + (kappa - k sigma') q_k
    PolyC ds = derivative(p.sigma), q(cd(1));
    DiffOp rhs;
    double binom = 1.0;
    for (int k = 0; k <= n; ++k) {
        rhs = rhs + DiffOp::term(n - k, RatFun(binom * pow(p.sigma, n - k) * q));
        q = p.sigma * derivative(q) + (p.kappa - double(k) * ds) * q;
        binom = binom * double(n - k) / double(k + 1);
    }
    double res = residual(lhs, rhs);
    for (int k = 0; k <= max_degree; ++k) {
        RatFun f(PolyC::monomial(k));
        res = std::max(res, rel_diff(lhs.apply(f), rhs.apply(f)));
    }
    return res;
}

} // namespace hgc
