#include "hgc/chebyshev.hpp"

#include <numbers>

#include "hgc/errors.hpp"
#include "hgc/expr.hpp"
#include "hgc/gamma.hpp"
#include "hgc/quad.hpp"

namespace hgc {

std::string to_string(ChebyshevKind k) {
    switch (k) {
        case ChebyshevKind::TwoF1Sin: return "TwoF1Sin";
        case ChebyshevKind::TwoF1Cos: return "TwoF1Cos";
        case ChebyshevKind::ZeroF1Sinh: return "ZeroF1Sinh";
        case ChebyshevKind::ZeroF1Cosh: return "ZeroF1Cosh";
    }
    return "?";
}

namespace {

const double kSqrtPi = std::sqrt(std::numbers::pi);
const cd I(0, 1);

Expr kernel(ChebyshevKind kind, cd lambda) {
    Expr z = Expr::var();
    switch (kind) {
        case ChebyshevKind::ZeroF1Sinh: return sinh(Expr(2.0) * sqrt(z)) / sqrt(z);
        case ChebyshevKind::ZeroF1Cosh: return cosh(Expr(2.0) * sqrt(z)) / sqrt(z);
        case ChebyshevKind::TwoF1Sin:
        case ChebyshevKind::TwoF1Cos: {
            Expr s = sqrt(Expr(1.0) - z * z);
            Expr up = pow(z + Expr(I) * s, lambda), dn = pow(z - Expr(I) * s, lambda);
            return (kind == ChebyshevKind::TwoF1Cos ? up + dn : up - dn) / s;
        }
    }
    return Expr(0.0);
}

// d^k kernel at w = 1 for the sine kernel, which is analytic there
cd sin_kernel_derivative_at_one(const Expr& K, int k) {
    const double r = 0.25;
    auto f = [&](cd t) { return K.eval(t) / std::pow(t - 1.0, k + 1); };
    QuadResult q = integrate(f, circle(1.0, r, 64));
    double fact = 1.0;
    for (int j = 2; j <= k; ++j) fact *= j;
    return fact * q.value / (2.0 * std::numbers::pi * I);
}

} // namespace

EvalResult chebyshev_eval(ChebyshevKind kind, int k, cd lambda, cd z) {
    if (k < 0) throw InvalidArgument("k must be non-negative");
    EvalResult r;
    r.method = EvalMethod::ClosedForm;
    r.terms_used = 1;
    const Expr K = kernel(kind, lambda);
    switch (kind) {
        case ChebyshevKind::ZeroF1Sinh: {
            if (z == cd(0)) {
                // d^k sinh(2 sqrt z)/sqrt z at 0 = k! 2^{2k+1} / (2k+1)!
                double v = 2.0;
                for (int j = 1; j <= k; ++j) v *= 4.0 * j / ((2.0 * j) * (2.0 * j + 1.0));
                r.value = v / kSqrtPi;
                return r;
            }
            r.value = K.derivative(k).eval(z) / kSqrtPi;
            return r;
        }
        case ChebyshevKind::ZeroF1Cosh:
            if (z == cd(0)) throw DomainError("cosh kernel is singular at z = 0");
            r.value = std::pow(z, 0.5 + k) / kSqrtPi * K.derivative(k).eval(z);
            return r;
        case ChebyshevKind::TwoF1Cos: {
            if (z == cd(1) || z == cd(-1)) throw DomainError("cos kernel is singular at w = +-1");
            cd pre = std::pow(1.0 - z * z, 0.5 + k) / (2.0 * kSqrtPi * std::pow(cd(-2.0), k));
            r.value = pre * K.derivative(k).eval(z);
            return r;
        }
        case ChebyshevKind::TwoF1Sin: {
            if (z == cd(-1)) throw DomainError("sin kernel has a branch point at w = -1");
            cd poch = pochhammer(lambda - double(k), 2 * k + 1);
            if (poch == cd(0)) throw PoleInParameters("(lambda - k)_{2k+1} vanishes");
            cd pre = std::pow(2.0, k) / (I * kSqrtPi * poch);
            cd d = z == cd(1) ? sin_kernel_derivative_at_one(K, k) : K.derivative(k).eval(z);
            r.value = pre * d;
            return r;
        }
    }
    return r;
}

cd chebyshev_partner(ChebyshevKind kind, int k, cd lambda, cd z, bool swapped) {
    switch (kind) {
        case ChebyshevKind::ZeroF1Sinh:
            return eval_classical(ClassicalType::ZeroF1, {0.0, 0.0, 1.5 + k}, z, true).value;
        case ChebyshevKind::ZeroF1Cosh:
            return eval_classical(ClassicalType::ZeroF1, {0.0, 0.0, 0.5 - k}, z, true).value;
        case ChebyshevKind::TwoF1Sin:
        case ChebyshevKind::TwoF1Cos: {
            bool upper = (kind == ChebyshevKind::TwoF1Cos) != swapped;
            NamedParams np = upper ? NamedParams{1.0 + k + lambda, 1.0 + k - lambda, 1.5 + k}
                                   : NamedParams{-double(k) + lambda, -double(k) - lambda, 0.5 - k};
            return eval_classical(ClassicalType::Gauss2F1, np, (1.0 - z) / 2.0, true).value;
        }
    }
    return 0.0;
}

std::vector<ChebyshevCheck> chebyshev_pairing_report(cd lambda, cd w, cd z, int kmax, double tol) {
    std::vector<ChebyshevCheck> out;
    for (ChebyshevKind kind :
         {ChebyshevKind::ZeroF1Sinh, ChebyshevKind::ZeroF1Cosh, ChebyshevKind::TwoF1Cos, ChebyshevKind::TwoF1Sin}) {
        bool two = kind == ChebyshevKind::TwoF1Cos || kind == ChebyshevKind::TwoF1Sin;
        cd arg = two ? w : z;
        for (int k = 0; k <= kmax; ++k) {
            ChebyshevCheck c;
            c.kind = kind;
            c.k = k;
            c.closed_form = chebyshev_eval(kind, k, lambda, arg).value;
            c.partner = chebyshev_partner(kind, k, lambda, arg, false);
            c.partner_swapped = two ? chebyshev_partner(kind, k, lambda, arg, true) : c.partner;
            c.ratio = c.partner / c.closed_form;
            c.ratio_swapped = c.partner_swapped / c.closed_form;
            c.matches = std::abs(c.ratio - 1.0) <= tol;
            c.matches_swapped = std::abs(c.ratio_swapped - 1.0) <= tol;
            out.push_back(c);
        }
    }
    return out;
}

namespace {

cd y_integral(const PolyC& sigma, cd from, cd to) {
    if (from == to) return 0.0;
    auto f = [&](cd x) { return 1.0 / std::sqrt(sigma(x)); };
    return integrate(f, segment(from, to)).value;
}

} // namespace

double chebyshev_residual(const PolyC& sigma, cd omega, const ChebyshevResidualOptions& o) {
    const cd q = o.sqrt_reading ? std::sqrt(omega) : omega;
    const PolyC ds = derivative(sigma);
    const cd s2 = 2.0 * sigma[2];
    auto candidate = [&](cd z, cd y) {
        cd v = o.use_cos ? std::cos(q * y) : std::sin(q * y);
        return o.plus_half ? v / std::sqrt(sigma(z)) : v;
    };
    // residuals against the largest term over all samples; a single sample may sit on a zero
    double worst = 0.0, scale = 1e-300;
    for (cd z : o.samples) {
        // y(z +- h) from y(z) plus short pieces keeps the second difference clean
        cd y0 = y_integral(sigma, 0.0, z);
        cd yp = y0 + y_integral(sigma, z, z + o.h), ym = y0 - y_integral(sigma, z - o.h, z);
        cd u0 = candidate(z, y0), up = candidate(z + o.h, yp), um = candidate(z - o.h, ym);
        cd u2 = (up - 2.0 * u0 + um) / (o.h * o.h);
        cd u1 = (up - um) / (2.0 * o.h);
        cd a = sigma(z), b = (o.plus_half ? 1.5 : 0.5) * ds(z), c = omega + (o.plus_half ? s2 / 2.0 : cd(0));
        cd res = a * u2 + b * u1 + c * u0;
        scale = std::max(scale, std::abs(a * u2) + std::abs(b * u1) + std::abs(c * u0));
        worst = std::max(worst, std::abs(res));
    }
    return worst / scale;
}

} // namespace hgc
