#include "hgc/classify.hpp"

#include <algorithm>

#include "hgc/errors.hpp"

namespace hgc {

namespace {

constexpr double kZeroTol = 1e-12;

bool is_small(cd v, double scale) { return std::abs(v) <= kZeroTol * std::max(scale, 1e-300); }

bool root_less(cd a, cd b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

std::pair<cd, cd> quadratic_pair(cd sum, cd prod) {
    cd disc = std::sqrt(sum * sum - 4.0 * prod);
    cd r1 = (sum + disc) / 2.0, r2 = (sum - disc) / 2.0;
    if (root_less(r2, r1)) std::swap(r1, r2);
    return {r1, r2};
}

} // namespace

std::string to_string(NormalType t) {
    switch (t) {
        case NormalType::Gauss2F1: return "Gauss2F1";
        case NormalType::Kummer1F1: return "Kummer1F1";
        case NormalType::TwoF0: return "TwoF0";
        case NormalType::ZeroF1: return "ZeroF1";
        case NormalType::Hermite: return "Hermite";
        case NormalType::Airy: return "Airy";
        case NormalType::EulerI: return "EulerI";
        case NormalType::EulerII: return "EulerII";
        case NormalType::Helmholtz1d: return "Helmholtz1d";
        case NormalType::Laplace1d: return "Laplace1d";
    }
    return "?";
}

cd NormalFormReport::param(const std::string& name) const {
    for (const auto& [k, v] : normal_params)
        if (k == name) return v;
    throw InvalidArgument("no normal parameter " + name);
}

RiemannOperator normal_form_operator(NormalType t, const std::vector<std::pair<std::string, cd>>& params) {
    auto get = [&](const char* n) {
        for (const auto& [k, v] : params)
            if (k == n) return v;
        throw InvalidArgument(std::string("missing normal parameter ") + n);
    };
    switch (t) {
        case NormalType::Gauss2F1: {
            cd a = get("a"), b = get("b"), c = get("c");
            return {PolyC{0.0, 1.0, -1.0}, PolyC{c, -(a + b + 1.0)}, RatFun(-a * b)};
        }
        case NormalType::TwoF0: {
            cd a = get("a"), b = get("b");
            return {PolyC{0.0, 0.0, 1.0}, PolyC{-1.0, a + b + 1.0}, RatFun(a * b)};
        }
        case NormalType::Kummer1F1: {
            cd a = get("a"), c = get("c");
            return {PolyC{0.0, 1.0}, PolyC{c, -1.0}, RatFun(-a)};
        }
        case NormalType::ZeroF1: return {PolyC{0.0, 1.0}, PolyC(get("c")), RatFun(-1.0)};
        case NormalType::Hermite: return {PolyC(1.0), PolyC{0.0, -2.0}, RatFun(-2.0 * get("a"))};
        case NormalType::Airy: return {PolyC(1.0), RatFun(), RatFun(PolyC{0.0, 1.0})};
        case NormalType::EulerI: return {PolyC{0.0, 0.0, 1.0}, PolyC{0.0, get("c")}, RatFun()};
        case NormalType::EulerII: return {PolyC{0.0, 1.0}, PolyC(get("c")), RatFun()};
        case NormalType::Helmholtz1d: return {PolyC(1.0), RatFun(), RatFun(1.0)};
        case NormalType::Laplace1d: return {PolyC(1.0), RatFun(), RatFun()};
    }
    throw InvalidArgument("unknown normal type");
}

RiemannOperator transform_operator(const RiemannOperator& op, const NormalFormReport& r) {
    RatFun sig(op.sigma);
    RatFun L(derivative(r.gauge_exp));
    if (r.gauge_power != cd(0)) L = L + RatFun(PolyC(r.gauge_power), PolyC{-r.gauge_root, 1.0});
    RatFun tau = op.tau + RatFun(2.0) * sig * L;
    RatFun free = op.free + sig * (derivative(L) + L * L) + op.tau * L;

    cd a = r.affine_a, b = r.affine_b, d = r.scalar_divisor;
    cd ia = 1.0 / a, sh = -b / a;
    RiemannOperator out;
    out.sigma = compose_affine(op.sigma, ia, sh) * (a * a / d);
    out.tau = mobius_compose(tau, ia, sh, 0.0, 1.0) * RatFun(a / d);
    out.free = mobius_compose(free, ia, sh, 0.0, 1.0) * RatFun(1.0 / d);
    return out;
}

double rel_diff(const RiemannOperator& a, const RiemannOperator& b) {
    return std::max({rel_diff(a.sigma, b.sigma), rel_diff(a.tau, b.tau), rel_diff(a.free, b.free)});
}

NormalFormReport classify_riemann(const PolyC& sigma, const PolyC& tau, const PolyC& xi) {
    if (sigma.is_zero() || sigma.degree() > 2) throw InvalidDegree("sigma must be nonzero of degree <= 2");
    if (tau.degree() > 1) throw InvalidDegree("deg tau must be <= 1");
    if (xi.degree() > 2) throw InvalidDegree("deg xi must be <= 2");

    NormalFormReport r;
    const double scale = std::max({sigma.max_abs(), tau.max_abs(), xi.max_abs()});
    const int ds = sigma.degree();
    const cd t0 = tau[0], t1 = tau[1];

    // grounded when xi = eta * sigma
    cd eta = sigma.lead() != cd(0) ? xi[ds] / sigma.lead() : cd(0);
    bool grounded = (xi - eta * sigma).max_abs() <= kZeroTol * std::max(scale, 1e-300);

    if (!grounded) {
        r.hypergeometric_class = false;
        if (ds != 0) throw NotApplicable("non-grounded operator with non-constant sigma");
        // remove the first-order term, leaving s0 d^2 + Q
        cd s0 = sigma[0];
        PolyC Q = xi / s0 - PolyC(t1 / 2.0) - tau * tau / (4.0 * s0);
        if (Q.degree(kZeroTol) != 1)
            throw NotApplicable("non-grounded constant-sigma operator outside the Airy type");
        r.type_tag = NormalType::Airy;
        r.gauge_exp = PolyC{0.0, -t0 / (2.0 * s0), -t1 / (4.0 * s0)};
        cd a = std::pow(Q[1] / s0, 1.0 / 3.0);
        r.affine_a = a;
        r.affine_b = Q[0] * a / Q[1];
        r.scalar_divisor = s0 * a * a;
    } else if (ds == 2) {
        bool dbl = false;
        auto rs = small_roots(sigma, 1e-10, &dbl);
        cd s2 = sigma[2];
        if (!dbl) {
            std::sort(rs.begin(), rs.end(), root_less);
            cd r1 = rs[0], r2 = rs[1];
            cd a = 1.0 / (r2 - r1);
            r.type_tag = NormalType::Gauss2F1;
            r.affine_a = a;
            r.affine_b = -r1 * a;
            r.scalar_divisor = -s2;
            cd d = r.scalar_divisor;
            cd c = tau(r1) * a / d;
            cd tp = t1 / d;
            auto [pa, pb] = quadratic_pair(-tp - 1.0, -eta / d);
            r.normal_params = {{"a", pa}, {"b", pb}, {"c", c}};
        } else {
            cd rr = (rs[0] + rs[1]) / 2.0;
            cd tr = tau(rr);
            if (!is_small(tr, scale)) {
                cd a = -s2 / tr;
                r.type_tag = NormalType::TwoF0;
                r.affine_a = a;
                r.affine_b = -a * rr;
                r.scalar_divisor = s2;
                auto [pa, pb] = quadratic_pair(t1 / s2 - 1.0, eta / s2);
                r.normal_params = {{"a", pa}, {"b", pb}};
            } else {
                r.type_tag = NormalType::EulerI;
                r.affine_b = -rr;
                r.scalar_divisor = s2;
                cd c = t1 / s2;
                cd e = eta / s2;
                if (!is_small(e, scale / std::abs(s2))) {
                    auto [l1, l2] = quadratic_pair(1.0 - c, e);
                    (void)l2;
                    r.gauge_root = rr;
                    r.gauge_power = l1;
                    c += 2.0 * l1;
                }
                r.normal_params = {{"c", c}};
            }
        }
    } else if (ds == 1) {
        cd s1 = sigma[1];
        cd rr = -sigma[0] / s1;
        cd c = tau(rr) / s1;
        if (!is_small(t1, scale)) {
            r.type_tag = NormalType::Kummer1F1;
            r.scalar_divisor = -t1;
            r.affine_a = -t1 / s1;
            r.normal_params = {{"a", eta / t1}, {"c", c}};
        } else if (!is_small(eta, scale)) {
            r.type_tag = NormalType::ZeroF1;
            r.scalar_divisor = -eta;
            r.affine_a = -eta / s1;
            r.normal_params = {{"c", c}};
        } else {
            r.type_tag = NormalType::EulerII;
            r.scalar_divisor = s1;
            r.normal_params = {{"c", c}};
        }
        r.affine_b = -r.affine_a * rr;
    } else {
        cd s0 = sigma[0];
        if (!is_small(t1, scale)) {
            cd a = std::sqrt(-t1 / (2.0 * s0));
            r.type_tag = NormalType::Hermite;
            r.affine_a = a;
            r.affine_b = a * t0 / t1;
            r.scalar_divisor = a * a * s0;
            r.normal_params = {{"a", -eta / (2.0 * r.scalar_divisor)}};
        } else {
            cd e = eta;
            if (!is_small(t0, scale)) {
                cd lam = -t0 / (2.0 * s0);
                r.gauge_exp = PolyC{0.0, lam};
                e = eta - t0 * t0 / (4.0 * s0);
            }
            if (!is_small(e, scale)) {
                r.type_tag = NormalType::Helmholtz1d;
                r.scalar_divisor = e;
                r.affine_a = std::sqrt(e / s0);
            } else {
                r.type_tag = NormalType::Laplace1d;
                r.scalar_divisor = s0;
            }
        }
    }

    RiemannOperator op{sigma, RatFun(tau), RatFun(xi, sigma)};
    r.residual = rel_diff(transform_operator(op, r), normal_form_operator(r.type_tag, r.normal_params));
    return r;
}

} // namespace hgc
