#include "hgc/representations.hpp"

#include <numbers>

#include "hgc/errors.hpp"
#include "hgc/gamma.hpp"
#include "hgc/series.hpp"

namespace hgc {

namespace {

const cd I(0, 1);
const double kPi = std::numbers::pi;

// log of a weight at a node; power factors either continued along the path or principal
struct TrackedWeight {
    WeightForm w;
    std::vector<ContinuousLog> logs;

    explicit TrackedWeight(WeightForm wf) : w(std::move(wf)) {
        for (const auto& f : w.power_factors) logs.emplace_back(f.root);
    }
    void reset() {
        for (auto& l : logs) l.reset();
    }
    cd log(const Node& nd, bool track) {
        cd acc = std::log(w.scale);
        for (std::size_t i = 0; i < w.power_factors.size(); ++i) {
            const auto& f = w.power_factors[i];
            if (f.exponent == cd(0)) continue;
            cd d = nd.minus(f.root);
            acc += f.exponent * (track ? logs[i].from_diff(d) : std::log(d));
        }
        acc += w.exp_poly(nd.s);
        if (w.exp_pole) acc += w.exp_pole->residue / nd.minus(w.exp_pole->root);
        return acc;
    }
};

// node sitting at a contour end, nudged inward so the offsets stay exact
Node end_node(const Endpoint& e, bool finite) {
    Node nd;
    if (!finite) {
        nd.s = e.point;
        return nd;
    }
    const double delta = 1e-300;
    nd.start = e.point;
    nd.from_start = e.inward * delta;
    nd.has_start = true;
    nd.s = e.point + nd.from_start;
    return nd;
}

bool finite_end(const ContourSpec& c, const Endpoint& e) {
    if (std::holds_alternative<Segment>(c.variant)) return true;
    if (auto* hl = std::get_if<HalfLineDE>(&c.variant)) return e.point == hl->start;
    if (auto* hk = std::get_if<HankelLoop>(&c.variant)) return hk->stem_length > 0;
    return false;
}

// sum over ends of sign * exp(logB)
template <class LogB>
cd boundary_sum(const ContourSpec& c, LogB logB) {
    cd acc = 0.0;
    for (const auto& e : contour_endpoints(c, kFar)) {
        cd l = logB(end_node(e, finite_end(c, e)));
        if (std::isnan(l.real())) continue;
        acc += e.sign * std::exp(l);
    }
    return acc;
}

void flag(QuadResult& q) {
    q.boundary_nonzero = !(std::abs(q.boundary_term) <= kBoundaryTol * std::max(std::abs(q.value), 1e-300));
}

// roots close to a root of ref are snapped onto it so the factors merge
WeightForm sigma_as_weight(const PolyC& sigma, const WeightForm& ref = {}) {
    WeightForm w;
    w.scale = sigma.lead();
    for (cd r : roots(sigma)) {
        for (const auto& f : ref.power_factors)
            if (std::abs(r - f.root) <= 1e-12 * (1.0 + std::abs(r))) r = f.root;
        w = w * WeightForm::power(r, 1.0);
    }
    return w;
}

} // namespace

QuadResult euler_transform(const PolyC& sigma, const PolyC& kappa0, cd n, const ContourSpec& c, cd z,
                           bool normalized) {
    TrackedWeight rinv(weight_form(sigma, kappa0).inverse());
    ContinuousLog lz(z);
    auto f = [&](const Node& nd) {
        return std::exp(-(n + 1.0) * lz.from_diff(nd.minus(z)) + rinv.log(nd, true));
    };
    QuadResult q = integrate_nodes(f, c, [&] {
        rinv.reset();
        lz.reset();
    });
    if (!c.closed()) {
        WeightForm inv = weight_form(sigma, kappa0).inverse();
        WeightForm bw = sigma_as_weight(sigma, inv) * inv *
                        WeightForm::power(z, -n - 2.0);
        TrackedWeight tb(bw);
        q.boundary_term = boundary_sum(c, [&](const Node& nd) { return tb.log(nd, false); });
    }
    if (normalized) {
        cd rg = rgamma(n + 1.0);
        q.value *= rg;
        q.err_estimate *= std::abs(rg);
        q.boundary_term *= rg;
    }
    flag(q);
    return q;
}

WeightForm laplace_kernel(const PolyC& sigma, const PolyC& kappa0) {
    if (sigma.degree() > 1) throw NotApplicable("Laplace integrals need sigma'' = 0");
    PolyC st{kappa0[1], sigma[1]}, kt{kappa0[0] - sigma[1], sigma[0]};
    if (st.is_zero()) throw NotApplicable("the kernel equation degenerates for constant sigma and kappa0");
    return weight_form(st, kt);
}

QuadResult laplace_transform(const PolyC& sigma, const PolyC& kappa0, cd n, const ContourSpec& c, cd z) {
    WeightForm d0 = laplace_kernel(sigma, kappa0);
    TrackedWeight td(d0 * WeightForm::power(0.0, n));
    auto f = [&](const Node& nd) { return std::exp(td.log(nd, true) + z * nd.s); };
    QuadResult q = integrate_nodes(f, c, [&] { td.reset(); });
    if (!c.closed()) {
        // s^{n+1} (sigma' s + kappa0') delta0 e^{s z}
        PolyC lin{kappa0[1], sigma[1]};
        WeightForm bw = d0 * WeightForm::power(0.0, n + 1.0) * sigma_as_weight(lin);
        TrackedWeight tb(bw);
        q.boundary_term = boundary_sum(c, [&](const Node& nd) { return tb.log(nd, false) + z * nd.s; });
    }
    flag(q);
    return q;
}

std::string to_string(ReprName r) {
    switch (r) {
        case ReprName::Repr2F1Euler: return "Repr2F1Euler";
        case ReprName::Repr1F1Hankel: return "Repr1F1Hankel";
        case ReprName::Repr1F1Algebraic: return "Repr1F1Algebraic";
        case ReprName::Repr2F0: return "Repr2F0";
        case ReprName::Repr0F1Loop: return "Repr0F1Loop";
        case ReprName::ReprHermiteLaplace: return "ReprHermiteLaplace";
        case ReprName::ReprHermiteEuler: return "ReprHermiteEuler";
        case ReprName::PsiLoop: return "PsiLoop";
        case ReprName::PsiTildeLoop: return "PsiTildeLoop";
    }
    return "?";
}

ReprName repr_from_string(const std::string& s) {
    for (ReprName r : {ReprName::Repr2F1Euler, ReprName::Repr1F1Hankel, ReprName::Repr1F1Algebraic, ReprName::Repr2F0,
                       ReprName::Repr0F1Loop, ReprName::ReprHermiteLaplace, ReprName::ReprHermiteEuler,
                       ReprName::PsiLoop, ReprName::PsiTildeLoop})
        if (to_string(r) == s) return r;
    throw InvalidArgument("unknown representation: " + s);
}

cd psi_kernel(const DegenerateParams& dp, cd z, cd u, bool tilde) {
    if (!tilde) return powexp(-dp.a, dp.mu, u) * powexp(-dp.b, dp.nu, z / u);
    return powexp(-dp.a, dp.mu, z / u) * powexp(-dp.b, dp.nu, u);
}

double psi_annulus_radius(const DegenerateParams& dp, cd z, bool tilde) {
    cd inner_c = tilde ? dp.mu : dp.nu, outer_c = tilde ? dp.nu : dp.mu;
    double lo = std::abs(z * inner_c);
    double hi = outer_c == cd(0) ? 1e300 : 1.0 / std::abs(outer_c);
    if (!(lo < hi)) throw NotApplicable("the Laurent annulus of the generating kernel is empty");
    if (hi >= 1e300) return lo > 0 ? 2.0 * lo : 1.0;
    if (lo == 0) return std::min(1.0, 0.5 * hi);
    return std::sqrt(lo * hi);
}

cd psi_laurent_coefficient(const DegenerateParams& dp, cd z, int m, double radius, bool tilde) {
    auto f = [&](cd u) { return psi_kernel(dp, z, u, tilde) * std::pow(u, -m - 1); };
    return integrate(f, circle(0.0, radius, 128)).value / (2.0 * kPi * I);
}

cd psi_series(const DegenerateParams& dp, cd z, bool tilde, double tol, int max_terms) {
    // coefficients of (1 + mu u)^{-a/mu} = sum_j u^j prod_{i<j}(-a - i mu)/j!
    auto coeff = [](cd a, cd mu, int j) {
        cd c = 1.0;
        for (int i = 0; i < j; ++i) c *= (-a - double(i) * mu) / double(i + 1);
        return c;
    };
    // Psi_m = sum_k A_{m+k} B_k z^k; Psi~_m = sum_k A_k B_{m+k} z^k
    const int m = dp.m;
    cd sum = 0.0, zk = 1.0;
    int small = 0;
    for (int k = 0; k < max_terms; ++k, zk *= z) {
        int ja = tilde ? k : m + k, jb = tilde ? m + k : k;
        if (ja < 0 || jb < 0) continue;
        cd t = coeff(dp.a, dp.mu, ja) * coeff(dp.b, dp.nu, jb) * zk;
        sum += t;
        small = std::abs(t) <= tol * std::abs(sum) ? small + 1 : 0;
        if (small >= 3) return sum;
    }
    throw NoConvergence("Psi series did not converge", std::abs(sum));
}

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw NotApplicable(what);
}

ReprResult finish(QuadResult q, cd pref) {
    ReprResult r;
    r.quad = q;
    r.prefactor = pref;
    r.value = q.value / pref;
    return r;
}

} // namespace

ReprResult named_representation(ReprName name, const ReprArgs& args, cd z) {
    const cd a = args.np.a, b = args.np.b, c = args.np.c;
    switch (name) {
        case ReprName::Repr2F1Euler: {
            require(a.real() > 0 && (c - a).real() > 0, "needs Re a > 0 and Re(c - a) > 0");
            if (std::abs(z.imag()) <= 1e-300 && z.real() >= 1) throw NotApplicable("needs z outside [1, inf)");
            ContourSpec cs = half_line(1.0, 1.0);
            auto logf = [&](const Node& nd, cd e1, cd e2, cd e3) {
                return e1 * std::log(nd.s) + e2 * std::log(nd.minus(1.0)) + e3 * std::log(nd.minus(z));
            };
            QuadResult q = integrate_nodes([&](const Node& nd) { return std::exp(logf(nd, b - c, c - a - 1.0, -b)); }, cs);
            q.boundary_term = boundary_sum(cs, [&](const Node& nd) { return logf(nd, b - c + 1.0, c - a, -b - 1.0); });
            flag(q);
            return finish(q, gamma(a) * gamma(c - a));
        }
        case ReprName::Repr1F1Hankel: {
            ContourSpec cs = hankel({0.0, z});
            if (args.radius > 0) std::get<HankelLoop>(cs.variant).cap_radius = args.radius;
            ContinuousLog l0(0.0), lz(z);
            auto f = [&](const Node& nd) {
                return std::exp((a - c) * l0.from_diff(nd.s) + nd.s - a * lz.from_diff(nd.minus(z)));
            };
            QuadResult q = integrate_nodes(f, cs, [&] {
                l0.reset();
                lz.reset();
            });
            q.boundary_term = boundary_sum(cs, [&](const Node& nd) {
                return (a - c + 1.0) * std::log(nd.s) + nd.s - (a + 1.0) * std::log(nd.minus(z));
            });
            flag(q);
            return finish(q, 2.0 * kPi * I);
        }
        case ReprName::Repr1F1Algebraic: {
            require(a.real() > 0 && (c - a).real() > 0, "needs Re a > 0 and Re(c - a) > 0");
            ContourSpec cs = half_line(1.0, 1.0);
            QuadResult q = integrate_nodes(
                [&](const Node& nd) {
                    return std::exp(z / nd.s - c * std::log(nd.s) + (c - a - 1.0) * std::log(nd.minus(1.0)));
                },
                cs);
            q.boundary_term = boundary_sum(
                cs, [&](const Node& nd) { return z / nd.s - c * std::log(nd.s) + (c - a) * std::log(nd.minus(1.0)); });
            flag(q);
            return finish(q, gamma(a) * gamma(c - a));
        }
        case ReprName::Repr2F0: {
            require(a.real() > 0, "needs Re a > 0");
            if (std::abs(z.imag()) <= 1e-300 && z.real() >= 0) throw NotApplicable("needs z outside [0, inf)");
            ContourSpec cs = half_line(0.0, 1.0);
            auto logf = [&](const Node& nd, cd e1, cd e2) {
                cd t = nd.minus(0.0);
                return -1.0 / t + e1 * std::log(t) + e2 * std::log(nd.minus(z));
            };
            QuadResult q = integrate_nodes([&](const Node& nd) { return std::exp(logf(nd, b - a - 1.0, -b)); }, cs);
            q.boundary_term = boundary_sum(cs, [&](const Node& nd) { return logf(nd, b - a - 1.0, -b - 1.0); });
            flag(q);
            return finish(q, gamma(a));
        }
        case ReprName::Repr0F1Loop: {
            double r = args.radius > 0 ? args.radius : std::max(1.0, std::sqrt(std::abs(z)));
            if (is_integer(c)) {
                int m = int(std::round(c.real())) - 1;
                auto f = [&](cd t) { return std::exp(t + z / t) * std::pow(t, -m - 1); };
                return finish(integrate(f, circle(0.0, r)), 2.0 * kPi * I);
            }
            ContourSpec cs = hankel({0.0});
            std::get<HankelLoop>(cs.variant).cap_radius = r;
            ContinuousLog l0(0.0);
            auto f = [&](const Node& nd) { return std::exp(nd.s + z / nd.s - c * l0.from_diff(nd.s)); };
            QuadResult q = integrate_nodes(f, cs, [&] { l0.reset(); });
            q.boundary_term =
                boundary_sum(cs, [&](const Node& nd) { return nd.s + z / nd.s - c * std::log(nd.s); });
            flag(q);
            return finish(q, 2.0 * kPi * I);
        }
        case ReprName::ReprHermiteLaplace: {
            require(a.real() > 0, "needs Re a > 0");
            ContourSpec cs = half_line(0.0, 1.0);
            auto logf = [&](const Node& nd, cd e) {
                cd t = nd.minus(0.0);
                return -t * t - 2.0 * z * t + e * std::log(t);
            };
            QuadResult q = integrate_nodes([&](const Node& nd) { return std::exp(logf(nd, a - 1.0)); }, cs);
            q.boundary_term = boundary_sum(cs, [&](const Node& nd) { return logf(nd, a); });
            flag(q);
            return finish(q, std::pow(cd(2.0), -a) * gamma(a));
        }
        case ReprName::ReprHermiteEuler: {
            // vertical line left of z: from x0 - i inf up to x0 + i inf
            cd x0 = z.real() - 1.0;
            auto f = [&](cd t) { return std::exp(t * t - a * std::log(z - t)); };
            QuadResult up = integrate(f, half_line(x0, I)), dn = integrate(f, half_line(x0, -I));
            QuadResult q;
            q.value = -I * (up.value - dn.value);
            q.err_estimate = up.err_estimate + dn.err_estimate;
            q.evaluations = up.evaluations + dn.evaluations;
            // e^{t^2} (t - z)^{-a-1} at both far ends
            for (double sg : {-1.0, 1.0}) {
                cd t = x0 + sg * I * kFar;
                q.boundary_term += sg * std::exp(t * t - (a + 1.0) * std::log(t - z));
            }
            flag(q);
            return finish(q, std::sqrt(kPi));
        }
        case ReprName::PsiLoop:
        case ReprName::PsiTildeLoop: {
            bool tilde = name == ReprName::PsiTildeLoop;
            double r = args.radius > 0 ? args.radius : psi_annulus_radius(args.dp, z, tilde);
            auto f = [&](cd u) { return psi_kernel(args.dp, z, u, tilde) * std::pow(u, -args.dp.m - 1); };
            return finish(integrate(f, circle(0.0, r)), 2.0 * kPi * I);
        }
    }
    throw InvalidArgument("unknown representation");
}

} // namespace hgc
