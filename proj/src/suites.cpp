#include "hgc/suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numbers>

#include "hgc/chebyshev.hpp"
#include "hgc/classify.hpp"
#include "hgc/diffop.hpp"
#include "hgc/errors.hpp"
#include "hgc/family.hpp"
#include "hgc/gamma.hpp"
#include "hgc/gen.hpp"
#include "hgc/monomial.hpp"
#include "hgc/representations.hpp"
#include "hgc/series.hpp"
#include "hgc/symmetry.hpp"
#include "hgc/weight.hpp"

namespace hgc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;
const cd I(0.0, 1.0);

double rel(cd a, cd b) {
    double s = std::max(std::abs(a), std::abs(b));
    return s > 0 ? std::abs(a - b) / s : 0.0;
}

struct Acc {
    Check c;
    Acc(std::string name, double tol) {
        c.name = std::move(name);
        c.tol = tol;
        c.samples = 0;
    }
    void add(double r) {
        ++c.samples;
        if (std::isnan(r)) r = kInf;
        c.residual = std::max(c.residual, r);
    }
    template <class F>
    void run(F&& f) {
        try {
            add(f());
        } catch (const Error& e) {
            add(kInf);
            if (c.note.empty()) c.note = std::string(e.kind()) + ": " + e.what();
        }
    }
    Check done() const { return c; }
};

// --- lie ---

EquationParams lie_draw(Gen& g, int tag) {
    cd w = g.complex(-1, 1);
    switch (tag) {
        case 0: return {PolyC{g.complex(-1, 1), g.complex(-1, 1), g.complex(0.2, 1)}, PolyC{g.complex(-1, 1), g.complex(-1, 1)}, w};
        case 1: return {PolyC{g.complex(-1, 1), g.complex(-1, 1)}, PolyC{g.complex(-1, 1), g.complex(0.2, 1)}, w};
        default: return {PolyC{g.complex(0.2, 1), g.complex(-1, 1)}, PolyC{g.complex(-1, 1)}, w};
    }
}

SuiteResult suite_lie(const SuiteOptions& o) {
    SuiteResult s{"lie", {}};
    Gen g(o.seed);
    std::vector<EquationParams> draws;
    std::vector<AlgebraTag> want;
    if (o.params) {
        draws.push_back(*o.params);
    } else {
        const AlgebraTag tags[] = {AlgebraTag::Sl2PlusC, AlgebraTag::Osc, AlgebraTag::EuclidPlusC};
        for (int i = 0; i < 25; ++i) {
            draws.push_back(lie_draw(g, i % 3));
            want.push_back(tags[i % 3]);
        }
    }
    Acc red("commutation, reduced representation", 1e-12), full("commutation, full representation", 1e-12);
    Acc tag("algebra tag", 0.5);
    for (std::size_t i = 0; i < draws.size(); ++i) {
        red.run([&] { return verify_miller_commutation(miller_generators(draws[i], MillerRep::Reduced), 8).max_residual(); });
        full.run([&] { return verify_miller_commutation(miller_generators(draws[i], MillerRep::Full), 8).max_residual(); });
        if (!want.empty()) tag.run([&] { return miller_generators(draws[i], MillerRep::Reduced).algebra_tag == want[i] ? 0.0 : 1.0; });
    }
    s.checks = {red.done(), full.done()};
    if (!want.empty()) s.checks.push_back(tag.done());
    return s;
}

// --- symmetry ---

double type_map(const EquationParams& src, const WeightForm& gauge, const PolyC& mult, cd ma, cd mb, cd mc, cd md,
                const EquationParams& dst, cd factor) {
    DiffOp lhs = DiffOp(mult) * gauge_conjugate(hgc_operator(src), gauge, false);
    lhs = mobius_substitute(lhs, ma, mb, mc, md);
    return residual(lhs, DiffOp(factor) * hgc_operator(dst));
}

SuiteResult suite_symmetry(const SuiteOptions& o) {
    SuiteResult s{"symmetry", {}};
    Gen g(o.seed + 1);
    std::vector<EquationParams> draws;
    if (o.params) {
        draws.push_back(*o.params);
    } else {
        for (int i = 0; i < 20; ++i)
            draws.push_back({PolyC{0.0, 1.0, (i % 2 ? 1.0 : -1.0) * g.complex(0.2, 1)}, PolyC{g.near_real(-2, 2, 0.5), g.complex(-1, 1)}, g.complex(-1, 1)});
        for (int i = 0; i < 10; ++i)
            draws.push_back({PolyC{g.complex(-1, 1), g.complex(-1, 1), g.complex(0.2, 1)}, PolyC{g.complex(-1, 1), g.complex(-1, 1)},
                             g.complex(-1, 1)});
        for (int i = 0; i < 5; ++i)
            draws.push_back({PolyC{0.0, g.complex(0.3, 1)}, PolyC{g.complex(-1, 1), g.complex(0.2, 1)}, g.complex(-1, 1)});
    }
    for (SymmetryKind k : {SymmetryKind::Basic, SymmetryKind::Power, SymmetryKind::Inversion}) {
        Acc once(to_string(k) + " operator identity", 1e-10), twice(to_string(k) + " applied twice", 1e-10);
        int skipped = 0;
        for (const auto& p : draws) {
            try {
                SymmetryReport r = verify_symmetry(k, p);
                once.add(r.residual);
                twice.add(r.twice_residual);
            } catch (const NotApplicable&) {
                ++skipped;
            } catch (const NoExponent&) {
                ++skipped;
            } catch (const Error& e) {
                once.add(kInf);
                once.c.note = e.what();
            }
        }
        if (once.c.samples == 0 && !o.params) once.add(kInf);
        once.c.note += (once.c.note.empty() ? "" : "; ") + std::to_string(skipped) + " draws not applicable";
        s.checks.push_back(once.done());
        s.checks.push_back(twice.done());
    }
    if (o.params) return s;

    Acc maps("per-type maps", 1e-10);
    auto P = [](ClassicalType t, cd a, cd b, cd c) { return classical_params(t, {a, b, c}); };
    using CT = ClassicalType;
    const PolyC one(1.0), zz{0.0, 1.0}, mz{0.0, -1.0};
    for (int i = 0; i < 10; ++i) {
        cd a = g.complex(-1.5, 1.5), b = g.complex(-1.5, 1.5), c = g.complex(-1.5, 1.5);
        WeightForm zc = WeightForm::power(0.0, c - 1.0);
        maps.run([&] {
            WeightForm rho = zc * WeightForm::power(1.0, a + b - c);
            return type_map(P(CT::Gauss2F1, a, b, c), rho, one, 1, 0, 0, 1, P(CT::Gauss2F1, 1.0 - b, 1.0 - a, 2.0 - c), 1.0);
        });
        maps.run([&] {
            return type_map(P(CT::Gauss2F1, a, b, c), zc, one, 1, 0, 0, 1, P(CT::Gauss2F1, b + 1.0 - c, a + 1.0 - c, 2.0 - c), 1.0);
        });
        maps.run([&] {
            return type_map(P(CT::Gauss2F1, a, b, c), WeightForm::power(0.0, a), mz, 0, 1, 1, 0,
                            P(CT::Gauss2F1, a, a - c + 1.0, a - b + 1.0), 1.0);
        });
        maps.run([&] {
            WeightForm rho = zc * WeightForm::exponential(PolyC{0.0, -1.0});
            return type_map(P(CT::Kummer1F1, a, 0, c), rho, one, -1, 0, 0, 1, P(CT::Kummer1F1, 1.0 - a, 0, 2.0 - c), -1.0);
        });
        maps.run([&] { return type_map(P(CT::Kummer1F1, a, 0, c), zc, one, 1, 0, 0, 1, P(CT::Kummer1F1, 1.0 + a - c, 0, 2.0 - c), 1.0); });
        maps.run([&] {
            return type_map(P(CT::Kummer1F1, a, 0, c), WeightForm::power(0.0, a), zz, 0, -1, 1, 0,
                            P(CT::TwoF0, a, 1.0 + a - c, 0), 1.0);
        });
        maps.run([&] {
            WeightForm rho = WeightForm::power(0.0, a + b - 1.0);
            rho.exp_pole = ExpPole{0.0, 1.0};
            return type_map(P(CT::TwoF0, a, b, 0), rho, one, -1, 0, 0, 1, P(CT::TwoF0, 1.0 - b, 1.0 - a, 0), 1.0);
        });
        maps.run([&] {
            return type_map(P(CT::TwoF0, a, b, 0), WeightForm::power(0.0, a), zz, 0, -1, 1, 0, P(CT::Kummer1F1, a, 0, 1.0 + a - b), -1.0);
        });
        maps.run([&] { return type_map(P(CT::ZeroF1, 0, 0, c), zc, one, 1, 0, 0, 1, P(CT::ZeroF1, 0, 0, 2.0 - c), 1.0); });
        maps.run([&] {
            return type_map(P(CT::Hermite, a, 0, 0), WeightForm::exponential(PolyC{0.0, 0.0, -1.0}), one, -I, 0, 0, 1,
                            P(CT::Hermite, 1.0 - a, 0, 0), -1.0);
        });
    }
    s.checks.push_back(maps.done());
    return s;
}

// --- factorization ---

SuiteResult suite_factorization(const SuiteOptions& o) {
    SuiteResult s{"factorization", {}};
    Gen g(o.seed + 2);
    Acc fac("factorization and transmutation", 1e-10), desc("descending product", 1e-10);
    for (int i = 0; i < 50; ++i) {
        EquationParams p = o.params ? *o.params
                                    : EquationParams{PolyC{g.complex(-1, 1), g.complex(-1, 1), g.complex(-1, 1)},
                                                     PolyC{g.complex(-1, 1), g.complex(-1, 1)}, g.complex(-1, 1)};
        cd n = g.complex(-2, 2);
        fac.run([&] { return verify_factorization(p, n).max_residual(); });
        if (i < 12) desc.run([&] { return verify_descending_product(p, 1 + i % 4); });
        if (o.params && i >= 11) break;
    }
    s.checks = {fac.done(), desc.done()};
    return s;
}

// --- series ---

SuiteResult suite_series(const SuiteOptions& o) {
    SuiteResult s{"series", {}};
    Gen g(o.seed + 3);
    Acc plain("unified series against classical series", 1e-12), olver("olver normalization", 1e-12);
    for (int i = 0; i < 100; ++i) {
        ClassicalType t = i % 3 == 0 ? ClassicalType::Gauss2F1 : i % 3 == 1 ? ClassicalType::Kummer1F1 : ClassicalType::ZeroF1;
        NamedParams np{g.complex(-2, 2), g.complex(-2, 2), g.near_real(0.3, 3, 0.5)};
        cd z = g.disc(t == ClassicalType::Gauss2F1 ? 0.8 : 3.0);
        EquationParams p = classical_params(t, np);
        plain.run([&] { return rel(unified_F(p, z).value, eval_classical(t, np, z).value); });
        NamedParams nq = np;
        if (i % 4 == 0) nq.c = double(-g.integer(0, 3));
        EquationParams q = classical_params(t, nq);
        olver.run([&] { return rel(olver_F(q, z).value, eval_classical(t, nq, z, true).value); });
    }
    Acc fixed("closed-form values", 1e-13);
    fixed.run([&] {
        return rel(unified_F(classical_params(ClassicalType::Gauss2F1, {1.0, 1.0, 2.0}), 0.5).value, 2.0 * std::log(2.0));
    });
    fixed.run([&] {
        return rel(olver_F(classical_params(ClassicalType::ZeroF1, {0, 0, 1.5}), 1.0).value, std::sinh(2.0) / std::sqrt(kPi));
    });
    s.checks = {plain.done(), olver.done(), fixed.done()};
    return s;
}

// --- recurrence ---

SuiteResult suite_recurrence(const SuiteOptions& o) {
    SuiteResult s{"recurrence", {}};
    Gen g(o.seed + 4);
    Acc p1("derivative lowers the unified function", 1e-9), p2("lowering operator raises the unified function", 1e-9);
    Acc p3("derivative lowers the olver function", 1e-9), p4("lowering operator raises the olver function", 1e-9);
    for (int i = 0; i < 30; ++i) {
        cd m = i % 5 == 4 ? cd(-g.integer(1, 3)) : g.near_real(0.2, 2.5, 0.3);
        EquationParams base{PolyC{0.0, 1.0, g.complex(-1, 1)}, PolyC{m, g.complex(-1, 1)}, g.complex(-1, 1)};
        cd n = g.integer(0, 2);
        cd z = g.disc(0.3);
        EquationParams pn = ladder_params(base, n), pn1 = ladder_params(base, n + 1.0);
        cd c = -(pn.omega + 0.5 * pn.kappa1());
        if (m.real() > 0) {
            p1.run([&] {
                Jet a = unified_jet(pn, z), b = unified_jet(pn1, z);
                return rel(a.d1, c / pn1.kappa[0] * b.value);
            });
            p2.run([&] {
                Jet a = unified_jet(pn, z), b = unified_jet(pn1, z);
                return rel(pn1.sigma(z) * b.d1 + pn1.kappa(z) * b.value, pn1.kappa[0] * a.value);
            });
        }
        p3.run([&] {
            Jet a = olver_jet(pn, z), b = olver_jet(pn1, z);
            return rel(a.d1, c * b.value);
        });
        p4.run([&] {
            Jet a = olver_jet(pn, z), b = olver_jet(pn1, z);
            return rel(pn1.sigma(z) * b.d1 + pn1.kappa(z) * b.value, a.value);
        });
    }

    Acc r1("derivative of the euler transform", 1e-6), r2("lowering operator on the euler transform", 1e-6);
    const PolyC sigma{0.0, 1.0, -1.0};
    for (int i = 0; i < 8; ++i) {
        double p = g.uniform(-2.5, -1.0), q = g.uniform(-0.6, 1.0), n = g.uniform(0.2, 1.5);
        cd z = g.near_real(-0.5, 0.5, 0.3);
        PolyC k0{-p, p + q};
        ContourSpec cs = half_line(1.0, 1.0);
        const double h = 1e-4;
        auto f = [&](double nn, cd zz) { return euler_transform(sigma, k0, nn, cs, zz).value; };
        r1.run([&] {
            cd d = (f(n, z + h) - f(n, z - h)) / (2 * h);
            return rel(d, (n + 1) * f(n + 1, z));
        });
        r2.run([&] {
            cd d = (f(n + 1, z + h) - f(n + 1, z - h)) / (2 * h);
            PolyC kn1 = k0 + (n + 1) * derivative(sigma);
            return rel(sigma(z) * d + kn1(z) * f(n + 1, z), -(k0[1] + 2.0 * sigma[2] * n / 2.0) * f(n, z));
        });
    }
    s.checks = {p1.done(), p2.done(), p3.done(), p4.done(), r1.done(), r2.done()};
    return s;
}

// --- integral ---

SuiteResult suite_integral(const SuiteOptions& o) {
    SuiteResult s{"integral", {}};
    Gen g(o.seed + 5);
    using RN = ReprName;
    std::map<RN, Acc> acc;
    for (RN r : {RN::Repr2F1Euler, RN::Repr1F1Hankel, RN::Repr1F1Algebraic, RN::Repr2F0, RN::Repr0F1Loop,
                 RN::ReprHermiteLaplace, RN::ReprHermiteEuler, RN::PsiLoop, RN::PsiTildeLoop})
        acc.emplace(r, Acc(to_string(r) + " against series", 1e-8));
    Acc radius("loop radius independence", 1e-10), boundary("boundary terms vanish", 1e-10);

    auto track = [&](const ReprResult& r) {
        boundary.add(std::abs(r.quad.value) > 0 ? std::abs(r.quad.boundary_term) / std::abs(r.quad.value) : 0.0);
        return r.value;
    };
    auto repr = [&](RN name, const ReprArgs& a, cd z) { return track(named_representation(name, a, z)); };

    for (int i = 0; i < 20; ++i) {
        {
            cd a = g.near_real(0.2, 2, 0.5), c = a + g.near_real(0.2, 2, 0.5), b = g.complex(-1, 2), z = g.disc(0.9);
            NamedParams np{a, b, c};
            acc.at(RN::Repr2F1Euler).run([&] {
                return rel(repr(RN::Repr2F1Euler, {np, {}, 0}, z), eval_classical(ClassicalType::Gauss2F1, np, z, true).value);
            });
        }
        {
            NamedParams np{g.complex(-1, 2), 0, g.near_real(0.3, 3, 0.5)};
            cd z = g.disc(3);
            acc.at(RN::Repr1F1Hankel).run([&] {
                return rel(repr(RN::Repr1F1Hankel, {np, {}, 0}, z), eval_classical(ClassicalType::Kummer1F1, np, z, true).value);
            });
        }
        {
            cd a = g.near_real(0.2, 2, 0.5), c = a + g.near_real(0.2, 2, 0.5), z = g.disc(3);
            NamedParams np{a, 0, c};
            acc.at(RN::Repr1F1Algebraic).run([&] {
                return rel(repr(RN::Repr1F1Algebraic, {np, {}, 0}, z), eval_classical(ClassicalType::Kummer1F1, np, z, true).value);
            });
        }
        {
            cd a = g.near_real(0.2, 2, 0.5), b = g.complex(-1, 2);
            cd z = std::polar(g.uniform(0.05, 1.5), kPi * g.uniform(0.55, 1.45));
            acc.at(RN::Repr2F0).run([&] { return rel(repr(RN::Repr2F0, {{a, b, 0}, {}, 0}, z), f20_general(a, b, z).value); });
        }
        {
            cd c = i % 4 == 0 ? cd(g.integer(-2, 3)) : g.near_real(-1.5, 3, 0.5);
            cd z = g.disc(3);
            NamedParams np{0, 0, c};
            acc.at(RN::Repr0F1Loop).run([&] {
                return rel(repr(RN::Repr0F1Loop, {np, {}, 0}, z), eval_classical(ClassicalType::ZeroF1, np, z, true).value);
            });
            radius.run([&] {
                cd v1 = named_representation(RN::Repr0F1Loop, {np, {}, 0.5}, z).value;
                double d = 0;
                for (double r : {1.0, 2.0}) d = std::max(d, rel(v1, named_representation(RN::Repr0F1Loop, {np, {}, r}, z).value));
                return d;
            });
        }
        {
            cd a = g.near_real(0.2, 2.5, 0.5), z = g.near_real(-1, 2, 1);
            acc.at(RN::ReprHermiteLaplace).run([&] {
                return rel(repr(RN::ReprHermiteLaplace, {{a, 0, 0}, {}, 0}, z), eval_classical(ClassicalType::Hermite, {a, 0, 0}, z).value);
            });
        }
        {
            cd a = g.complex(-2, 2), z = g.near_real(0.2, 2, 1);
            acc.at(RN::ReprHermiteEuler).run([&] {
                return rel(repr(RN::ReprHermiteEuler, {{a, 0, 0}, {}, 0}, z), eval_classical(ClassicalType::Hermite, {a, 0, 0}, z).value);
            });
        }
        {
            DegenerateParams dp{g.complex(-1, 1), g.complex(-1, 1), g.complex(-0.55, 0.55), g.complex(-0.55, 0.55), g.integer(-2, 2)};
            cd z = g.disc(0.8);
            for (bool tilde : {false, true}) {
                RN name = tilde ? RN::PsiTildeLoop : RN::PsiLoop;
                acc.at(name).run([&] { return rel(repr(name, {{}, dp, 0}, z), psi_series(dp, z, tilde)); });
                radius.run([&] {
                    double lo = tilde ? std::abs(z * dp.mu) : std::abs(z * dp.nu);
                    double hi = 1.0 / std::abs(tilde ? dp.nu : dp.mu);
                    if (lo == 0) lo = hi * 1e-3;
                    cd ref = named_representation(name, {{}, dp, std::sqrt(lo * hi)}, z).value;
                    double d = 0;
                    for (double t : {0.25, 0.75})
                        d = std::max(d, rel(ref, named_representation(name, {{}, dp, std::pow(lo, 1 - t) * std::pow(hi, t)}, z).value));
                    return d;
                });
            }
        }
    }
    for (auto& [k, a] : acc) s.checks.push_back(a.done());
    s.checks.push_back(radius.done());
    s.checks.push_back(boundary.done());
    return s;
}

// --- f20 ---

SuiteResult suite_f20(const SuiteOptions& o) {
    SuiteResult s{"f20", {}};
    Gen g(o.seed + 6);
    Acc term("terminating cases", 1e-13);
    for (int n = 0; n <= 5; ++n) {
        for (int i = 0; i < 3; ++i) {
            cd b = g.complex(-2, 2), w = g.complex(-2, 2);
            if (i == 0) w = g.uniform(0.1, 3);
            cd sum = 0, t = 1;
            for (int j = 0; j <= n; ++j) {
                sum += t;
                t *= (double(j) - n) * (b + double(j)) * w / double(j + 1);
            }
            term.run([&] { return rel(f20_general(-double(n), b, w).value, sum); });
        }
    }
    Acc scale("remainder scales like r^(n+1)", 10.0);
    const cd a = 1.5, b = 0.5, dir = std::polar(1.0, 0.75 * kPi);
    for (int n = 0; n <= 6; ++n) {
        scale.run([&] {
            std::vector<double> q;
            for (double r : {0.2, 0.1, 0.05}) {
                cd w = r * dir;
                q.push_back(std::abs(f20_general(a, b, w).value - f20_partial_sum(a, b, w, n + 1)) / std::pow(r, n + 1));
            }
            return *std::max_element(q.begin(), q.end()) / *std::min_element(q.begin(), q.end());
        });
    }
    Acc cont("continued form against the integral", 1e-8);
    for (int i = 0; i < 20; ++i) {
        cd aa = g.near_real(1, 3, 0.5), bb = g.complex(-1.5, 1.5);
        cd w = std::polar(g.uniform(0.05, 2), kPi * g.uniform(0.55, 1.45));
        int n = g.integer(1, 3);
        cont.run([&] { return rel(f20_continued(aa, bb, w, n).value, f20_general(aa, bb, w).value); });
    }
    s.checks = {term.done(), scale.done(), cont.done()};
    return s;
}

// --- orthogonality ---

FamilySpec family_draw(Gen& g, FamilyKind k) {
    switch (k) {
        case FamilyKind::Jacobi: return FamilySpec::jacobi(g.uniform(-0.9, 3), g.uniform(-0.9, 3));
        case FamilyKind::Laguerre: return FamilySpec::laguerre(g.uniform(-0.9, 3));
        case FamilyKind::BesselPoly: return FamilySpec::bessel(g.uniform(-3, 3));
        case FamilyKind::HermitePoly: return FamilySpec::hermite();
    }
    return FamilySpec::hermite();
}

SuiteResult suite_orthogonality(const SuiteOptions& o) {
    SuiteResult s{"orthogonality", {}};
    Gen g(o.seed + 7);
    const FamilyKind kinds[] = {FamilyKind::Jacobi, FamilyKind::Laguerre, FamilyKind::BesselPoly, FamilyKind::HermitePoly};

    Acc hyp("rodrigues against hypergeometric form", 1e-10), gen("generating functions", 1e-10);
    Acc eig("eigen equation", 1e-10), rec("ladder recurrences", 1e-10), cont("rodrigues contour", 1e-10);
    for (FamilyKind k : kinds) {
        for (int i = 0; i < 4; ++i) {
            FamilySpec f = family_draw(g, k);
            for (int n = 0; n <= 10; ++n) {
                double sg = k == FamilyKind::BesselPoly && n % 2 ? -1.0 : 1.0;
                hyp.run([&] { return rel_diff(classical_poly(f, n), sg * hypergeometric_poly(f, n)); });
                eig.run([&] {
                    EigenReport e = eigen_residual(f, n);
                    return std::max(e.residual, e.degree_relation);
                });
                if (n < 10) rec.run([&] { return polynomial_recurrences(f, n).max(); });
            }
            gen.run([&] {
                std::vector<PolyC> fam = generating_expand(f, 8), generic = generating_expand(f.sigma(), f.kappa(), 8);
                double d = 0, sc = generating_scale(f);
                for (int n = 0; n <= 8; ++n) {
                    d = std::max(d, rel_diff(fam[n], std::pow(sc, n) * classical_poly(f.shifted(n), n)));
                    PolyC kn = f.kappa() - double(n) * derivative(f.sigma());
                    d = std::max(d, rel_diff(generic[n], rodrigues(f.sigma(), kn, n)));
                }
                return d;
            });
            cont.run([&] {
                int n = g.integer(1, 6);
                cd z = g.near_real(-0.5, 0.5, 0.3);
                if (k != FamilyKind::Jacobi) z += 1.0;
                return rel(rodrigues_contour(f.sigma(), f.kappa(), n, z), rodrigues(f.sigma(), f.kappa(), n)(z));
            });
        }
    }
    // Jacobi and Laguerre against the series evaluators
    Acc series("polynomials against series evaluation", 1e-10);
    for (int i = 0; i < 10; ++i) {
        double al = g.uniform(-0.9, 3), be = g.uniform(-0.9, 3), x = g.uniform(-1, 1);
        int n = g.integer(0, 10);
        FamilySpec j = FamilySpec::jacobi(al, be), l = FamilySpec::laguerre(al);
        cd pref = pochhammer(1.0 + al, n) / std::tgamma(n + 1.0);
        series.run([&] {
            return rel(classical_poly(j, n)(cd(x)),
                       pref * eval_classical(ClassicalType::Gauss2F1, {-double(n), n + al + be + 1.0, al + 1.0}, (1.0 - x) / 2.0).value);
        });
        series.run([&] {
            return rel(classical_poly(l, n)(cd(2 * x)), pref * eval_classical(ClassicalType::Kummer1F1, {-double(n), 0, al + 1.0}, 2 * x).value);
        });
    }

    Acc gram("gram matrix is diagonal", 1e-10), norm("norm formula", 1e-10), fam("norms against closed forms", 1e-10);
    std::vector<FamilySpec> gfams;
    for (int i = 0; i < 9; ++i) gfams.push_back(family_draw(g, FamilyKind::Jacobi));
    for (int i = 0; i < 9; ++i) gfams.push_back(family_draw(g, FamilyKind::Laguerre));
    gfams.push_back(FamilySpec::hermite());
    gfams.push_back(FamilySpec::jacobi(-0.5, -0.5));
    double printed = 0;
    for (const auto& f : gfams) {
        try {
            OrthogonalityReport r = orthogonality_check(f, 10);
            gram.add(r.max_offdiag);
            norm.add(r.max_formula_err);
            fam.add(r.max_family_err);
            printed = std::max(printed, r.max_printed_err);
        } catch (const Error& e) {
            gram.add(kInf);
            gram.c.note = e.what();
        }
    }
    Acc pq("product norm formula on random draws", 1e-10);
    for (int i = 0; i < 50; ++i) {
        FamilySpec f = family_draw(g, i % 3 == 0 ? FamilyKind::Laguerre : i % 3 == 1 ? FamilyKind::Jacobi : FamilyKind::HermitePoly);
        int n = g.integer(0, 8);
        pq.run([&] {
            OrthogonalityReport r = orthogonality_check(f, n);
            return std::abs(r.norm_formula[n] - family_norm(f, n)) / family_norm(f, n);
        });
    }
    norm.c.note = "printed product disagrees by up to " + std::to_string(printed);
    Acc bes("bessel has no orthogonality interval", 0.5);
    bes.run([&] {
        try {
            MomentTable m(FamilySpec::bessel(1.0));
        } catch (const NoOrthogonalityInterval&) {
            return 0.0;
        }
        return 1.0;
    });

    Acc deg("degree reduction cases", 0.5);
    for (int i = 0; i < 20; ++i) {
        int n = g.integer(1, 8), d = g.integer(0, n - 1);
        double al = g.uniform(-3, 3);
        if (is_integer(al, 1e-3)) al += 0.3;
        double be = -double(n) - 1 - d - al;
        FamilySpec f = FamilySpec::jacobi(al, be);
        deg.run([&] {
            PolyC raw = rodrigues(f.sigma(), f.kappa(), n);
            JacobiDegree jd = jacobi_degree(al, be, n);
            bool ok = jd.case_no == 2 && jd.degree == d && raw.degree(1e-9) == d && classical_poly(f, n).degree() == d &&
                      hypergeometric_poly(f, n).degree(1e-9) == d;
            return ok ? 0.0 : 1.0;
        });
        // alpha in {-n..-1} with beta below -n still only drops the degree
        int ai = -g.integer(1, n);
        double bi = -double(n) - 1 - d - ai;
        if (bi < -n) {
            FamilySpec f2 = FamilySpec::jacobi(ai, bi);
            deg.run([&] {
                PolyC raw = rodrigues(f2.sigma(), f2.kappa(), n);
                JacobiDegree jd = jacobi_degree(ai, bi, n);
                return jd.case_no == 2 && jd.degree == d && raw.degree(1e-9) == d && classical_poly(f2, n).degree() == d ? 0.0 : 1.0;
            });
            int lo = -n, hi = -1 - d;
            if (lo > hi) continue;
            ai = g.integer(lo, hi);
            bi = -double(n) - 1 - d - ai;
        }
        FamilySpec z = FamilySpec::jacobi(ai, bi);
        deg.run([&] {
            PolyC raw = rodrigues(z.sigma(), z.kappa(), n);
            bool ok = jacobi_degree(ai, bi, n).case_no == 3 && raw.max_abs() < 1e-9 && classical_poly(z, n).is_zero();
            return ok ? 0.0 : 1.0;
        });
    }
    s.checks = {hyp.done(), series.done(), gen.done(), eig.done(), rec.done(), cont.done(), gram.done(),
                norm.done(), fam.done(), pq.done(), bes.done(), deg.done()};
    return s;
}

// --- degenerate ---

SuiteResult suite_degenerate(const SuiteOptions& o) {
    SuiteResult s{"degenerate", {}};
    Gen g(o.seed + 8);
    Acc prop("proportionality at integer kappa(0)", 1e-9);
    for (int m = 0; m <= 3; ++m) {
        for (int i = 0; i < 5; ++i) {
            EquationParams p{PolyC{0.0, 1.0, g.complex(-1, 1)}, PolyC{double(m), g.complex(-1, 1)}, g.complex(-1, 1)};
            cd z = g.disc(0.4);
            prop.run([&] { return degenerate_proportionality(p, z).max_rel_err; });
        }
        NamedParams np{g.complex(-1, 1), g.complex(-1, 1), double(1 + m)};
        cd z = g.disc(0.6);
        prop.run([&] { return degenerate_proportionality(classical_params(ClassicalType::Gauss2F1, np), z).max_rel_err; });
        prop.run([&] { return degenerate_proportionality(classical_params(ClassicalType::Kummer1F1, np), z).max_rel_err; });
        prop.run([&] { return degenerate_proportionality(classical_params(ClassicalType::ZeroF1, np), z).max_rel_err; });
    }

    Acc mirror("psi against psi-tilde with reversed index", 1e-9), laurent("laurent coefficients of the kernel", 1e-9);
    Acc resum("kernel resummed from psi", 1e-10);
    for (int i = 0; i < 10; ++i) {
        DegenerateParams dp{g.complex(-1, 1), g.complex(-1, 1), g.complex(-0.3, 0.3), g.complex(-0.3, 0.3), 0};
        cd z = g.disc(1.0);
        for (int m = -2; m <= 2; ++m) {
            DegenerateParams d1 = dp, d2 = dp;
            d1.m = m;
            d2.m = -m;
            mirror.run([&] {
                cd lhs = named_representation(ReprName::PsiLoop, {{}, d1, 0}, z).value;
                cd rhs = std::pow(z, double(-m)) * named_representation(ReprName::PsiTildeLoop, {{}, d2, 0}, z).value;
                return rel(lhs, rhs);
            });
            laurent.run([&] {
                double r = psi_annulus_radius(d1, z);
                return rel(psi_laurent_coefficient(d1, z, m, r), psi_series(d1, z));
            });
        }
        resum.run([&] {
            double r = psi_annulus_radius(dp, z);
            cd u = std::polar(r, g.uniform(0, 2 * kPi)), sum = 0;
            for (int m = -60; m <= 60; ++m) {
                DegenerateParams d = dp;
                d.m = m;
                sum += std::pow(u, double(m)) * psi_series(d, z);
            }
            return rel(sum, psi_kernel(dp, z, u));
        });
    }

    Acc bessel("0F1 loop at integer c", 1e-9), refl("0F1 reflection at integer c", 1e-12);
    for (int i = 0; i < 5; ++i) {
        cd z = g.disc(4);
        for (int m = -2; m <= 2; ++m) {
            NamedParams np{0, 0, 1.0 + m};
            bessel.run([&] {
                return rel(named_representation(ReprName::Repr0F1Loop, {np, {}, 0}, z).value,
                           eval_classical(ClassicalType::ZeroF1, np, z, true).value);
            });
            refl.run([&] {
                return rel(eval_classical(ClassicalType::ZeroF1, np, z, true).value,
                           std::pow(z, double(-m)) * eval_classical(ClassicalType::ZeroF1, {0, 0, 1.0 - m}, z, true).value);
            });
        }
    }
    s.checks = {prop.done(), mirror.done(), laurent.done(), resum.done(), bessel.done(), refl.done()};
    return s;
}

// --- chebyshev ---

SuiteResult suite_chebyshev(const SuiteOptions& o) {
    SuiteResult s{"chebyshev", {}};
    Gen g(o.seed + 9);
    Acc zf("0F1 closed forms", 1e-10);
    for (ChebyshevKind k : {ChebyshevKind::ZeroF1Sinh, ChebyshevKind::ZeroF1Cosh}) {
        for (int kk = 0; kk <= 2; ++kk) {
            for (int i = 0; i < 4; ++i) {
                cd z = i == 0 ? cd(0.3) : g.complex(-2, 2);
                zf.run([&] {
                    cd c = k == ChebyshevKind::ZeroF1Sinh ? 1.5 + kk : 0.5 - kk;
                    cd olv = olver_F(classical_params(ClassicalType::ZeroF1, {0, 0, c}), z).value;
                    return std::max(rel(chebyshev_eval(k, kk, 0.0, z).value, chebyshev_partner(k, kk, 0.0, z)),
                                    rel(chebyshev_partner(k, kk, 0.0, z), olv));
                });
            }
        }
    }
    Acc tf("2F1 closed forms, swapped pairing", 1e-10);
    std::string note;
    for (int i = 0; i < 4; ++i) {
        cd lam = i == 0 ? cd(0.3) : g.near_real(0.1, 0.9, 0.2), w = i == 0 ? cd(0.4) : g.near_real(-0.6, 0.6, 0.2);
        try {
            for (const auto& c : chebyshev_pairing_report(lam, w, 0.5, 2)) {
                if (c.kind != ChebyshevKind::TwoF1Cos && c.kind != ChebyshevKind::TwoF1Sin) continue;
                tf.add(std::abs(c.ratio_swapped - 1.0));
                if (i == 0) {
                    char buf[96];
                    std::snprintf(buf, sizeof buf, "%s k=%d printed ratio %.10g; ", to_string(c.kind).c_str(), c.k, c.ratio.real());
                    note += buf;
                }
            }
        } catch (const Error& e) {
            tf.add(kInf);
            note += e.what();
        }
    }
    tf.c.note = note;

    Acc sq("sqrt(omega) reading solves the equation", 1e-6);
    const PolyC sigmas[] = {PolyC(1.0), PolyC{0.0, 1.0}, PolyC{0.0, 1.0, -1.0}, PolyC{1.0, 0.0, 1.0}};
    for (const auto& sg : sigmas) {
        for (cd w : {cd(4.0), cd(2.5), cd(0.7)}) {
            for (bool plus : {false, true}) {
                for (bool cosv : {false, true}) {
                    ChebyshevResidualOptions opt;
                    opt.plus_half = plus;
                    opt.use_cos = cosv;
                    sq.run([&] { return chebyshev_residual(sg, w, opt); });
                }
            }
        }
    }
    Check lin{"omega reading fails the equation", kInf, 1e-2, true, 1, ""};
    try {
        ChebyshevResidualOptions opt;
        opt.sqrt_reading = false;
        lin.residual = chebyshev_residual(PolyC(1.0), 4.0, opt);
    } catch (const Error& e) {
        lin.residual = 0;
        lin.note = e.what();
    }
    s.checks = {zf.done(), tf.done(), sq.done(), lin};
    return s;
}

// --- classification ---

struct Disguised {
    PolyC sigma, tau, xi;
};

Disguised to_sty(const RiemannOperator& op) {
    auto poly = [](const RatFun& f) {
        if (!f.is_polynomial()) throw InvalidArgument("not a polynomial");
        return f.num() / f.den()[0];
    };
    return {op.sigma, poly(op.tau), poly(op.free * RatFun(op.sigma))};
}

SuiteResult suite_classification(const SuiteOptions& o) {
    SuiteResult s{"classification", {}};
    Gen g(o.seed + 10);
    Acc tag("normal type recovered", 0.5), res("normal form residual", 1e-10), par("normal parameters recovered", 1e-9);
    Acc hg("hypergeometric class flag", 0.5);
    const NormalType types[] = {NormalType::Gauss2F1, NormalType::Kummer1F1, NormalType::TwoF0, NormalType::ZeroF1,
                                NormalType::Hermite, NormalType::Airy, NormalType::EulerI, NormalType::EulerII,
                                NormalType::Helmholtz1d, NormalType::Laplace1d};
    for (NormalType t : types) {
        for (int i = 0; i < 5; ++i) {
            std::vector<std::pair<std::string, cd>> params;
            switch (t) {
                case NormalType::Gauss2F1: params = {{"a", g.complex(-2, 2)}, {"b", g.complex(-2, 2)}, {"c", g.complex(-2, 2)}}; break;
                case NormalType::TwoF0: params = {{"a", g.complex(-2, 2)}, {"b", g.complex(-2, 2)}}; break;
                case NormalType::Kummer1F1: params = {{"a", g.complex(-2, 2)}, {"c", g.complex(-2, 2)}}; break;
                case NormalType::Hermite: params = {{"a", g.complex(-2, 2)}}; break;
                case NormalType::ZeroF1:
                case NormalType::EulerI:
                case NormalType::EulerII: params = {{"c", g.complex(-2, 2)}}; break;
                default: break;
            }
            NormalFormReport disguise;
            disguise.affine_a = t == NormalType::Gauss2F1 ? cd(g.uniform(0.5, 2)) : g.complex(-2, 2);
            disguise.affine_b = g.complex(-2, 2);
            disguise.scalar_divisor = g.complex(-2, 2);
            RiemannOperator op = transform_operator(normal_form_operator(t, params), disguise);
            NormalFormReport r;
            try {
                Disguised st = to_sty(op);
                r = classify_riemann(st.sigma, st.tau, st.xi);
            } catch (const Error& e) {
                tag.add(kInf);
                tag.c.note = e.what();
                continue;
            }
            tag.add(r.type_tag == t ? 0.0 : 1.0);
            res.add(r.residual);
            hg.add(r.hypergeometric_class == (t != NormalType::Airy) ? 0.0 : 1.0);
            if (r.type_tag != t) continue;
            double d = 0;
            for (const auto& [name, v] : params) d = std::max(d, rel(r.param(name), v));
            if (t == NormalType::Gauss2F1 || t == NormalType::TwoF0) {
                double sw = std::max(rel(r.param("a"), params[1].second), rel(r.param("b"), params[0].second));
                for (std::size_t k = 2; k < params.size(); ++k) sw = std::max(sw, rel(r.param(params[k].first), params[k].second));
                d = std::min(d, sw);
            }
            par.add(d);
        }
    }
    Acc shift("shifted and scaled 2F1 recovers its parameters", 1e-9);
    for (int i = 0; i < 10; ++i) {
        cd a = g.complex(-2, 2), b = g.complex(-2, 2), c = g.complex(-2, 2);
        double sc = g.uniform(0.5, 3);
        cd sh = g.uniform(-2, 2);
        shift.run([&] {
            // x = (z - sh)/sc
            PolyC x{-sh / sc, 1.0 / sc};
            PolyC sigma = (x - x * x) * (sc * sc);
            PolyC tau = (PolyC(c) - (a + b + 1.0) * x) * sc;
            NormalFormReport r = classify_riemann(sigma, tau, PolyC(-a * b) * sigma);
            if (r.type_tag != NormalType::Gauss2F1) return kInf;
            double d1 = std::max(rel(r.param("a"), a), rel(r.param("b"), b));
            double d2 = std::max(rel(r.param("a"), b), rel(r.param("b"), a));
            return std::max(std::min(d1, d2), rel(r.param("c"), c));
        });
    }
    s.checks = {tag.done(), res.done(), par.done(), hg.done(), shift.done()};
    return s;
}

using SuiteFn = SuiteResult (*)(const SuiteOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> r = {
        {"lie", suite_lie},
        {"symmetry", suite_symmetry},
        {"factorization", suite_factorization},
        {"series", suite_series},
        {"recurrence", suite_recurrence},
        {"integral", suite_integral},
        {"f20", suite_f20},
        {"orthogonality", suite_orthogonality},
        {"degenerate", suite_degenerate},
        {"chebyshev", suite_chebyshev},
        {"classification", suite_classification},
    };
    return r;
}

} // namespace

bool SuiteResult::pass() const {
    return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass(); });
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [n, f] : registry()) v.push_back(n);
        return v;
    }();
    return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& o) {
    for (const auto& [n, f] : registry()) {
        if (n != name) continue;
        try {
            return f(o);
        } catch (const Error& e) {
            return {name, {{std::string("exception ") + e.kind(), kInf, 0.0, false, 1, e.what()}}};
        }
    }
    throw InvalidArgument("unknown suite: " + name);
}

std::vector<SuiteResult> run_suites(const std::string& name, const SuiteOptions& o) {
    std::vector<SuiteResult> out;
    if (name == "all") {
        for (const auto& n : suite_names()) out.push_back(run_suite(n, o));
    } else {
        out.push_back(run_suite(name, o));
    }
    return out;
}

} // namespace hgc
