#include "common.hpp"

#include "hgc/errors.hpp"
#include "hgc/family.hpp"
#include "hgc/gamma.hpp"
#include "hgc/representations.hpp"
#include "hgc/series.hpp"

using namespace hgc;
using test::cx;
using test::I;
using test::pi;
using test::rel;
using CT = ClassicalType;

TEST_CASE("basic quadrature") {
    QuadResult c = integrate([](cd t) { return 1.0 / t; }, circle(0.0, 1.0));
    CHECK(std::abs(c.value - 2.0 * pi * I) < 1e-14);
    QuadResult e = integrate([](cd t) { return std::exp(-t); }, half_line(0.0, 1.0));
    CHECK(std::abs(e.value - 1.0) < 1e-13);
    QuadResult s = integrate([](cd t) { return 1.0 / std::sqrt(t); }, segment(0.0, 1.0));
    CHECK(std::abs(s.value - 2.0) < 1e-12);
    CHECK(s.err_estimate >= 0.0);
}

TEST_CASE("node offsets keep endpoint singularities accurate") {
    QuadResult q = integrate_nodes([](const Node& nd) { return std::pow(nd.minus(1.0), -0.75); }, segment(1.0, 2.0));
    CHECK(std::abs(q.value - 4.0) < 1e-10);
}

TEST_CASE("non-convergence carries the best estimate") {
    ContourSpec cs = half_line(0.0, 1.0);
    cs.max_level = 3;
    cs.rel_tol = 1e-15;
    CHECK_THROWS_AS(integrate([](cd t) { return std::sin(50.0 * t) / (1.0 + t * t); }, cs), NoConvergence);
}

TEST_CASE("Euler transform against the oracle") {
    for (const auto& o : test::oracles()["euler"]) {
        double p = o["p"], q = o["q"], n = o["n"];
        cd z = cx(o["z"]);
        // sigma = z - z^2, rho0^{-1}(s) = s^p (s - 1)^q
        QuadResult r = euler_transform(PolyC{0.0, 1.0, -1.0}, PolyC{-p, p + q}, n, half_line(1.0, 1.0), z);
        CHECK(rel(r.value, cx(o["value"])) < 1e-10);
        CHECK(std::abs(r.boundary_term) < kBoundaryTol * std::abs(r.value));
        QuadResult rn = euler_transform(PolyC{0.0, 1.0, -1.0}, PolyC{-p, p + q}, n, half_line(1.0, 1.0), z, true);
        CHECK(rel(rn.value, cx(o["value"]) * rgamma(cd(n + 1.0))) < 1e-10);
    }
}

TEST_CASE("Euler transform recurrence") {
    PolyC sigma{0.0, 1.0, -1.0}, k0{1.3, -1.7};
    cd n = 0.5, z = 0.3;
    double h = 1e-4;
    auto f = [&](cd m, cd x) { return euler_transform(sigma, k0, m, half_line(1.0, 1.0), x).value; };
    cd d = (f(n, z + h) - f(n, z - h)) / (2.0 * h);
    CHECK(rel(d, (n + 1.0) * f(n + 1.0, z)) < 1e-7);
}

TEST_CASE("2F1 Euler representation") {
    cd a = 1.0, b = 0.5, c = 2.0, z = 0.3;
    ReprResult r = named_representation(ReprName::Repr2F1Euler, {{a, b, c}, {}, 0.0}, z);
    CHECK(rel(r.value, eval_classical(CT::Gauss2F1, {a, b, c}, z, true).value) < 1e-10);
    CHECK_FALSE(r.quad.boundary_nonzero);
    CHECK_THROWS_AS(named_representation(ReprName::Repr2F1Euler, {{-0.5, b, c}, {}, 0.0}, z), NotApplicable);
}

TEST_CASE("loop representations of 0F1 and 1F1") {
    ReprResult l = named_representation(ReprName::Repr0F1Loop, {{0, 0, 1.0}, {}, 0.0}, 1.0);
    CHECK(std::abs(l.value - 2.2795853023360673) < 1e-12);
    ReprResult h = named_representation(ReprName::Repr0F1Loop, {{0, 0, 1.5}, {}, 0.0}, 1.0);
    CHECK(std::abs(h.value - std::sinh(2.0) / std::sqrt(pi)) < 1e-10);
    for (double r : {0.5, 1.0, 2.0}) {
        ReprResult lr = named_representation(ReprName::Repr0F1Loop, {{0, 0, 1.0}, {}, r}, 1.0);
        CHECK(std::abs(lr.value - l.value) < 1e-10);
        CHECK(lr.quad.boundary_term == cd(0.0));
    }
    cd a = 0.7, c = 1.9, z = 0.5;
    ReprResult k = named_representation(ReprName::Repr1F1Hankel, {{a, 0, c}, {}, 0.0}, z);
    CHECK(rel(k.value, eval_classical(CT::Kummer1F1, {a, 0, c}, z, true).value) < 1e-10);
    ReprResult alg = named_representation(ReprName::Repr1F1Algebraic, {{a, 0, c}, {}, 0.0}, z);
    CHECK(rel(alg.value, k.value) < 1e-10);
}

TEST_CASE("2F0 and Hermite representations") {
    for (const auto& o : test::oracles()["two2f0"]) {
        cd a = cx(o["a"]), b = cx(o["b"]), w = cx(o["w"]);
        if (a.real() <= 0) continue;
        CHECK(rel(named_representation(ReprName::Repr2F0, {{a, b, 0}, {}, 0.0}, w).value, cx(o["value"])) < 1e-9);
    }
    ReprResult s = named_representation(ReprName::ReprHermiteLaplace, {{1.0, 0, 0}, {}, 0.0}, 1.0);
    CHECK(std::abs(s.quad.value - 0.37893607807065605) < 1e-12);
    CHECK(std::abs(s.value - 0.7578721561413121) < 1e-12);
    for (const auto& o : test::oracles()["hermite_s"]) {
        cd a = cx(o["a"]), z = cx(o["z"]);
        CHECK(rel(named_representation(ReprName::ReprHermiteEuler, {{a, 0, 0}, {}, 0.0}, z).value, cx(o["value"])) < 1e-9);
        if (a.real() > 0)
            CHECK(rel(named_representation(ReprName::ReprHermiteLaplace, {{a, 0, 0}, {}, 0.0}, z).value, cx(o["value"])) < 1e-9);
    }
}

TEST_CASE("Psi loops against the oracle") {
    for (const auto& o : test::oracles()["psi"]) {
        DegenerateParams dp{cx(o["a"]), cx(o["b"]), cx(o["mu"]), cx(o["nu"]), o["m"].get<int>()};
        bool tilde = o["tilde"];
        cd z = cx(o["z"]);
        ReprResult r = named_representation(tilde ? ReprName::PsiTildeLoop : ReprName::PsiLoop, {{}, dp, 0.0}, z);
        CHECK(rel(r.value, cx(o["value"])) < 1e-12);
        CHECK(rel(psi_series(dp, z, tilde), cx(o["value"])) < 1e-12);
    }
    DegenerateParams zero{0.4, 0.8, 0.0, 0.0, 0};
    CHECK(std::abs(named_representation(ReprName::PsiLoop, {{}, zero, 0.0}, 0.0).value - 1.0) < 1e-14);
}

TEST_CASE("Laplace kernel solves its equation") {
    // 1F1 data sigma = z, kappa0 = c - 1 - z
    PolyC sigma{0.0, 1.0}, k0{0.9, -1.0};
    WeightForm d = laplace_kernel(sigma, k0);
    // (sigma(-d) s + kappa0(-d)) delta = (-(s delta)' + 0.9 delta + delta') = 0
    cd s(0.4, 0.3);
    double h = 1e-5;
    cd dd = (d(s + h) - d(s - h)) / (2.0 * h), sd = ((s + h) * d(s + h) - (s - h) * d(s - h)) / (2.0 * h);
    CHECK(std::abs(-sd + 0.9 * d(s) + dd) < 1e-8 * std::abs(d(s)));
    CHECK_THROWS_AS(laplace_kernel(PolyC{0.0, 1.0, -1.0}, k0), NotApplicable);
}

TEST_CASE("Rodrigues contour") {
    CHECK(std::abs(rodrigues_contour(PolyC(1.0), PolyC{0.0, -2.0}, 2, 1.0) - 1.0) < 1e-12);
}
