#include "common.hpp"

#include "hgc/chebyshev.hpp"
#include "hgc/errors.hpp"
#include "hgc/gamma.hpp"
#include "hgc/series.hpp"

using namespace hgc;
using test::cx;
using test::rel;
using CT = ClassicalType;

namespace {
EquationParams P(CT t, cd a, cd b, cd c) { return classical_params(t, {a, b, c}); }
}

TEST_CASE("2F1 against the oracle") {
    for (const auto& o : test::oracles()["gauss2f1"]) {
        cd a = cx(o["a"]), b = cx(o["b"]), c = cx(o["c"]), z = cx(o["z"]);
        CHECK(rel(eval_classical(CT::Gauss2F1, {a, b, c}, z).value, cx(o["value"])) < 1e-12);
        CHECK(rel(eval_classical(CT::Gauss2F1, {a, b, c}, z, true).value, cx(o["olver"])) < 1e-12);
        CHECK(rel(unified_F(P(CT::Gauss2F1, a, b, c), z).value, cx(o["value"])) < 1e-12);
        CHECK(rel(olver_F(P(CT::Gauss2F1, a, b, c), z).value, cx(o["olver"])) < 1e-12);
    }
}

TEST_CASE("Olver normalization at non-positive integer c") {
    for (const auto& o : test::oracles()["gauss2f1_olver_negative_c"]) {
        cd a = cx(o["a"]), b = cx(o["b"]), c = cx(o["c"]), z = cx(o["z"]);
        CHECK(rel(olver_F(P(CT::Gauss2F1, a, b, c), z).value, cx(o["olver"])) < 1e-12);
        CHECK(rel(eval_classical(CT::Gauss2F1, {a, b, c}, z, true).value, cx(o["olver"])) < 1e-12);
    }
    CHECK_THROWS_AS(unified_F(P(CT::Gauss2F1, 0.3, 1.7, -1.0), 0.2), PoleInParameters);
}

TEST_CASE("1F1, 0F1, 2F0 and S against the oracle") {
    for (const auto& o : test::oracles()["kummer1f1"]) {
        cd a = cx(o["a"]), c = cx(o["c"]), z = cx(o["z"]);
        CHECK(rel(eval_classical(CT::Kummer1F1, {a, 0, c}, z).value, cx(o["value"])) < 1e-12);
        CHECK(rel(olver_F(P(CT::Kummer1F1, a, 0, c), z).value, cx(o["olver"])) < 1e-12);
    }
    for (const auto& o : test::oracles()["zero0f1"]) {
        cd c = cx(o["c"]), z = cx(o["z"]);
        CHECK(rel(eval_classical(CT::ZeroF1, {0, 0, c}, z, true).value, cx(o["olver"])) < 1e-12);
        CHECK(rel(olver_F(P(CT::ZeroF1, 0, 0, c), z).value, cx(o["olver"])) < 1e-12);
    }
    for (const auto& o : test::oracles()["two2f0"]) {
        cd a = cx(o["a"]), b = cx(o["b"]), w = cx(o["w"]);
        CHECK(rel(f20_general(a, b, w).value, cx(o["value"])) < 1e-9);
    }
    for (const auto& o : test::oracles()["hermite_s"]) {
        cd a = cx(o["a"]), z = cx(o["z"]);
        CHECK(rel(eval_classical(CT::Hermite, {a, 0, 0}, z).value, cx(o["value"])) < 1e-10);
    }
}

TEST_CASE("unified series examples") {
    EquationParams p = P(CT::Gauss2F1, 1.0, 1.0, 2.0);
    CHECK(std::abs(unified_F(p, 0.5).value - 2.0 * std::log(2.0)) < 1e-13);
    CHECK(unified_F(p, 0.0).value == cd(1.0));

    // omega = -kappa'/2 annihilates 1
    EquationParams one(PolyC{0.0, 1.0, 0.4}, PolyC{0.7, -1.3}, 0.65);
    EvalResult r = unified_F(one, 0.3);
    CHECK(r.value == cd(1.0));

    CHECK(std::abs(olver_F(P(CT::ZeroF1, 0, 0, 1.5), 1.0).value - std::sinh(2.0) / std::sqrt(test::pi)) < 1e-13);
    CHECK(std::abs(olver_F(P(CT::Gauss2F1, 0.3, 1.7, 1.0), 0.0).value - 1.0) < 1e-15);
    // m = -2 starts at n = 2: the value is O(z^3)
    cd small = olver_F(P(CT::Gauss2F1, 0.3, 1.7, -2.0), 1e-3).value;
    CHECK(std::isfinite(small.real()));
    CHECK(std::abs(small) < 1e-8);
}

TEST_CASE("classical series examples") {
    CHECK(eval_classical(CT::Gauss2F1, {0.3, 1.7, 2.4}, 0.0).value == cd(1.0));
    CHECK(std::abs(eval_classical(CT::Kummer1F1, {2.5, 0, 2.5}, 1.0).value - std::exp(1.0)) < 1e-14);
    CHECK(std::abs(eval_classical(CT::Hermite, {-2.0, 0, 0}, 1.0).value - 0.5) < 1e-13);
    CHECK_THROWS_AS(eval_classical(CT::Gauss2F1, {0.3, 1.7, 2.4}, 1.2), DomainError);
    CHECK_THROWS_AS(unified_F(P(CT::TwoF0, 0.3, 1.7, 0), 0.1), AsymptoticOnly);
}

TEST_CASE("property: the series is annihilated") {
    Gen g(31);
    int done = 0;
    for (int i = 0; i < 200; ++i) {
        EquationParams p(PolyC{0.0, g.complex(0.5, 1.5), g.complex(-0.5, 0.5)}, PolyC{g.near_real(-0.5, 3, 0.5), g.complex(-1, 1)},
                         g.complex(-1, 1));
        cd z = g.disc(0.3);
        try {
            Jet j = unified_jet(p, z);
            cd h = p.sigma(z) * j.d2 + (derivative(p.sigma)(z) + p.kappa(z)) * j.d1 + (p.kappa1() / 2.0 + p.omega) * j.value;
            double s = std::abs(p.sigma(z) * j.d2) + std::abs((derivative(p.sigma)(z) + p.kappa(z)) * j.d1) + std::abs(j.value);
            CHECK(std::abs(h) / s < 1e-12);
            ++done;
        } catch (const PoleInParameters&) {
        }
    }
    CHECK(done > 190);
}

TEST_CASE("property: unified series reduces to 2F1") {
    Gen g(32);
    for (int i = 0; i < 100; ++i) {
        cd a = g.complex(-2, 2), b = g.complex(-2, 2), c = g.near_real(0.2, 3, 1), z = g.disc(0.8);
        CHECK(rel(unified_F(P(CT::Gauss2F1, a, b, c), z).value, eval_classical(CT::Gauss2F1, {a, b, c}, z).value) < 1e-12);
    }
}

TEST_CASE("2F0") {
    CHECK(std::abs(f20_general(-1.0, 3.0, 0.2).value - 0.4) < 1e-15);
    CHECK(f20_general(1.5, 0.5, 0.0).value == cd(1.0));
    CHECK_THROWS_AS(f20_general(1.5, 0.5, 0.3), BranchCut);

    // error after n terms shrinks like r^(n+1)
    cd a = 1.5, b = 0.5, dir = std::polar(1.0, 0.75 * test::pi);
    for (int n = 1; n <= 3; ++n) {
        std::vector<double> q;
        for (double r : {0.2, 0.1, 0.05}) {
            cd w = r * dir;
            q.push_back(std::abs(f20_general(a, b, w).value - f20_partial_sum(a, b, w, n + 1)) / std::pow(r, n + 1));
        }
        double hi = *std::max_element(q.begin(), q.end()), lo = *std::min_element(q.begin(), q.end());
        CHECK(hi / lo < 10.0);
    }
}

TEST_CASE("powexp") {
    CHECK(std::abs(powexp(2.0, 0.0, 0.5) - std::exp(1.0)) < 1e-15);
    CHECK(rel(powexp(1.0, 0.5, 0.3) * powexp(2.0, 0.5, 0.3), powexp(3.0, 0.5, 0.3)) < 1e-15);
    CHECK(powexp(cd(0.4, 0.2), cd(0.3, -0.1), 0.0) == cd(1.0));
    CHECK_THROWS_AS(powexp(1.0, 0.5, -2.0), PoleError);
}

TEST_CASE("Chebyshev closed forms of 0F1") {
    double sp = std::sqrt(test::pi);
    CHECK(std::abs(chebyshev_eval(ChebyshevKind::ZeroF1Sinh, 0, 0.0, 1.0).value - std::sinh(2.0) / sp) < 1e-14);
    CHECK(std::abs(chebyshev_eval(ChebyshevKind::ZeroF1Cosh, 0, 0.0, 1.0).value - std::cosh(2.0) / sp) < 1e-14);
    CHECK(std::abs(chebyshev_eval(ChebyshevKind::ZeroF1Sinh, 0, 0.0, 0.0).value - 2.0 / sp) < 1e-14);
    for (int k = 0; k <= 3; ++k) {
        cd z(0.7, 0.3);
        CHECK(rel(chebyshev_eval(ChebyshevKind::ZeroF1Sinh, k, 0.0, z).value, olver_F(P(CT::ZeroF1, 0, 0, 1.5 + k), z).value) < 1e-12);
        CHECK(rel(chebyshev_eval(ChebyshevKind::ZeroF1Cosh, k, 0.0, z).value, olver_F(P(CT::ZeroF1, 0, 0, 0.5 - k), z).value) < 1e-12);
    }
}

TEST_CASE("Chebyshev residual and the square-root reading") {
    CHECK(chebyshev_residual(PolyC(1.0), 4.0) < 1e-6);
    CHECK(chebyshev_residual(PolyC{0.0, 1.0}, 2.5) < 1e-6);
    ChebyshevResidualOptions printed;
    printed.sqrt_reading = false;
    CHECK(chebyshev_residual(PolyC(1.0), 4.0, printed) > 1e-2);
}

TEST_CASE("degenerate proportionality") {
    CHECK(degenerate_proportionality(P(CT::Gauss2F1, 0.3, 1.7, 1.0), 0.4).max_rel_err < 1e-12);
    CHECK(degenerate_proportionality(P(CT::Gauss2F1, 0.3, 1.7, 3.0), 0.4).max_rel_err < 1e-9);
    CHECK(degenerate_proportionality(P(CT::Kummer1F1, 0.6, 0, 4.0), cd(0.5, 0.2)).max_rel_err < 1e-9);
    cd z = 0.25;
    cd lhs = eval_classical(CT::ZeroF1, {0, 0, 2.0}, z, true).value;
    cd rhs = eval_classical(CT::ZeroF1, {0, 0, 0.0}, z, true).value / z;
    CHECK(rel(lhs, rhs) < 1e-13);
}
