#include "common.hpp"

#include "hgc/classify.hpp"
#include "hgc/errors.hpp"
#include "hgc/params.hpp"
#include "hgc/ratfun.hpp"
#include "hgc/weight.hpp"

using namespace hgc;
using test::rel;

TEST_CASE("poly arithmetic") {
    PolyC p{1.0, 2.0, 3.0}, q{0.0, 1.0};
    CHECK(p.degree() == 2);
    CHECK((p * q).degree() == 3);
    CHECK((p * q)[3] == cd(3.0));
    CHECK(p(cd(2.0)) == cd(17.0));
    CHECK(rel_diff(derivative(p), PolyC{2.0, 6.0}) == 0.0);
    CHECK((p - p).is_zero());
    CHECK(PolyC(std::vector<cd>{1.0, 0.0, 0.0}).degree() == 0);
    CHECK(rel_diff(compose_affine(PolyC{0.0, 0.0, 1.0}, cd(2.0), cd(1.0)), PolyC{1.0, 4.0, 4.0}) == 0.0);
}

TEST_CASE("poly division and roots") {
    PolyC num{-1.0, 0.0, 1.0}, den{-1.0, 1.0};
    DivMod d = divmod(num, den);
    CHECK(d.rem.is_zero());
    CHECK(rel_diff(d.quot, PolyC{1.0, 1.0}) < 1e-15);
    auto r = small_roots(PolyC{4.0, 0.0, -1.0});
    REQUIRE(r.size() == 2);
    CHECK(std::abs(std::abs(r[0]) - 2.0) < 1e-14);
}

TEST_CASE("property: division reconstructs the dividend") {
    Gen g(11);
    for (int i = 0; i < 100; ++i) {
        PolyC a = test::random_poly(g, g.integer(0, 6)), b = test::random_poly(g, g.integer(1, 3));
        DivMod d = divmod(a, b);
        CHECK(rel_diff(d.quot * b + d.rem, a) < 1e-10);
        CHECK(d.rem.degree() < b.degree());
    }
}

TEST_CASE("property: companion roots are roots") {
    Gen g(12);
    for (int i = 0; i < 50; ++i) {
        PolyC p = test::random_poly(g, g.integer(1, 5));
        for (cd r : roots(p)) CHECK(std::abs(p(r)) < 1e-9 * std::max(1.0, p.max_abs() * std::pow(std::abs(r) + 1, p.degree())));
    }
}

TEST_CASE("ratfun cancels common factors") {
    RatFun f(PolyC{-1.0, 0.0, 1.0}, PolyC{-1.0, 1.0});
    CHECK(f.is_polynomial());
    CHECK(rel_diff(f.num(), PolyC{1.0, 1.0}) < 1e-14);
    RatFun g = derivative(RatFun(PolyC(1.0), PolyC{0.0, 1.0}));
    CHECK(std::abs(g(cd(2.0)) + 0.25) < 1e-15);
}

TEST_CASE("property: ratfun field operations") {
    Gen g(13);
    for (int i = 0; i < 50; ++i) {
        RatFun a(test::random_poly(g, 2), test::random_poly(g, 1)), b(test::random_poly(g, 1), test::random_poly(g, 2));
        cd z = g.complex(-2, 2);
        CHECK(rel((a + b)(z), a(z) + b(z)) < 1e-10);
        CHECK(rel((a * b)(z), a(z) * b(z)) < 1e-10);
        if (!b.is_zero()) CHECK(rel((a / b)(z), a(z) / b(z)) < 1e-10);
    }
}

TEST_CASE("parametrization of the classical types") {
    cd a = 0.3, b = 1.7, c = 2.4;
    EquationParams p = params_from_sty(PolyC{0.0, 1.0, -1.0}, PolyC{c, -(a + b + 1.0)}, -a * b);
    CHECK(rel_diff(p.kappa, PolyC{c - 1.0, -(a + b - 1.0)}) < 1e-15);
    CHECK(std::abs(p.omega - (-(a - 0.5) * (b - 0.5) - 0.25)) < 1e-15);
    CHECK(rel_diff(p, classical_params(ClassicalType::Gauss2F1, {a, b, c})) < 1e-15);

    EquationParams z = params_from_sty(PolyC(1.0), PolyC(), 0.0);
    CHECK(z.kappa.is_zero());
    CHECK(z.omega == cd(0.0));

    EquationParams h = params_from_sty(PolyC(1.0), PolyC{0.0, -2.0}, -2.0 * a);
    CHECK(rel_diff(h.kappa, PolyC{0.0, -2.0}) < 1e-15);
    CHECK(std::abs(h.omega - (-2.0 * a + 1.0)) < 1e-15);
}

TEST_CASE("ladder parameters") {
    EquationParams h(PolyC(1.0), PolyC{0.0, -2.0}, 0.7);
    EquationParams h3 = ladder_params(h, 3.0);
    CHECK(rel_diff(h3.kappa, h.kappa) < 1e-15);
    CHECK(std::abs(h3.omega - (0.7 - 6.0)) < 1e-14);
    CHECK(rel_diff(ladder_params(h, 0.0), h) == 0.0);

    // half-integer ladder from kappa = 0, omega0 = omega + sigma''/8
    PolyC sigma{0.4, -0.3, 0.8};
    cd omega = 1.3, s2 = 1.6;
    EquationParams base(sigma, PolyC(), omega + s2 / 8.0);
    for (double m : {0.5, 1.5, -2.5}) {
        EquationParams pm = ladder_params(base, m);
        CHECK(rel_diff(pm.kappa, m * derivative(sigma)) < 1e-15);
        CHECK(std::abs(pm.omega - (omega + (m * m + 0.25) * s2 / 2.0)) < 1e-13);
    }
}

TEST_CASE("property: sty round trip") {
    Gen g(14);
    for (int i = 0; i < 100; ++i) {
        EquationParams p(test::random_poly(g, 2), test::random_poly(g, 1), g.complex(-1, 1));
        StyTriple t = params_to_sty(p);
        CHECK(rel_diff(params_from_sty(t.sigma, t.tau, t.eta), p) < 1e-14);
    }
}

TEST_CASE("weights of the classical types") {
    cd a = 0.3, b = 1.7, c = 2.4;
    WeightForm w = weight_form(classical_params(ClassicalType::Gauss2F1, {a, b, c}));
    cd z(0.3, 0.2);
    cd expect = std::pow(z, c - 1.0) * std::pow(z - 1.0, a + b - c);
    CHECK(rel(w(z) / w(cd(0.5, 0.1)), expect / (std::pow(cd(0.5, 0.1), c - 1.0) * std::pow(cd(0.5, 0.1) - 1.0, a + b - c))) < 1e-12);

    WeightForm w0 = weight_form(classical_params(ClassicalType::TwoF0, {a, b, 0}));
    auto f20w = [&](cd x) { return std::pow(x, -1.0 + a + b) * std::exp(1.0 / x); };
    CHECK(rel(w0(z) / w0(cd(0.7)), f20w(z) / f20w(cd(0.7))) < 1e-12);

    WeightForm wh = weight_form(classical_params(ClassicalType::Hermite, {a, 0, 0}));
    CHECK(rel(wh(z) / wh(cd(0.0)), std::exp(-z * z)) < 1e-14);
}

TEST_CASE("property: weight solves sigma rho' = kappa rho") {
    Gen g(15);
    for (int i = 0; i < 60; ++i) {
        int ds = i % 3;
        PolyC sigma = test::random_poly(g, ds) + PolyC::monomial(ds, 1.0);
        PolyC kappa = test::random_poly(g, 1);
        WeightForm w = weight_form(sigma, kappa);
        CHECK(weight_residual(w, sigma, kappa) < 1e-10);
    }
}

TEST_CASE("classification examples") {
    NormalFormReport airy = classify_riemann(PolyC(1.0), PolyC(), PolyC{0.0, 1.0});
    CHECK(airy.type_tag == NormalType::Airy);
    CHECK_FALSE(airy.hypergeometric_class);

    NormalFormReport e1 = classify_riemann(PolyC{0.0, 0.0, 1.0}, PolyC{0.0, 0.7}, PolyC());
    CHECK(e1.type_tag == NormalType::EulerI);

    NormalFormReport g = classify_riemann(PolyC{4.0, 0.0, -1.0}, PolyC(), PolyC());
    CHECK(g.type_tag == NormalType::Gauss2F1);
    // the roots -2 and 2 land on 0 and 1
    cd x1 = g.affine_a * -2.0 + g.affine_b, x2 = g.affine_a * 2.0 + g.affine_b;
    bool ok = (std::abs(x1) < 1e-14 && std::abs(x2 - 1.0) < 1e-14) || (std::abs(x2) < 1e-14 && std::abs(x1 - 1.0) < 1e-14);
    CHECK(ok);
    CHECK(g.residual < 1e-14);
}

TEST_CASE("classification of the 2F1 pattern with ab = 2") {
    cd c = 1.5;
    NormalFormReport r = classify_riemann(PolyC{0.0, 1.0, -1.0}, PolyC{c, -3.0}, PolyC{0.0, 1.0, -1.0} * cd(-2.0));
    CHECK(r.type_tag == NormalType::Gauss2F1);
    cd a = r.param("a"), b = r.param("b");
    CHECK(std::abs(a * b - 2.0) < 1e-13);
    CHECK(std::abs(a + b - 2.0) < 1e-13);
    CHECK(std::abs(r.param("c") - c) < 1e-13);
}

TEST_CASE("invalid input is rejected") {
    CHECK_THROWS_AS(classical_type_from_string("3F2"), InvalidArgument);
    CHECK_THROWS_AS(classify_riemann(PolyC(), PolyC(), PolyC()), Error);
}
