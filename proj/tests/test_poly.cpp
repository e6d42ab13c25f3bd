#include "common.hpp"

#include "hgc/errors.hpp"
#include "hgc/family.hpp"

using namespace hgc;
using test::pi;

namespace {
double at(const PolyC& p, double x) { return p(cd(x)).real(); }
double rel(double a, double b) { return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300}); }
}

TEST_CASE("Rodrigues examples") {
    CHECK(rel_diff(rodrigues(PolyC(1.0), PolyC{0.0, -2.0}, 2), PolyC{-1.0, 0.0, 2.0}) < 1e-15);
    CHECK(rel_diff(rodrigues(PolyC{0.3, 0.1, 0.7}, PolyC{0.2, -1.1}, 0), PolyC(1.0)) == 0.0);
    PolyC legendre = FamilySpec::jacobi(0, 0).prefactor() * rodrigues(PolyC{1.0, 0.0, -1.0}, PolyC(), 1);
    CHECK(rel_diff(legendre, PolyC{0.0, 1.0}) < 1e-15);
}

TEST_CASE("classical polynomial examples") {
    CHECK(rel_diff(classical_poly(FamilySpec::laguerre(2.0), 1), PolyC{3.0, -1.0}) < 1e-15);
    CHECK(rel_diff(classical_poly(FamilySpec::jacobi(0, 0), 1), PolyC{0.0, 1.0}) < 1e-15);
    CHECK(std::abs(at(classical_poly(FamilySpec::jacobi(0.5, 0.0), 3), 1.0) - 2.1875) < 1e-14);
    CHECK(rel_diff(classical_poly(FamilySpec::hermite(), 2), PolyC{-1.0, 0.0, 2.0}) < 1e-15);
}

TEST_CASE("polynomials against the oracle") {
    const auto& o = test::oracles();
    for (const auto& e : o["jacobi"])
        CHECK(rel(at(classical_poly(FamilySpec::jacobi(e["alpha"], e["beta"]), e["n"]), e["x"]), e["value"]) < 1e-12);
    for (const auto& e : o["laguerre"])
        CHECK(rel(at(classical_poly(FamilySpec::laguerre(e["alpha"]), e["n"]), e["x"]), e["value"]) < 1e-12);
    for (const auto& e : o["hermite_poly"])
        CHECK(rel(at(classical_poly(FamilySpec::hermite(), e["n"]), e["x"]), e["value"]) < 1e-12);
    for (const auto& e : o["bessel_poly"])
        CHECK(rel(at(classical_poly(FamilySpec::bessel(e["theta"]), e["n"]), e["x"]), e["value"]) < 1e-12);
}

TEST_CASE("property: Rodrigues matches the hypergeometric form") {
    Gen g(41);
    for (int i = 0; i < 20; ++i) {
        FamilySpec f = FamilySpec::jacobi(g.uniform(-0.9, 3), g.uniform(-0.9, 3));
        for (int n = 0; n <= 10; ++n) CHECK(rel_diff(classical_poly(f, n), hypergeometric_poly(f, n)) < 1e-10);
    }
}

TEST_CASE("Jacobi degree rules") {
    CHECK(jacobi_degree(0.5, 0.3, 4).case_no == 1);
    // alpha + beta = -n - 1 - d, alpha off the integers
    for (int n = 1; n <= 6; ++n)
        for (int d = 0; d < n; ++d) {
            double a = -0.35, b = -double(n) - 1.0 - d - a;
            JacobiDegree j = jacobi_degree(a, b, n);
            CHECK(j.case_no == 2);
            CHECK(j.degree == -int(std::lround(a + b)) - n - 1);
            CHECK(classical_poly(FamilySpec::jacobi(a, b), n).degree(1e-9) == j.degree);
        }
    // both in {-n..-1}: sigma^n rho is a polynomial of degree < n
    JacobiDegree z = jacobi_degree(-2.0, -3.0, 4);
    CHECK(z.case_no == 3);
    CHECK(classical_poly(FamilySpec::jacobi(-2.0, -3.0), 4).degree(1e-12) == -1);
    // alpha in the set alone does not kill the polynomial
    JacobiDegree k = jacobi_degree(-1.0, -5.0, 4);
    CHECK(k.case_no == 2);
    CHECK(k.degree == 1);
    CHECK(classical_poly(FamilySpec::jacobi(-1.0, -5.0), 4).degree(1e-12) == 1);
}

TEST_CASE("eigen equation") {
    CHECK(eigen_residual(FamilySpec::hermite(), 3).residual < 1e-14);
    CHECK(eigen_residual(FamilySpec::jacobi(1, 1), 2).residual < 1e-14);
    EigenReport z = eigen_residual(FamilySpec::laguerre(0.4), 0);
    CHECK(z.residual < 1e-15);
    CHECK(z.degree_relation < 1e-15);
    // (d^2 - 2x d + 2n) H_3 = 0
    PolyC h3 = classical_poly(FamilySpec::hermite(), 3);
    PolyC r = derivative(h3, 2) - PolyC{0.0, 2.0} * derivative(h3) + 6.0 * h3;
    CHECK(r.max_abs() < 1e-14);
}

TEST_CASE("recurrences") {
    PolyC h1 = classical_poly(FamilySpec::hermite(), 1), h2 = classical_poly(FamilySpec::hermite(), 2);
    CHECK(rel_diff(derivative(h2), 2.0 * h1) < 1e-15);
    double a = 0.7;
    CHECK(rel_diff(derivative(classical_poly(FamilySpec::laguerre(a), 2)), -classical_poly(FamilySpec::laguerre(a + 1), 1)) < 1e-15);
    for (FamilySpec f : {FamilySpec::jacobi(0.4, 1.3), FamilySpec::laguerre(0.7), FamilySpec::hermite(), FamilySpec::bessel(0.6)})
        for (int n = 1; n <= 6; ++n) CHECK(polynomial_recurrences(f, n).max() < 1e-12);
    CHECK(polynomial_recurrences(FamilySpec::jacobi(0.4, 1.3), 0).max() < 1e-12);
}

TEST_CASE("generating functions") {
    auto h = generating_expand(FamilySpec::hermite(), 2);
    CHECK(rel_diff(h[1], PolyC{0.0, 2.0}) < 1e-15);
    CHECK(rel_diff(h[2], PolyC{-1.0, 0.0, 2.0}) < 1e-15);
    double a = 1.6;
    auto l = generating_expand(FamilySpec::laguerre(a), 1);
    CHECK(rel_diff(l[1], PolyC{a, -1.0}) < 1e-15);
    for (FamilySpec f : {FamilySpec::jacobi(0.4, 1.3), FamilySpec::laguerre(0.7), FamilySpec::hermite(), FamilySpec::bessel(0.6)}) {
        auto c = generating_expand(f, 8);
        double s = generating_scale(f);
        for (int n = 0; n <= 8; ++n) CHECK(rel_diff(c[n], std::pow(s, n) * classical_poly(f.shifted(n), n)) < 1e-12);
    }
}

TEST_CASE("moments") {
    const auto& o = test::oracles()["moments"];
    for (const auto& e : o["jacobi"]) {
        MomentTable m(FamilySpec::jacobi(e["alpha"], e["beta"]));
        CHECK(rel(m(e["k"]), e["value"]) < 1e-13);
    }
    for (const auto& e : o["laguerre"]) CHECK(rel(MomentTable(FamilySpec::laguerre(e["alpha"]))(e["k"]), e["value"]) < 1e-13);
    for (const auto& e : o["hermite"]) {
        double v = MomentTable(FamilySpec::hermite())(e["k"]);
        CHECK(std::abs(v - e["value"].get<double>()) < 1e-13 * std::max(1.0, std::abs(v)));
    }
    CHECK(rel(jacobi_moment_binomial(0.5, -0.3, 5), MomentTable(FamilySpec::jacobi(0.5, -0.3))(5)) < 1e-12);
}

TEST_CASE("inner products") {
    PolyC x{0.0, 1.0};
    CHECK(std::abs(inner_product_moments(x, x, FamilySpec::jacobi(0, 0)) - 2.0 / 3.0) < 1e-15);
    CHECK(std::abs(inner_product_moments(x, PolyC(1.0), FamilySpec::laguerre(0)) - 1.0) < 1e-15);
    CHECK(std::abs(inner_product_moments(x, x, FamilySpec::hermite()) - std::sqrt(pi) / 2.0) < 1e-15);
    CHECK_THROWS_AS(inner_product_moments(x, x, FamilySpec::bessel(0.5)), NoOrthogonalityInterval);
}

TEST_CASE("norms") {
    CHECK(std::abs(orthogonality_check(FamilySpec::jacobi(0, 0), 0).norms[0] - 2.0) < 1e-15);
    CHECK(std::abs(family_norm(FamilySpec::hermite(), 2) - 2.0 * std::sqrt(pi)) < 1e-14);
    CHECK(std::abs(family_norm(FamilySpec::laguerre(0), 1) - 1.0) < 1e-15);
    for (const auto& e : test::oracles()["jacobi_norm"])
        CHECK(rel(family_norm(FamilySpec::jacobi(e["alpha"], e["beta"]), e["n"]), e["value"]) < 1e-12);
    CHECK_THROWS_AS(family_norm(FamilySpec::bessel(0.5), 1), NoOrthogonalityInterval);
}

TEST_CASE("property: Gram matrices are diagonal") {
    Gen g(42);
    for (int i = 0; i < 20; ++i) {
        FamilySpec f = i % 3 == 0   ? FamilySpec::jacobi(g.uniform(-0.9, 4), g.uniform(-0.9, 4))
                       : i % 3 == 1 ? FamilySpec::laguerre(g.uniform(-0.9, 4))
                                    : FamilySpec::hermite();
        OrthogonalityReport r = orthogonality_check(f, 10);
        CHECK(r.max_offdiag < 1e-10);
        CHECK(r.max_family_err < 1e-10);
        CHECK(r.max_formula_err < 1e-10);
    }
}

TEST_CASE("CSV table") {
    std::string csv = poly_table_csv(FamilySpec::hermite(), 2);
    CHECK(csv.rfind("n,degree", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
}
