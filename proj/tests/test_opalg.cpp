#include "common.hpp"

#include "hgc/diffop.hpp"
#include "hgc/errors.hpp"
#include "hgc/monomial.hpp"
#include "hgc/symmetry.hpp"

using namespace hgc;
using CT = ClassicalType;

namespace {

const DiffOp D = DiffOp::d();
const DiffOp Z = DiffOp(PolyC{0.0, 1.0});

EquationParams P(CT t, cd a, cd b, cd c) { return classical_params(t, {a, b, c}); }

DiffOp random_op(Gen& g) {
    DiffOp r;
    for (int k = 0; k <= 2; ++k) r = r + DiffOp::term(k, RatFun(test::random_poly(g, 2)));
    return r;
}

double size(const DiffOp& op) {
    double s = 0.0;
    for (const auto& [k, c] : op.terms()) s = std::max(s, c.num().max_abs() / std::abs(c.den().lead()));
    return s;
}

// the same equation may come back with the whole triple negated
double up_to_sign(const EquationParams& a, const EquationParams& b) {
    return std::min(rel_diff(a, b), rel_diff(a, scaled(b, -1.0)));
}

} // namespace

TEST_CASE("canonical commutators") {
    CHECK(residual(commutator(D, Z), DiffOp(cd(1.0))) < 1e-15);
    CHECK(residual(commutator(Z * D, D), -D) < 1e-15);
}

TEST_CASE("commutator of the lowering operator with d") {
    EquationParams p = P(CT::Gauss2F1, 0.3, 1.7, 2.4);
    EquationParams p1 = ladder_params(p, 1.0);
    DiffOp low = DiffOp::term(1, RatFun(p.sigma)) + DiffOp(p1.kappa);
    DiffOp expect = -DiffOp::term(1, RatFun(derivative(p.sigma))) - DiffOp(cd(p1.kappa1()));
    CHECK(residual(commutator(low, D), expect) < 1e-14);
}

TEST_CASE("hgc operator of the classical types") {
    cd a = 0.3, b = 1.7, c = 2.4;
    DiffOp g = DiffOp::term(2, RatFun(PolyC{0.0, 1.0, -1.0})) + DiffOp::term(1, RatFun(PolyC{c, -(a + b + 1.0)})) + DiffOp(-a * b);
    CHECK(residual(hgc_operator(P(CT::Gauss2F1, a, b, c)), g) < 1e-15);

    DiffOp z = DiffOp::term(2, RatFun(PolyC{0.0, 1.0})) + DiffOp::term(1, RatFun(PolyC(c))) + DiffOp(cd(-1.0));
    CHECK(residual(hgc_operator(P(CT::ZeroF1, 0, 0, c)), z) < 1e-15);

    CHECK(residual(hgc_operator(EquationParams(PolyC(1.0), PolyC(), 0.0)), DiffOp::d(2)) == 0.0);
}

TEST_CASE("gauge conjugation") {
    cd m = 2.5;
    DiffOp r = gauge_conjugate(D, WeightForm::power(0.0, m), false);
    CHECK(residual(r, D - DiffOp(RatFun(PolyC(m), PolyC{0.0, 1.0}))) < 1e-15);

    DiffOp e = gauge_conjugate(D, WeightForm::exponential(PolyC{0.0, 0.0, -1.0}), false);
    CHECK(residual(e, D + DiffOp(PolyC{0.0, 2.0})) < 1e-15);

    DiffOp op = hgc_operator(P(CT::Kummer1F1, 0.7, 0, 1.9));
    CHECK(residual(gauge_conjugate(op, WeightForm{}, false), op) == 0.0);
}

TEST_CASE("property: gauge conjugation round trip") {
    Gen g(21);
    for (int i = 0; i < 100; ++i) {
        DiffOp op = random_op(g);
        WeightForm w = WeightForm::power(g.complex(-1, 1), g.complex(-2, 2)) * WeightForm::exponential(test::random_poly(g, 2));
        DiffOp back = gauge_conjugate(gauge_conjugate(op, w, false), w, true);
        CHECK(residual(back, op) < 1e-10);
    }
}

TEST_CASE("mobius substitution") {
    // z = -1/w
    DiffOp inv = mobius_substitute(D, 0.0, -1.0, 1.0, 0.0);
    CHECK(residual(inv, DiffOp::term(1, RatFun(PolyC{0.0, 0.0, 1.0}))) < 1e-15);
    DiffOp two = mobius_substitute(D, 2.0, 0.0, 0.0, 1.0);
    CHECK(residual(two, DiffOp(cd(0.5)) * D) < 1e-15);
    DiffOp op = hgc_operator(P(CT::Gauss2F1, 0.3, 1.7, 2.4));
    CHECK(residual(mobius_substitute(op, 1.0, 0.0, 0.0, 1.0), op) < 1e-15);
    CHECK_THROWS_AS(mobius_substitute(op, 1.0, 2.0, 2.0, 4.0), SingularMap);
}

TEST_CASE("property: mobius round trip") {
    Gen g(22);
    for (int i = 0; i < 100; ++i) {
        DiffOp op = random_op(g);
        cd a = g.complex(-1, 1), b = g.complex(-1, 1), c = g.complex(-1, 1), d = g.complex(-1, 1);
        if (std::abs(a * d - b * c) < 0.1) continue;
        DiffOp w = mobius_substitute(op, a, b, c, d);
        CHECK(residual(mobius_substitute(w, d, -b, -c, a), op) < 1e-9);
    }
}

TEST_CASE("property: Jacobi identity") {
    Gen g(23);
    for (int i = 0; i < 100; ++i) {
        DiffOp a = random_op(g), b = random_op(g), c = random_op(g);
        DiffOp j = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) + commutator(c, commutator(a, b));
        double s = std::max({size(commutator(a, commutator(b, c))), size(commutator(b, commutator(c, a))), 1.0});
        CHECK(size(j) / s < 1e-10);
    }
}

TEST_CASE("symmetry examples") {
    cd a = 0.3, b = 1.7, c = 2.4;
    SymmetryReport basic = verify_symmetry(SymmetryKind::Basic, P(CT::Gauss2F1, a, b, c));
    CHECK(basic.residual < 1e-10);
    CHECK(rel_diff(basic.transformed, P(CT::Gauss2F1, 1.0 - b, 1.0 - a, 2.0 - c)) < 1e-14);

    SymmetryReport pw = verify_symmetry(SymmetryKind::Power, P(CT::Gauss2F1, a, b, c));
    CHECK(pw.residual < 1e-10);
    CHECK(rel_diff(pw.transformed, P(CT::Gauss2F1, b + 1.0 - c, a + 1.0 - c, 2.0 - c)) < 1e-14);

    cd k = 0.7, kc = 1.9;
    SymmetryReport inv = verify_symmetry(SymmetryKind::Inversion, P(CT::Kummer1F1, k, 0, kc));
    CHECK(inv.residual < 1e-10);
    CHECK(inv.twice_residual < 1e-10);
    CHECK(up_to_sign(inv.transformed, P(CT::TwoF0, k, 1.0 + k - kc, 0)) < 1e-13);
}

TEST_CASE("symmetry preconditions") {
    EquationParams h = P(CT::Hermite, 0.4, 0, 0);
    CHECK_THROWS_AS(verify_symmetry(SymmetryKind::Power, h), NotApplicable);
    CHECK_THROWS_AS(verify_symmetry(SymmetryKind::Inversion, h), NotApplicable);
}

TEST_CASE("factorization") {
    FactorizationReport h = verify_factorization(P(CT::Hermite, 0.4, 0, 0), 0.0);
    CHECK(h.factor_residual_up < 1e-12);
    CHECK(h.factor_residual_down < 1e-12);
    CHECK(h.transmutation_residual_up < 1e-12);
    CHECK(h.transmutation_residual_down < 1e-12);
    CHECK(verify_factorization(P(CT::Gauss2F1, 0.3, 1.7, 2.4), 3.0).max_residual() < 1e-10);
    Gen g(24);
    for (int i = 0; i < 20; ++i) {
        EquationParams p(test::random_poly(g, 2), test::random_poly(g, 1), g.complex(-1, 1));
        CHECK(verify_factorization(p, g.complex(-3, 3)).constant_gap_residual < 1e-12);
    }
}

TEST_CASE("descending product") {
    CHECK(verify_descending_product(P(CT::Gauss2F1, 0.3, 1.7, 2.4), 3) < 1e-10);
    CHECK(verify_descending_product(P(CT::Hermite, 0.4, 0, 0), 4) < 1e-10);
}

TEST_CASE("Miller algebra tags") {
    auto tag = [](const EquationParams& p) { return miller_generators(p, MillerRep::Reduced).algebra_tag; };
    CHECK(tag(P(CT::Gauss2F1, 0.3, 1.7, 2.4)) == AlgebraTag::Sl2PlusC);
    CHECK(tag(EquationParams(PolyC{0.0, 1.0}, PolyC(0.6), 0.0)) == AlgebraTag::EuclidPlusC);
    CHECK(tag(EquationParams(PolyC(1.0), PolyC{0.0, -2.0}, 0.0)) == AlgebraTag::Osc);
}

TEST_CASE("Miller commutation relations") {
    for (MillerRep rep : {MillerRep::Reduced, MillerRep::Full}) {
        CHECK(verify_miller_commutation(miller_generators(P(CT::Hermite, 0.4, 0, 0), rep), 6).max_residual() < 1e-12);
        CHECK(verify_miller_commutation(miller_generators(P(CT::Gauss2F1, 0.3, 1.7, 2.4), rep), 6).max_residual() < 1e-12);
    }
    MillerGenerators e = miller_generators(EquationParams(PolyC(2.0), PolyC(), 0.5), MillerRep::Reduced);
    MonomialOperator c = commutator(e.Aplus, e.Aminus);
    for (int n = -3; n <= 3; ++n)
        for (int k = -3; k <= 3; ++k) CHECK(max_abs(c.apply(Exponents{n, k, 0})) == 0.0);
}

TEST_CASE("restricted Casimir") {
    EquationParams p = P(CT::Gauss2F1, 0.3, 1.7, 2.4);
    CHECK(residual(casimir_restrict(p, 0.0), hgc_operator(p)) == 0.0);

    cd c = 1.5;
    EquationParams z = P(CT::ZeroF1, 0, 0, c);
    DiffOp expect = DiffOp::term(2, RatFun(PolyC{0.0, 1.0})) + DiffOp::term(1, RatFun(PolyC(c + 1.0))) + DiffOp(cd(-1.0));
    CHECK(residual(casimir_restrict(z, 1.0), expect) < 1e-15);

    Gen g(25);
    for (int i = 0; i < 50; ++i) {
        EquationParams q(test::random_poly(g, 2), test::random_poly(g, 1), g.complex(-1, 1));
        cd n = g.complex(-3, 3);
        CHECK(residual(casimir_restrict(q, n), hgc_operator(ladder_params(q, n))) < 1e-13);
    }
}
