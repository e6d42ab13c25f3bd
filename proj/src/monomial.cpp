#include "hgc/monomial.hpp"

#include <algorithm>
#include <cstdlib>

namespace hgc {

double max_abs(const MonoPoly& p) {
    double m = 0.0;
    for (const auto& [e, c] : p) m = std::max(m, std::abs(c));
    return m;
}

MonoPoly operator+(const MonoPoly& a, const MonoPoly& b) {
    MonoPoly r = a;
    for (const auto& [e, c] : b) r[e] += c;
    return r;
}

MonoPoly operator*(cd s, const MonoPoly& p) {
    MonoPoly r;
    for (const auto& [e, c] : p) r[e] = s * c;
    return r;
}

namespace {

MonoPoly apply_prim(const Prim& pr, const MonoPoly& p) {
    MonoPoly r;
    for (const auto& [e, c] : p) {
        if (c == cd(0)) continue;
        switch (pr.kind) {
            case Prim::MulVar: {
                Exponents f = e;
                f[pr.var] += pr.power;
                r[f] += c;
                break;
            }
            case Prim::Diff: {
                if (e[pr.var] == 0) break;
                Exponents f = e;
                f[pr.var] -= 1;
                r[f] += c * double(e[pr.var]);
                break;
            }
            case Prim::MulPolyZ: {
                for (int k = 0; k <= pr.poly.degree(); ++k) {
                    if (pr.poly[k] == cd(0)) continue;
                    Exponents f = e;
                    f[pr.var] += k;
                    r[f] += c * pr.poly[k];
                }
                break;
            }
        }
    }
    return r;
}

} // namespace

MonomialOperator MonomialOperator::identity() { return {{{cd(1), {}}}}; }

MonomialOperator MonomialOperator::mul_var(int var, int power) {
    return {{{cd(1), {Prim{Prim::MulVar, var, power, PolyC()}}}}};
}

MonomialOperator MonomialOperator::diff(int var) { return {{{cd(1), {Prim{Prim::Diff, var, 1, PolyC()}}}}}; }

MonomialOperator MonomialOperator::mul_poly(int var, const PolyC& p) {
    return {{{cd(1), {Prim{Prim::MulPolyZ, var, 1, p}}}}};
}

MonoPoly MonomialOperator::apply(const MonoPoly& p) const {
    MonoPoly acc;
    for (const auto& w : words) {
        MonoPoly q = p;
        for (auto it = w.prims.rbegin(); it != w.prims.rend(); ++it) q = apply_prim(*it, q);
        for (const auto& [e, c] : q) acc[e] += w.coeff * c;
    }
    return acc;
}

MonoPoly MonomialOperator::apply(const Exponents& e) const { return apply(MonoPoly{{e, cd(1)}}); }

MonomialOperator operator+(const MonomialOperator& a, const MonomialOperator& b) {
    MonomialOperator r = a;
    r.words.insert(r.words.end(), b.words.begin(), b.words.end());
    return r;
}

MonomialOperator operator*(cd s, const MonomialOperator& a) {
    MonomialOperator r = a;
    for (auto& w : r.words) w.coeff *= s;
    return r;
}

MonomialOperator operator-(const MonomialOperator& a, const MonomialOperator& b) { return a + cd(-1) * b; }

MonomialOperator operator*(const MonomialOperator& a, const MonomialOperator& b) {
    MonomialOperator r;
    for (const auto& wa : a.words) {
        for (const auto& wb : b.words) {
            MonomialOperator::Word w{wa.coeff * wb.coeff, wa.prims};
            w.prims.insert(w.prims.end(), wb.prims.begin(), wb.prims.end());
            r.words.push_back(std::move(w));
        }
    }
    return r;
}

MonomialOperator commutator(const MonomialOperator& a, const MonomialOperator& b) { return a * b - b * a; }

std::string to_string(AlgebraTag t) {
    switch (t) {
        case AlgebraTag::Sl2PlusC: return "sl(2,C)+C";
        case AlgebraTag::Osc: return "osc(C)";
        case AlgebraTag::EuclidPlusC: return "C^2 x| so(2,C)+C";
    }
    return "?";
}

MillerGenerators miller_generators(const EquationParams& p, MillerRep rep) {
    using MO = MonomialOperator;
    MillerGenerators g;
    g.rep = rep;
    g.params = p;
    g.alpha = p.sigma2() / 2.0;
    g.beta = p.kappa1();
    PolyC ds = derivative(p.sigma);
    if (rep == MillerRep::Reduced) {
        const int w = 0, z = 1;
        g.nvars = 2;
        g.z_index = z;
        g.N = MO::mul_var(w, 1) * MO::diff(w);
        g.Aplus = MO::mul_var(w, 1) * MO::diff(z);
        g.Aminus = MO::mul_var(w, -1) *
                   (MO::mul_poly(z, p.sigma) * MO::diff(z) + MO::mul_poly(z, ds) * MO::mul_var(w, 1) * MO::diff(w) +
                    MO::mul_poly(z, p.kappa));
    } else {
        const int t = 0, s = 1, z = 2;
        g.nvars = 3;
        g.z_index = z;
        g.N = MO::mul_var(t, 1) * MO::diff(t) - MO::mul_var(s, 1) * MO::diff(s);
        g.Aplus = MO::mul_var(t, 1) * MO::diff(z) + MO::mul_poly(z, ds) * MO::diff(s);
        g.Aminus = MO::mul_var(s, 1) * MO::diff(z) + MO::mul_poly(z, ds) * MO::diff(t) +
                   MO::mul_var(t, -1) * MO::mul_poly(z, p.kappa);
    }
    g.One = MO::identity();
    g.casimir = cd(0.5) * (g.Aminus * g.Aplus + g.Aplus * g.Aminus) + g.alpha * (g.N * g.N) + g.beta * g.N;

    double scale = std::max({p.sigma.max_abs(), p.kappa.max_abs(), 1e-300});
    bool a0 = std::abs(g.alpha) <= 1e-14 * scale, b0 = std::abs(g.beta) <= 1e-14 * scale;
    g.algebra_tag = !a0 ? AlgebraTag::Sl2PlusC : (!b0 ? AlgebraTag::Osc : AlgebraTag::EuclidPlusC);
    return g;
}

double CommutationReport::max_residual() const {
    return std::max({n_aplus, n_aminus, aplus_aminus, casimir_n, casimir_aplus, casimir_aminus, quadric});
}

namespace {

std::vector<Exponents> monomials(const MillerGenerators& g, int bound) {
    std::vector<Exponents> out;
    if (g.nvars == 2) {
        for (int w = -bound; w <= bound; ++w)
            for (int z = 0; z + std::abs(w) <= bound; ++z) out.push_back({w, z, 0});
    } else {
        for (int t = -bound; t <= bound; ++t)
            for (int s = -bound; s <= bound; ++s)
                for (int z = 0; z + std::abs(t) + std::abs(s) <= bound; ++z) out.push_back({t, s, z});
    }
    return out;
}

// |sum of pieces| relative to the largest single-word contribution
double relation_residual(const std::vector<std::pair<cd, const MonomialOperator*>>& pieces, const Exponents& e) {
    MonoPoly total;
    double scale = 0.0;
    for (const auto& [c, op] : pieces) {
        for (const auto& w : op->words) {
            MonomialOperator single{{w}};
            MonoPoly v = c * single.apply(e);
            scale = std::max(scale, max_abs(v));
            total = total + v;
        }
    }
    double r = max_abs(total);
    return scale > 0 ? r / scale : r;
}

} // namespace

CommutationReport verify_miller_commutation(const MillerGenerators& g, int degree_bound) {
    CommutationReport rep;
    const auto NAp = g.N * g.Aplus, ApN = g.Aplus * g.N;
    const auto NAm = g.N * g.Aminus, AmN = g.Aminus * g.N;
    const auto ApAm = g.Aplus * g.Aminus, AmAp = g.Aminus * g.Aplus;
    const auto& C = g.casimir;
    const auto CN = C * g.N, NC = g.N * C;
    const auto CAp = C * g.Aplus, ApC = g.Aplus * C;
    const auto CAm = C * g.Aminus, AmC = g.Aminus * C;

    MonomialOperator quad, Xq[3], qX[3];
    if (g.rep == MillerRep::Full) {
        quad = MonomialOperator::mul_poly(g.z_index, g.params.sigma) -
               MonomialOperator::mul_var(0, 1) * MonomialOperator::mul_var(1, 1);
        const MonomialOperator* gens[3] = {&g.N, &g.Aplus, &g.Aminus};
        for (int i = 0; i < 3; ++i) {
            Xq[i] = *gens[i] * quad;
            qX[i] = quad * *gens[i];
        }
    }

    const cd one(1), m1(-1);
    for (const auto& e : monomials(g, degree_bound)) {
        ++rep.monomials;
        rep.n_aplus = std::max(rep.n_aplus, relation_residual({{one, &NAp}, {m1, &ApN}, {m1, &g.Aplus}}, e));
        rep.n_aminus = std::max(rep.n_aminus, relation_residual({{one, &NAm}, {m1, &AmN}, {one, &g.Aminus}}, e));
        rep.aplus_aminus = std::max(rep.aplus_aminus, relation_residual({{one, &ApAm},
                                                                         {m1, &AmAp},
                                                                         {-2.0 * g.alpha, &g.N},
                                                                         {-g.beta, &g.One}},
                                                                        e));
        rep.casimir_n = std::max(rep.casimir_n, relation_residual({{one, &CN}, {m1, &NC}}, e));
        rep.casimir_aplus = std::max(rep.casimir_aplus, relation_residual({{one, &CAp}, {m1, &ApC}}, e));
        rep.casimir_aminus = std::max(rep.casimir_aminus, relation_residual({{one, &CAm}, {m1, &AmC}}, e));
        if (g.rep == MillerRep::Full)
            for (int i = 0; i < 3; ++i)
                rep.quadric = std::max(rep.quadric, relation_residual({{one, &Xq[i]}, {m1, &qX[i]}}, e));
    }
    return rep;
}

} // namespace hgc
