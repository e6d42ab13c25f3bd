#include "hgc/diffop.hpp"

#include <algorithm>
#include <sstream>

#include "hgc/errors.hpp"

namespace hgc {

RatFun DiffOp::coeff(int k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? RatFun() : it->second;
}

void DiffOp::set(int k, const RatFun& c) {
    if (c.is_zero())
        terms_.erase(k);
    else
        terms_[k] = c;
}

RatFun DiffOp::apply(const RatFun& f) const {
    RatFun acc, df = f;
    int k = 0;
    for (const auto& [ord, c] : terms_) {
        for (; k < ord; ++k) df = derivative(df);
        acc = acc + c * df;
    }
    return acc;
}

PolyC DiffOp::apply(const PolyC& p) const {
    RatFun r = apply(RatFun(p));
    if (!r.is_polynomial()) throw InvalidArgument("operator has non-polynomial coefficients");
    return r.num() / r.den()[0];
}

DiffOp operator+(const DiffOp& a, const DiffOp& b) {
    DiffOp r = a;
    for (const auto& [k, c] : b.terms_) r.set(k, r.coeff(k) + c);
    return r;
}

DiffOp operator*(const DiffOp& a, const DiffOp& b) {
    DiffOp r;
    for (const auto& [i, ai] : a.terms_) {
        for (const auto& [j, bj] : b.terms_) {
            RatFun dl = bj;
            double binom = 1.0;
            for (int l = 0; l <= i; ++l) {
                if (!dl.is_zero()) r.set(i - l + j, r.coeff(i - l + j) + ai * dl * RatFun(cd(binom)));
                binom = binom * double(i - l) / double(l + 1);
                dl = derivative(dl);
            }
        }
    }
    return r;
}

DiffOp compose(const DiffOp& a, const DiffOp& b) { return a * b; }

DiffOp commutator(const DiffOp& a, const DiffOp& b) { return a * b - b * a; }

DiffOp gauge_conjugate(const DiffOp& op, const RatFun& L, bool invert) {
    DiffOp shift = DiffOp::d() + DiffOp(invert ? L : -L);
    DiffOp r, p(cd(1));
    int k = 0;
    for (const auto& [ord, c] : op.terms()) {
        for (; k < ord; ++k) p = p * shift;
        r = r + DiffOp(c) * p;
    }
    return r;
}

DiffOp gauge_conjugate(const DiffOp& op, const WeightForm& rho, bool invert) {
    return gauge_conjugate(op, rho.log_derivative(), invert);
}

DiffOp mobius_substitute(const DiffOp& op, cd a, cd b, cd c, cd d) {
    cd det = a * d - b * c;
    if (std::abs(det) <= 1e-14 * std::max({std::abs(a * d), std::abs(b * c), 1e-300}))
        throw SingularMap("degenerate Moebius map");
    PolyC lin{d, c};
    DiffOp D = DiffOp::term(1, RatFun(lin * lin / det));
    DiffOp r, p(cd(1));
    int k = 0;
    for (const auto& [ord, coef] : op.terms()) {
        for (; k < ord; ++k) p = D * p;
        r = r + DiffOp(mobius_compose(coef, a, b, c, d)) * p;
    }
    return r;
}

double residual(const DiffOp& a, const DiffOp& b) {
    double diff = 0.0, scale = 0.0;
    int top = std::max(a.order(), b.order());
    for (int k = 0; k <= top; ++k) {
        RatFun ak = a.coeff(k), bk = b.coeff(k);
        PolyC l = ak.num() * bk.den(), r = bk.num() * ak.den();
        diff = std::max(diff, (l - r).max_abs());
        scale = std::max({scale, l.max_abs(), r.max_abs()});
    }
    return scale > 0 ? diff / scale : diff;
}

std::string to_string(const DiffOp& op, const std::string& var) {
    if (op.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = op.terms().rbegin(); it != op.terms().rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << "(" << to_string(it->second, var) << ")";
        if (it->first == 1)
            os << "∂";
        else if (it->first > 1)
            os << "∂^" << it->first;
    }
    return os.str();
}

} // namespace hgc
