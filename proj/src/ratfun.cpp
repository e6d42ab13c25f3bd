#include "hgc/ratfun.hpp"

#include <algorithm>
#include <cmath>

#include "hgc/errors.hpp"

namespace hgc {

namespace {

constexpr double kClusterTol = 1e-5;
constexpr double kDivideTol = 1e-9;

double abs_scale(const PolyC& p, cd r) {
    double s = 0.0, rp = 1.0, ar = std::abs(r);
    for (int k = 0; k <= p.degree(); ++k, rp *= ar) s += std::abs(p[k]) * rp;
    return s;
}

struct Cluster {
    cd center;
    int mult;
};

// roots of a k-fold factor spread like eps^(1/k) around it
std::vector<Cluster> cluster_roots(const std::vector<cd>& rs) {
    double tol = std::clamp(4.0 * std::pow(2.2e-16, 1.0 / double(std::max<std::size_t>(rs.size(), 1))), kClusterTol, 2e-3);
    std::vector<Cluster> out;
    std::vector<bool> used(rs.size(), false);
    for (std::size_t i = 0; i < rs.size(); ++i) {
        if (used[i]) continue;
        cd sum = rs[i];
        int m = 1;
        used[i] = true;
        for (std::size_t j = i + 1; j < rs.size(); ++j) {
            if (!used[j] && std::abs(rs[j] - rs[i]) <= tol * (1.0 + std::abs(rs[i]))) {
                used[j] = true;
                sum += rs[j];
                ++m;
            }
        }
        out.push_back({sum / double(m), m});
    }
    return out;
}

// Newton on the (m-1)th derivative, where the cluster is a simple root
cd polish(const PolyC& p, const Cluster& c) {
    if (c.mult < 2) return c.center;
    PolyC q = derivative(p, c.mult - 1), dq = derivative(q);
    cd z = c.center;
    for (int it = 0; it < 4; ++it) {
        cd d = dq(z);
        if (d == cd(0)) break;
        cd step = q(z) / d;
        if (!(std::abs(step) < 1e-3 * (1.0 + std::abs(z)))) break;
        z -= step;
    }
    return z;
}

} // namespace

RatFun::RatFun(PolyC num, PolyC den, bool reduce) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw InvalidArgument("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = PolyC(cd(1));
        return;
    }
    cd lead = den_.lead();
    if (lead != cd(1)) {
        num_ = num_ / lead;
        den_ = den_ / lead;
    }
    if (!reduce || den_.degree() < 1 || num_.degree() < 1) return;
    for (const auto& c : cluster_roots(roots(den_))) {
        cd r = polish(den_, c);
        for (int k = 0; k < c.mult && num_.degree() >= 1; ++k) {
            DivMod dn = divide_linear(num_, r);
            DivMod dd = divide_linear(den_, r);
            if (std::abs(dn.rem[0]) > kDivideTol * abs_scale(num_, r)) break;
            if (std::abs(dd.rem[0]) > kDivideTol * abs_scale(den_, r)) break;
            num_ = dn.quot;
            den_ = dd.quot;
        }
    }
    lead = den_.lead();
    num_ = num_ / lead;
    den_ = den_ / lead;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_.degree() == b.den_.degree() && approx_equal(a.den_, b.den_, 1e-15))
        return RatFun(a.num_ + b.num_, a.den_, a.den_.degree() > 0);
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator*(const RatFun& a, const RatFun& b) {
    if (a.is_zero() || b.is_zero()) return RatFun();
    bool need = a.den_.degree() > 0 || b.den_.degree() > 0;
    return RatFun(a.num_ * b.num_, a.den_ * b.den_, need);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) throw InvalidArgument("division by the zero rational function");
    return RatFun(a.num() * b.den(), a.den() * b.num());
}

RatFun derivative(const RatFun& f) {
    if (f.is_polynomial()) return RatFun(derivative(f.num()) / f.den()[0]);
    return RatFun(derivative(f.num()) * f.den() - f.num() * derivative(f.den()), f.den() * f.den());
}

RatFun mobius_compose(const RatFun& f, cd a, cd b, cd c, cd d) {
    int n = std::max(f.num().degree(), f.den().degree());
    PolyC top{b, a}, bot{d, c};
    auto lift = [&](const PolyC& p) {
        PolyC r;
        for (int i = 0; i <= p.degree(); ++i) r += p[i] * pow(top, i) * pow(bot, n - i);
        return r;
    };
    return RatFun(lift(f.num()), lift(f.den()));
}

double rel_diff(const RatFun& a, const RatFun& b) {
    PolyC l = a.num() * b.den(), r = b.num() * a.den();
    double s = std::max(l.max_abs(), r.max_abs());
    PolyC d = l - r;
    if (d.is_zero()) return 0.0;
    return s > 0 ? d.max_abs() / s : d.max_abs();
}

std::string to_string(const RatFun& f, const std::string& var) {
    if (f.is_polynomial()) return to_string(f.num() / f.den()[0], var);
    return "(" + to_string(f.num(), var) + ")/(" + to_string(f.den(), var) + ")";
}

} // namespace hgc
