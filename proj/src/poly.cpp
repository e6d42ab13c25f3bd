#include "hgc/poly.hpp"

#include <Eigen/Eigenvalues>
#include <cstdio>
#include <sstream>

#include "hgc/errors.hpp"

namespace hgc {

DivMod divmod(const PolyC& num, const PolyC& den) {
    if (den.is_zero()) throw InvalidArgument("division by the zero polynomial");
    int dn = num.degree(), dd = den.degree();
    if (dn < dd) return {PolyC(), num};
    std::vector<cd> r = num.to_vector();
    std::vector<cd> q(dn - dd + 1, cd(0));
    cd lead = den.lead();
    for (int k = dn - dd; k >= 0; --k) {
        cd f = r[k + dd] / lead;
        q[k] = f;
        for (int j = 0; j <= dd; ++j) r[k + j] -= f * den[j];
        r[k + dd] = 0;
    }
    r.resize(dd > 0 ? dd : 0);
    return {PolyC(q), PolyC(r)};
}

DivMod divide_linear(const PolyC& p, cd r) {
    int n = p.degree();
    if (n < 1) return {PolyC(), p};
    std::vector<cd> q(n);
    cd acc = p[n];
    for (int k = n - 1; k >= 0; --k) {
        q[k] = acc;
        acc = acc * r + p[k];
    }
    return {PolyC(q), PolyC(acc)};
}

std::vector<cd> roots(const PolyC& p) {
    int n = p.degree();
    if (n < 1) return {};
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
    cd lead = p.lead();
    for (int i = 0; i < n; ++i) comp(0, i) = -p[n - 1 - i] / lead;
    for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
    std::vector<cd> out(es.eigenvalues().data(), es.eigenvalues().data() + n);
    return out;
}

std::vector<cd> small_roots(const PolyC& p, double disc_tol, bool* double_root) {
    if (double_root) *double_root = false;
    int n = p.degree();
    if (n <= 0) return {};
    if (n == 1) return {-p[0] / p[1]};
    if (n > 2) throw InvalidDegree("small_roots expects degree <= 2");
    cd a = p[2], b = p[1], c = p[0];
    double scale = std::max({std::abs(a), std::abs(b), std::abs(c)});
    cd disc = b * b - 4.0 * a * c;
    if (std::abs(disc) < disc_tol * scale * scale) {
        if (double_root) *double_root = true;
        cd r = -b / (2.0 * a);
        return {r, r};
    }
    cd sq = std::sqrt(disc);
    // Avoid cancellation in the smaller root.
    cd qq = (std::real(std::conj(b) * sq) >= 0) ? -0.5 * (b + sq) : -0.5 * (b - sq);
    cd r1 = qq / a;
    cd r2 = (qq != cd(0)) ? c / qq : -b / a - r1;
    return {r1, r2};
}

std::string to_string(const PolyC& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    char buf[96];
    for (int k = 0; k <= p.degree(); ++k) {
        cd c = p[k];
        if (c == cd(0)) continue;
        if (c.imag() == 0.0)
            std::snprintf(buf, sizeof buf, "%.12g", c.real());
        else
            std::snprintf(buf, sizeof buf, "(%.12g%+.12gi)", c.real(), c.imag());
        if (!first) os << " + ";
        first = false;
        os << buf;
        if (k >= 1) os << "*" << var;
        if (k >= 2) os << "^" << k;
    }
    return os.str();
}

} // namespace hgc
