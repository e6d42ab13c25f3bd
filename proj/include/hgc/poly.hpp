#pragma once

#include <Eigen/Core>
#include <algorithm>
#include <cmath>
#include <complex>
#include <initializer_list>
#include <string>
#include <vector>

namespace hgc {

using cd = std::complex<double>;

// Dense univariate polynomial, coefficients lowest degree first.
template <class Scalar>
class Poly {
public:
    using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

    Poly() = default;
    Poly(Scalar c0) : c_(1) { c_(0) = c0; normalize(); }
    Poly(std::initializer_list<Scalar> cs) : c_(static_cast<Eigen::Index>(cs.size())) {
        Eigen::Index i = 0;
        for (const auto& v : cs) c_(i++) = v;
        normalize();
    }
    explicit Poly(const std::vector<Scalar>& cs) : c_(static_cast<Eigen::Index>(cs.size())) {
        for (std::size_t i = 0; i < cs.size(); ++i) c_(static_cast<Eigen::Index>(i)) = cs[i];
        normalize();
    }
    explicit Poly(Vec cs) : c_(std::move(cs)) { normalize(); }

    static Poly monomial(int k, Scalar c = Scalar(1)) {
        Vec v = Vec::Zero(k + 1);
        v(k) = c;
        return Poly(v);
    }
    static Poly x() { return monomial(1); }

    const Vec& coeffs() const { return c_; }
    std::vector<Scalar> to_vector() const { return {c_.data(), c_.data() + c_.size()}; }

    bool is_zero() const { return c_.size() == 0; }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Scalar operator[](int k) const { return (k >= 0 && k < c_.size()) ? c_(k) : Scalar(0); }
    Scalar lead() const { return is_zero() ? Scalar(0) : c_(c_.size() - 1); }

    double max_abs() const { return is_zero() ? 0.0 : c_.cwiseAbs().maxCoeff(); }

    // Degree after discarding coefficients below rel_tol * max_abs().
    int degree(double rel_tol) const {
        double s = max_abs();
        for (int k = degree(); k >= 0; --k)
            if (std::abs(c_(k)) > rel_tol * s) return k;
        return -1;
    }

    Poly trimmed(double rel_tol) const {
        Vec v = c_;
        double s = max_abs();
        for (Eigen::Index k = 0; k < v.size(); ++k)
            if (std::abs(v(k)) <= rel_tol * s) v(k) = Scalar(0);
        return Poly(v);
    }

    template <class T>
    auto operator()(const T& z) const {
        using R = decltype(Scalar() * z);
        R acc = R(0);
        for (Eigen::Index k = c_.size() - 1; k >= 0; --k) acc = acc * z + c_(k);
        return acc;
    }

    Poly& operator+=(const Poly& o) {
        Eigen::Index n = std::max(c_.size(), o.c_.size());
        Vec v = Vec::Zero(n);
        v.head(c_.size()) = c_;
        v.head(o.c_.size()) += o.c_;
        c_ = std::move(v);
        normalize();
        return *this;
    }
    Poly& operator-=(const Poly& o) { return *this += -o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly& operator*=(Scalar s) {
        c_ *= s;
        normalize();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a) { return Poly(Vec(-a.c_)); }
    friend Poly operator*(Poly a, Scalar s) { return a *= s; }
    friend Poly operator*(Scalar s, Poly a) { return a *= s; }
    friend Poly operator/(Poly a, Scalar s) { return a *= Scalar(1) / s; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        Vec v = Vec::Zero(a.c_.size() + b.c_.size() - 1);
        for (Eigen::Index i = 0; i < a.c_.size(); ++i)
            v.segment(i, b.c_.size()) += a.c_(i) * b.c_;
        return Poly(v);
    }

private:
    void normalize() {
        Eigen::Index n = c_.size();
        while (n > 0 && c_(n - 1) == Scalar(0)) --n;
        c_.conservativeResize(n);
    }

    Vec c_;
};

using PolyC = Poly<cd>;

template <class S>
Poly<S> derivative(const Poly<S>& p, int k = 1) {
    Poly<S> r = p;
    for (int j = 0; j < k; ++j) {
        if (r.degree() < 1) return Poly<S>();
        typename Poly<S>::Vec v(r.degree());
        for (int i = 1; i <= r.degree(); ++i) v(i - 1) = r[i] * S(i);
        r = Poly<S>(v);
    }
    return r;
}

template <class S>
Poly<S> pow(const Poly<S>& p, int n) {
    Poly<S> r(S(1));
    for (int i = 0; i < n; ++i) r *= p;
    return r;
}

// p(a*z + b)
template <class S>
Poly<S> compose_affine(const Poly<S>& p, S a, S b) {
    Poly<S> r, lin{b, a};
    for (int k = p.degree(); k >= 0; --k) r = r * lin + Poly<S>(p[k]);
    return r;
}

// Coefficientwise max |a-b| relative to the larger max-magnitude coefficient.
template <class S>
double rel_diff(const Poly<S>& a, const Poly<S>& b) {
    double s = std::max(a.max_abs(), b.max_abs());
    Poly<S> d = a - b;
    if (d.is_zero()) return 0.0;
    return s > 0 ? d.max_abs() / s : d.max_abs();
}

template <class S>
bool approx_equal(const Poly<S>& a, const Poly<S>& b, double rel_tol = 1e-12) {
    return rel_diff(a, b) <= rel_tol;
}

struct DivMod {
    PolyC quot, rem;
};
DivMod divmod(const PolyC& num, const PolyC& den);

// Division by (z - r); remainder is p(r).
DivMod divide_linear(const PolyC& p, cd r);

// Roots via the companion matrix.
std::vector<cd> roots(const PolyC& p);

// Roots of a polynomial of degree <= 2 in closed form; a double root is
// reported twice when |disc| < disc_tol * scale^2.
std::vector<cd> small_roots(const PolyC& p, double disc_tol = 1e-10, bool* double_root = nullptr);

std::string to_string(const PolyC& p, const std::string& var = "z");

} // namespace hgc
