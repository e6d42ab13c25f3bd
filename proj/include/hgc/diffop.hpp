#pragma once

#include <map>
#include <string>

#include "hgc/ratfun.hpp"
#include "hgc/weight.hpp"

namespace hgc {

// sum_k c_k(z) d^k with rational coefficients; zero coefficients are not stored.
class DiffOp {
public:
    DiffOp() = default;
    DiffOp(const RatFun& c0) { set(0, c0); }
    DiffOp(cd c0) : DiffOp(RatFun(c0)) {}
    DiffOp(const PolyC& c0) : DiffOp(RatFun(c0)) {}

    static DiffOp d(int k = 1) {
        DiffOp r;
        r.set(k, RatFun(cd(1)));
        return r;
    }
    // c(z) d^k
    static DiffOp term(int k, const RatFun& c) {
        DiffOp r;
        r.set(k, c);
        return r;
    }

    const std::map<int, RatFun>& terms() const { return terms_; }
    RatFun coeff(int k) const;
    int order() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }
    bool is_zero() const { return terms_.empty(); }

    void set(int k, const RatFun& c);

    RatFun apply(const RatFun& f) const;
    PolyC apply(const PolyC& p) const;

    friend DiffOp operator+(const DiffOp& a, const DiffOp& b);
    friend DiffOp operator-(const DiffOp& a) {
        DiffOp r;
        for (const auto& [k, c] : a.terms_) r.terms_.emplace(k, -c);
        return r;
    }
    friend DiffOp operator-(const DiffOp& a, const DiffOp& b) { return a + (-b); }
    // composition
    friend DiffOp operator*(const DiffOp& a, const DiffOp& b);

private:
    std::map<int, RatFun> terms_;
};

DiffOp compose(const DiffOp& a, const DiffOp& b);
DiffOp commutator(const DiffOp& a, const DiffOp& b);

// rho op rho^{-1}, or rho^{-1} op rho when invert.
DiffOp gauge_conjugate(const DiffOp& op, const WeightForm& rho, bool invert);
DiffOp gauge_conjugate(const DiffOp& op, const RatFun& log_derivative, bool invert);

// Operator in w where z = (a w + b)/(c w + d).
DiffOp mobius_substitute(const DiffOp& op, cd a, cd b, cd c, cd d);

// Max over orders of the cross-multiplied coefficient difference, divided by
// the largest coefficient magnitude of either operator.
double residual(const DiffOp& a, const DiffOp& b);

std::string to_string(const DiffOp& op, const std::string& var = "z");

} // namespace hgc
