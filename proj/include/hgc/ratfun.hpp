#pragma once

#include "hgc/poly.hpp"

namespace hgc {

// num/den with a monic denominator; common linear factors are cancelled
// on construction.
class RatFun {
public:
    RatFun() : num_(), den_(cd(1)) {}
    RatFun(cd c) : num_(c), den_(cd(1)) {}
    RatFun(PolyC p) : num_(std::move(p)), den_(cd(1)) {}
    RatFun(PolyC num, PolyC den, bool reduce = true);

    const PolyC& num() const { return num_; }
    const PolyC& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    cd operator()(cd z) const { return num_(z) / den_(z); }

    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a) { return RatFun(-a.num_, a.den_, false); }
    friend RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    friend RatFun operator/(const RatFun& a, const RatFun& b);

private:
    PolyC num_, den_;
};

RatFun derivative(const RatFun& f);

// f((a w + b)/(c w + d)) as a rational function of w.
RatFun mobius_compose(const RatFun& f, cd a, cd b, cd c, cd d);

// Cross-multiplied difference a.num*b.den - b.num*a.den, scaled by the larger
// of the two products' max coefficient.
double rel_diff(const RatFun& a, const RatFun& b);

std::string to_string(const RatFun& f, const std::string& var = "z");

} // namespace hgc
