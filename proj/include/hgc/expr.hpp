#pragma once

#include <memory>
#include <string>

#include "hgc/poly.hpp"

namespace hgc {

// Tiny closed-form expression in one variable z, enough for the elementary
// kernels: arithmetic, constant powers, sqrt and the trig/hyperbolic functions.
class Expr {
public:
    enum class Op { Const, Var, Add, Sub, Mul, Div, PowC, Sqrt, Sin, Cos, Sinh, Cosh, Exp, Log };

    Expr(cd c = 0.0);
    static Expr var();

    Op op() const;
    cd eval(cd z) const;
    Expr derivative() const;
    Expr derivative(int k) const;
    std::string to_string() const;
    bool is_const(cd c) const;

    friend Expr operator+(const Expr& a, const Expr& b);
    friend Expr operator-(const Expr& a, const Expr& b);
    friend Expr operator*(const Expr& a, const Expr& b);
    friend Expr operator/(const Expr& a, const Expr& b);
    friend Expr pow(const Expr& a, cd e);
    friend Expr sqrt(const Expr& a);
    friend Expr sin(const Expr& a);
    friend Expr cos(const Expr& a);
    friend Expr sinh(const Expr& a);
    friend Expr cosh(const Expr& a);
    friend Expr exp(const Expr& a);
    friend Expr log(const Expr& a);

private:
    struct Node;
    std::shared_ptr<const Node> n_;
    explicit Expr(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
    static Expr make(Op op, Expr a, Expr b = Expr(), cd c = 0.0);
};

} // namespace hgc
