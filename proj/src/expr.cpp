#include "hgc/expr.hpp"

#include <sstream>

namespace hgc {

struct Expr::Node {
    Op op;
    cd c;
    std::shared_ptr<const Node> a, b;
};

Expr::Expr(cd c) : n_(std::make_shared<const Node>(Node{Op::Const, c, nullptr, nullptr})) {}

Expr Expr::var() { return Expr(std::make_shared<const Node>(Node{Op::Var, 0.0, nullptr, nullptr})); }

Expr Expr::make(Op op, Expr a, Expr b, cd c) {
    return Expr(std::make_shared<const Node>(Node{op, c, a.n_, b.n_}));
}

Expr::Op Expr::op() const { return n_->op; }

bool Expr::is_const(cd c) const { return n_->op == Op::Const && n_->c == c; }

namespace {
bool is_c(const Expr& e) { return e.op() == Expr::Op::Const; }
}

Expr operator+(const Expr& a, const Expr& b) {
    if (a.is_const(0.0)) return b;
    if (b.is_const(0.0)) return a;
    if (is_c(a) && is_c(b)) return Expr(a.n_->c + b.n_->c);
    return Expr::make(Expr::Op::Add, a, b);
}
Expr operator-(const Expr& a, const Expr& b) {
    if (b.is_const(0.0)) return a;
    if (is_c(a) && is_c(b)) return Expr(a.n_->c - b.n_->c);
    return Expr::make(Expr::Op::Sub, a, b);
}
Expr operator*(const Expr& a, const Expr& b) {
    if (a.is_const(0.0) || b.is_const(0.0)) return Expr(0.0);
    if (a.is_const(1.0)) return b;
    if (b.is_const(1.0)) return a;
    if (is_c(a) && is_c(b)) return Expr(a.n_->c * b.n_->c);
    return Expr::make(Expr::Op::Mul, a, b);
}
Expr operator/(const Expr& a, const Expr& b) {
    if (a.is_const(0.0)) return Expr(0.0);
    if (b.is_const(1.0)) return a;
    if (is_c(a) && is_c(b)) return Expr(a.n_->c / b.n_->c);
    return Expr::make(Expr::Op::Div, a, b);
}
Expr pow(const Expr& a, cd e) {
    if (e == cd(0)) return Expr(1.0);
    if (e == cd(1)) return a;
    if (is_c(a)) return Expr(std::pow(a.n_->c, e));
    return Expr::make(Expr::Op::PowC, a, Expr(), e);
}
Expr sqrt(const Expr& a) { return Expr::make(Expr::Op::Sqrt, a); }
Expr sin(const Expr& a) { return Expr::make(Expr::Op::Sin, a); }
Expr cos(const Expr& a) { return Expr::make(Expr::Op::Cos, a); }
Expr sinh(const Expr& a) { return Expr::make(Expr::Op::Sinh, a); }
Expr cosh(const Expr& a) { return Expr::make(Expr::Op::Cosh, a); }
Expr exp(const Expr& a) { return Expr::make(Expr::Op::Exp, a); }
Expr log(const Expr& a) { return Expr::make(Expr::Op::Log, a); }

cd Expr::eval(cd z) const {
    const Node& n = *n_;
    auto A = [&] { return Expr(n.a).eval(z); };
    auto B = [&] { return Expr(n.b).eval(z); };
    switch (n.op) {
        case Op::Const: return n.c;
        case Op::Var: return z;
        case Op::Add: return A() + B();
        case Op::Sub: return A() - B();
        case Op::Mul: return A() * B();
        case Op::Div: return A() / B();
        case Op::PowC: {
            cd x = A();
            if (n.c.imag() == 0 && n.c.real() == std::round(n.c.real()) && std::abs(n.c.real()) < 64)
                return std::pow(x, int(n.c.real()));
            return std::exp(n.c * std::log(x));
        }
        case Op::Sqrt: return std::sqrt(A());
        case Op::Sin: return std::sin(A());
        case Op::Cos: return std::cos(A());
        case Op::Sinh: return std::sinh(A());
        case Op::Cosh: return std::cosh(A());
        case Op::Exp: return std::exp(A());
        case Op::Log: return std::log(A());
    }
    return 0.0;
}

Expr Expr::derivative() const {
    const Node& n = *n_;
    Expr a(n.a), b(n.b);
    switch (n.op) {
        case Op::Const: return Expr(0.0);
        case Op::Var: return Expr(1.0);
        case Op::Add: return a.derivative() + b.derivative();
        case Op::Sub: return a.derivative() - b.derivative();
        case Op::Mul: return a.derivative() * b + a * b.derivative();
        case Op::Div: return (a.derivative() * b - a * b.derivative()) / pow(b, 2.0);
        case Op::PowC: return Expr(n.c) * pow(a, n.c - 1.0) * a.derivative();
        case Op::Sqrt: return a.derivative() / (Expr(2.0) * *this);
        case Op::Sin: return cos(a) * a.derivative();
        case Op::Cos: return Expr(-1.0) * sin(a) * a.derivative();
        case Op::Sinh: return cosh(a) * a.derivative();
        case Op::Cosh: return sinh(a) * a.derivative();
        case Op::Exp: return *this * a.derivative();
        case Op::Log: return a.derivative() / a;
    }
    return Expr(0.0);
}

Expr Expr::derivative(int k) const {
    Expr e = *this;
    for (int i = 0; i < k; ++i) e = e.derivative();
    return e;
}

std::string Expr::to_string() const {
    const Node& n = *n_;
    Expr a(n.a), b(n.b);
    std::ostringstream os;
    auto fn = [&](const char* name) { os << name << "(" << a.to_string() << ")"; };
    switch (n.op) {
        case Op::Const:
            if (n.c.imag() == 0)
                os << n.c.real();
            else
                os << "(" << n.c.real() << (n.c.imag() < 0 ? "-" : "+") << std::abs(n.c.imag()) << "i)";
            break;
        case Op::Var: os << "z"; break;
        case Op::Add: os << "(" << a.to_string() << " + " << b.to_string() << ")"; break;
        case Op::Sub: os << "(" << a.to_string() << " - " << b.to_string() << ")"; break;
        case Op::Mul: os << a.to_string() << "*" << b.to_string(); break;
        case Op::Div: os << a.to_string() << "/" << b.to_string(); break;
        case Op::PowC: os << a.to_string() << "^" << Expr(n.c).to_string(); break;
        case Op::Sqrt: fn("sqrt"); break;
        case Op::Sin: fn("sin"); break;
        case Op::Cos: fn("cos"); break;
        case Op::Sinh: fn("sinh"); break;
        case Op::Cosh: fn("cosh"); break;
        case Op::Exp: fn("exp"); break;
        case Op::Log: fn("log"); break;
    }
    return os.str();
}

} // namespace hgc
