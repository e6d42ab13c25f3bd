#!/usr/bin/env python3
"""Freeze reference values computed with mpmath into tests/data/oracles.json.

Run from the repository root:  python3 tools/make_oracles.py
"""
import json
import os

from mpmath import mp, mpc, mpf, gamma, hyp0f1, hyp1f1, hyp2f0, hyp2f1, hermite, jacobi, laguerre, quad, exp, log, pi, sqrt, inf, rf, factorial, binomial

mp.dps = 40


def c(v):
    v = mpc(v)
    return [float(v.real), float(v.imag)]


def rgamma(x):
    x = mpc(x)
    if x.imag == 0 and x.real <= 0 and x.real == int(x.real):
        return mpc(0)
    return 1 / gamma(x)


def olver2f1(a, b, cc, z):
    if cc.imag == 0 and cc.real <= 0 and cc.real == int(cc.real):
        k = int(-cc.real)
        # terms start at j = k + 1
        p = rf(a, k + 1) * rf(b, k + 1) * z ** (k + 1) / factorial(k + 1)
        return p * hyp2f1(a + k + 1, b + k + 1, k + 2, z)
    return hyp2f1(a, b, cc, z) * rgamma(cc)


def hermite_s(a, z):
    # S(a; z) = 2^a H_{-a}(z) with the physicists' Hermite function
    return 2 ** a * hermite(-a, z)


def psi(a, b, mu, nu, m, z, tilde=False):
    # coefficient of u^m of the kernel by a circle inside the annulus
    def pe(aa, mm, u):
        return exp(aa * u) if mm == 0 else (1 + mm * u) ** (aa / mm)

    def kernel(u):
        if not tilde:
            return pe(-a, mu, u) * pe(-b, nu, z / u)
        return pe(-a, mu, z / u) * pe(-b, nu, u)

    lo = abs(z * (mu if tilde else nu))
    hi = 1 / abs(nu if tilde else mu) if (nu if tilde else mu) != 0 else mpf(10)
    if lo == 0:
        lo = hi / 100
    r = sqrt(lo * hi)
    f = lambda t: kernel(r * exp(1j * t)) * (r * exp(1j * t)) ** (-m)
    return quad(f, [0, pi / 2, pi, 3 * pi / 2, 2 * pi]) / (2 * pi)


def euler_f(p, q, n, z):
    # int_1^inf (s - z)^{-n-1} s^p (s - 1)^q ds
    return quad(lambda s: (s - z) ** (-n - 1) * s ** p * (s - 1) ** q, [1, 2, 10, inf])


out = {}

out["gauss2f1"] = []
for a, b, cc, z in [
    (1, 1, 2, 0.5),
    (0.3, 1.7, 2.4, -0.6),
    (mpc(0.5, 0.3), mpc(-1.2, 0.4), mpc(1.8, -0.2), mpc(0.3, 0.5)),
    (2.5, -0.7, 0.6, mpc(-0.4, -0.6)),
    (mpc(-1.1, 0.9), 0.45, mpc(0.7, 1.3), mpc(0.75, 0.1)),
]:
    a, b, cc, z = mpc(a), mpc(b), mpc(cc), mpc(z)
    out["gauss2f1"].append({"a": c(a), "b": c(b), "c": c(cc), "z": c(z), "value": c(hyp2f1(a, b, cc, z)), "olver": c(olver2f1(a, b, cc, z))})

out["gauss2f1_olver_negative_c"] = []
for a, b, cc, z in [(0.3, 1.7, -2, 0.4), (mpc(0.2, 0.5), -0.8, -1, mpc(-0.5, 0.3)), (1.5, 0.5, 0, 0.6)]:
    a, b, cc, z = mpc(a), mpc(b), mpc(cc), mpc(z)
    out["gauss2f1_olver_negative_c"].append({"a": c(a), "b": c(b), "c": c(cc), "z": c(z), "olver": c(olver2f1(a, b, cc, z))})

out["kummer1f1"] = []
for a, cc, z in [(2.5, 2.5, 1), (0.7, 1.9, 0.5), (mpc(-1.3, 0.4), mpc(2.2, 0.5), mpc(-3, 1.5)), (0.25, 3.5, 6.0), (-2.5, 0.8, -4.0)]:
    a, cc, z = mpc(a), mpc(cc), mpc(z)
    out["kummer1f1"].append({"a": c(a), "c": c(cc), "z": c(z), "value": c(hyp1f1(a, cc, z)), "olver": c(hyp1f1(a, cc, z) * rgamma(cc))})

out["zero0f1"] = []
for cc, z in [(1.5, 1), (0.5, 1), (1, 1), (mpc(0.4, 0.6), mpc(-2.5, 1.0)), (2.7, 7.5), (-0.5, -3.0)]:
    cc, z = mpc(cc), mpc(z)
    out["zero0f1"].append({"c": c(cc), "z": c(z), "olver": c(hyp0f1(cc, z) * rgamma(cc))})

out["two2f0"] = []
for a, b, w in [(1.5, 0.5, -0.1), (1.5, 0.5, mpc(-0.2, 0.2)), (mpc(0.4, 0.3), mpc(-0.6, 0.8), mpc(-0.7, -0.9)),
                (-0.35, 1.25, mpc(-1.2, 0.4)), (mpc(-1.6, -0.3), mpc(-0.4, 0.5), mpc(0.3, -0.8)), (-1, 3, 0.2)]:
    a, b, w = mpc(a), mpc(b), mpc(w)
    out["two2f0"].append({"a": c(a), "b": c(b), "w": c(w), "value": c(hyp2f0(a, b, w))})

out["hermite_s"] = []
for a, z in [(1, 1), (-2, 1), (0.35, 0.8), (mpc(1.2, -0.7), mpc(0.5, 1.1)), (mpc(-1.4, 0.6), mpc(1.3, -0.4)), (2.2, mpc(-0.9, 0.8))]:
    a, z = mpc(a), mpc(z)
    out["hermite_s"].append({"a": c(a), "z": c(z), "value": c(hermite_s(a, z))})

out["psi"] = []
for a, b, mu, nu, m, z, tilde in [
    (0.7, -0.4, 0.3, 0.2, 0, 0.6, False),
    (mpc(0.5, 0.2), mpc(-0.3, 0.6), mpc(0.25, -0.1), mpc(-0.2, 0.3), 2, mpc(0.4, -0.3), False),
    (mpc(-0.8, 0.1), 0.9, 0.4, mpc(0.1, 0.2), -1, mpc(-0.5, 0.2), True),
    (1.1, 0.6, 0, 0.5, 1, 0.8, False),
    (0.6, 0.3, 0, 0, -2, mpc(0.7, 0.4), False),
]:
    a, b, mu, nu, z = mpc(a), mpc(b), mpc(mu), mpc(nu), mpc(z)
    out["psi"].append({"a": c(a), "b": c(b), "mu": c(mu), "nu": c(nu), "m": m, "z": c(z), "tilde": tilde,
                       "value": c(psi(a, b, mu, nu, m, z, tilde))})

out["euler"] = []
for p, q, n, z in [(-1.3, 0.4, 0.5, 0.3), (-2.1, -0.3, 1.2, mpc(-0.4, 0.2)), (-1.6, 0.8, 0.25, mpc(0.1, -0.3))]:
    out["euler"].append({"p": p, "q": q, "n": n, "z": c(mpc(z)), "value": c(euler_f(mpf(p), mpf(q), mpf(n), mpc(z)))})

out["jacobi"] = []
for n, al, be, x in [(3, 0.5, 0, 1), (4, 1.3, -0.6, 0.35), (7, -0.5, 2.5, -0.8), (10, 2.0, 3.0, 0.12)]:
    out["jacobi"].append({"n": n, "alpha": al, "beta": be, "x": x, "value": float(jacobi(n, al, be, x))})

out["laguerre"] = []
for n, al, x in [(1, 2, 0.7), (5, 0.3, 2.2), (9, -0.5, 7.5)]:
    out["laguerre"].append({"n": n, "alpha": al, "x": x, "value": float(laguerre(n, al, x))})

out["hermite_poly"] = []
for n, x in [(2, 1), (5, 0.3), (8, -1.7)]:
    # the Rodrigues normalization (1/n!) e^{x^2} (-d)^n e^{-x^2} = H_n / n!
    out["hermite_poly"].append({"n": n, "x": x, "value": float(hermite(n, x) / factorial(n))})

out["bessel_poly"] = []
for n, th, x in [(1, 0.5, 0.8), (3, 1.5, -0.6), (6, -0.7, 0.45)]:
    # (-1)^n (1/n!) 2F0(-n, n + theta + 1; -; x)
    v = (-1) ** n * hyp2f0(-n, n + th + 1, x) / factorial(n)
    out["bessel_poly"].append({"n": n, "theta": th, "x": x, "value": float(mpf(v.real) if isinstance(v, mpc) else v)})

out["jacobi_norm"] = []
for n, al, be in [(0, 0, 0), (3, 0.5, -0.3), (6, 2.2, 1.4)]:
    val = quad(lambda x: jacobi(n, al, be, x) ** 2 * (1 - x) ** al * (1 + x) ** be, [-1, 0, 1])
    out["jacobi_norm"].append({"n": n, "alpha": al, "beta": be, "value": float(val)})

out["moments"] = {
    "jacobi": [{"alpha": al, "beta": be, "k": k, "value": float(quad(lambda x: x ** k * (1 - x) ** al * (1 + x) ** be, [-1, 0, 1]))}
               for al, be, k in [(0, 0, 2), (0.5, -0.3, 5), (2.2, 1.4, 20)]],
    "laguerre": [{"alpha": al, "k": k, "value": float(gamma(al + k + 1))} for al, k in [(0, 1), (0.3, 4)]],
    "hermite": [{"k": k, "value": float(quad(lambda x: x ** k * exp(-x * x), [-inf, 0, inf]))} for k in [0, 2, 3, 6]],
}

path = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "tests", "data", "oracles.json")
os.makedirs(os.path.dirname(path), exist_ok=True)
with open(path, "w") as f:
    json.dump(out, f, indent=1)
    f.write("\n")
print("wrote", os.path.normpath(path))
