#pragma once

#include <complex>

namespace hgc {

using cd = std::complex<double>;

// Lanczos (g = 7, 9 terms) with reflection for Re z < 1/2.
cd gamma(cd z);
// 1/Gamma, zero at the non-positive integers.
cd rgamma(cd z);
cd lgamma(cd z);

// (a)_n
cd pochhammer(cd a, int n);

// a (a + h) ... (a + (n-1) h)
cd rising_step(cd a, cd h, int n);

bool is_nonpositive_integer(cd z, double tol = 1e-12);
bool is_integer(cd z, double tol = 1e-12);

} // namespace hgc
