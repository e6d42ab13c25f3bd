#include "hgc/gamma.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace hgc {

namespace {

constexpr double kG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

// Gamma(z) for Re z >= 1/2.
cd lanczos(cd z) {
    z -= 1.0;
    cd x = kLanczos[0];
    for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + double(i));
    cd t = z + kG + 0.5;
    return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

cd lanczos_log(cd z) {
    z -= 1.0;
    cd x = kLanczos[0];
    for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + double(i));
    cd t = z + kG + 0.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

} // namespace

bool is_integer(cd z, double tol) {
    return std::abs(z.imag()) <= tol && std::abs(z.real() - std::round(z.real())) <= tol;
}

bool is_nonpositive_integer(cd z, double tol) {
    return is_integer(z, tol) && std::round(z.real()) <= 0.0;
}

cd gamma(cd z) {
    if (z.imag() == 0.0 && z.real() == std::round(z.real()) && z.real() <= 0.0)
        return cd(std::numeric_limits<double>::infinity(), 0.0);
    if (z.real() < 0.5) {
        const double pi = std::numbers::pi;
        return pi / (std::sin(pi * z) * lanczos(1.0 - z));
    }
    return lanczos(z);
}

cd rgamma(cd z) {
    if (z.imag() == 0.0 && z.real() == std::round(z.real()) && z.real() <= 0.0) return 0.0;
    if (z.real() < 0.5) {
        const double pi = std::numbers::pi;
        return std::sin(pi * z) * lanczos(1.0 - z) / pi;
    }
    return 1.0 / lanczos(z);
}

cd lgamma(cd z) {
    if (z.real() < 0.5) {
        const double pi = std::numbers::pi;
        return std::log(pi / std::sin(pi * z)) - lanczos_log(1.0 - z);
    }
    return lanczos_log(z);
}

cd pochhammer(cd a, int n) {
    cd r = 1.0;
    for (int j = 0; j < n; ++j) r *= a + double(j);
    return r;
}

cd rising_step(cd a, cd h, int n) {
    cd r = 1.0;
    for (int j = 0; j < n; ++j) r *= a + double(j) * h;
    return r;
}

} // namespace hgc
