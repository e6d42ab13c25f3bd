#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace hgc {

// splitmix64; the same stream on every platform
class Gen {
public:
    explicit Gen(std::uint64_t seed = 0x9e3779b97f4a7c15ULL) : s_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // [0, 1)
    double unit() { return double(next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
    int integer(int lo, int hi) { return lo + int(next() % std::uint64_t(hi - lo + 1)); }
    std::complex<double> complex(double lo, double hi) { return {uniform(lo, hi), uniform(lo, hi)}; }
    // uniform in the disc |z| < r
    std::complex<double> disc(double r) {
        return std::polar(r * std::sqrt(unit()), 2.0 * std::numbers::pi * unit());
    }
    // real part in [lo, hi], imaginary part in [-im, im]
    std::complex<double> near_real(double lo, double hi, double im) { return {uniform(lo, hi), uniform(-im, im)}; }

private:
    std::uint64_t s_;
};

} // namespace hgc
