#include "rfso/rng.hpp"

#include <cmath>

namespace rfso {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void philox_round(std::uint32_t c[4], std::uint32_t k0, std::uint32_t k1) {
    std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * c[0];
    std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * c[2];
    std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
    std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
    std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
    std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
    std::uint32_t n0 = hi1 ^ c[1] ^ k0;
    std::uint32_t n1 = lo1;
    std::uint32_t n2 = hi0 ^ c[3] ^ k1;
    std::uint32_t n3 = lo0;
    c[0] = n0;
    c[1] = n1;
    c[2] = n2;
    c[3] = n3;
}

}  // namespace

void SampleRng::refill() {
    std::uint32_t c[4] = {ctr0_, ctr1_, block_++, 0u};
    std::uint32_t k0 = key0_, k1 = key1_;
    for (int r = 0; r < 10; ++r) {
        philox_round(c, k0, k1);
        k0 += kWeyl0;
        k1 += kWeyl1;
    }
    out_[0] = c[0];
    out_[1] = c[1];
    out_[2] = c[2];
    out_[3] = c[3];
    avail_ = 4;
}

std::uint64_t SampleRng::next_bits() {
    if (avail_ < 2) refill();
    std::uint64_t hi = out_[avail_ - 1];
    std::uint64_t lo = out_[avail_ - 2];
    avail_ -= 2;
    return (hi << 32) | lo;
}

double SampleRng::uniform() {
    // (0,1): never returns exactly 0 or 1.
    return ((next_bits() >> 11) + 0.5) * (1.0 / 9007199254740992.0);
}

double SampleRng::normal() {
    if (have_normal_) {
        have_normal_ = false;
        return cached_normal_;
    }
    double u1 = uniform();
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double t = 6.283185307179586477 * u2;
    cached_normal_ = r * std::sin(t);
    have_normal_ = true;
    return r * std::cos(t);
}

double SampleRng::exponential() { return -std::log(uniform()); }

double SampleRng::gamma(double shape) {
    if (shape < 1.0) {
        // Boost: G(a) = G(a+1) * U^{1/a}.
        double u = uniform();
        return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x = normal();
        double v = 1.0 + c * x;
        if (v <= 0.0) continue;
        v = v * v * v;
        double u = uniform();
        double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
        if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
    }
}

}  // namespace rfso
