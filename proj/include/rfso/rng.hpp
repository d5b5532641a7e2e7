#pragma once

#include <cstdint>

namespace rfso {

// Philox4x32-10 counter-based generator. Every (seed, label, index)
// triple names an independent stream, so parallel sampling is
// partition-independent: sample i of link `label` is the same bits no
// matter how work is split across threads.
class SampleRng {
  public:
    SampleRng(std::uint64_t seed, std::uint32_t label, std::uint64_t index)
        : key0_(static_cast<std::uint32_t>(seed)),
          key1_(static_cast<std::uint32_t>(seed >> 32) ^ label),
          ctr0_(static_cast<std::uint32_t>(index)),
          ctr1_(static_cast<std::uint32_t>(index >> 32)) {}

    // Uniform in (0, 1), 53-bit resolution.
    double uniform();

    // Standard normal (Box-Muller, consumes two uniforms per pair).
    double normal();

    // Exponential with unit mean.
    double exponential();

    // Gamma with given shape, unit rate (Marsaglia-Tsang).
    double gamma(double shape);

    std::uint64_t next_bits();

  private:
    void refill();

    std::uint32_t key0_, key1_;
    std::uint32_t ctr0_, ctr1_;
    std::uint32_t block_ = 0;
    std::uint32_t out_[4] = {};
    int avail_ = 0;
    double cached_normal_ = 0.0;
    bool have_normal_ = false;
};

}  // namespace rfso
