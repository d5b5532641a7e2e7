#pragma once

#include <cstdint>

#include "rfso/fso_channel.hpp"
#include "rfso/rf_channel.hpp"

namespace rfso {

struct McConfig {
    std::uint64_t seed = 12345;
    std::uint64_t n_samples = 1000000;
    int n_streams = 0;         // 0 = hardware concurrency
    double confidence = 0.99;  // two-sided CI level
    void validate() const;
};

struct McEstimate {
    double value;
    double std_error;  // from batch means
    double ci_half;    // z(confidence) * std_error
    std::uint64_t n_effective;
};

// Sample count needed to shrink the relative CI half-width to
// target_rel, by 1/sqrt(n) scaling. unbounded flags a (near-)zero mean.
struct SampleSizeAdvice {
    double recommended_n;
    bool unbounded;
};
SampleSizeAdvice variance_report(const McEstimate& e, double target_rel);

// All four metrics from one set of common random numbers, so the exact
// outage indicator dominates the lower-bound indicator sample by
// sample. Samples are split into a fixed number of logical batches with
// a deterministic reduction: results are bit-identical for any
// n_streams.
struct McSecrecy {
    McEstimate asc;        // nats
    McEstimate sop_lower;  // P(gamma_o <= theta gamma_v)
    McEstimate sop_exact;  // P(gamma_o <= theta gamma_v + theta - 1)
    McEstimate pnsc;       // P(gamma_o > gamma_v)
};

McSecrecy mc_secrecy(const RfLink& main, const FsoSampler& fso,
                     const RfLink& eve, double rs, const McConfig& cfg);

}  // namespace rfso
