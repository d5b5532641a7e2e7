#pragma once

#include "rfso/fso_channel.hpp"
#include "rfso/rf_channel.hpp"

namespace rfso {

// End-to-end SNR of the relayed path is the minimum of the two hop
// SNRs, so the combined CDF is 1 - (1-F_rf)(1-F_fso).
inline double dual_hop_cdf(const RfLink& rf, const FsoLink& fso, double gamma) {
    double a = rf.cdf(gamma);
    double b = fso.cdf(gamma);
    return a + b - a * b;
}

}  // namespace rfso
