#include "rfso/montecarlo.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <thread>
#include <vector>

#include "rfso/errors.hpp"

namespace rfso {

namespace {

constexpr int kBatches = 100;

struct BatchSums {
    double asc = 0.0;
    std::uint64_t sop_lower = 0;
    std::uint64_t sop_exact = 0;
    std::uint64_t pnsc = 0;
    std::uint64_t n = 0;
};

enum StreamLabel : std::uint32_t { kMainRf = 0, kFso = 1, kEveRf = 2 };

}  // namespace

void McConfig::validate() const {
    if (n_samples < kBatches)
        throw DomainError("McConfig: n_samples must be at least 100");
    if (n_streams < 0) throw DomainError("McConfig: n_streams must be >= 0");
    if (!(confidence > 0.0 && confidence < 1.0))
        throw DomainError("McConfig: confidence must be in (0,1)");
}

namespace {

// Two-sided standard-normal quantile via Newton on erfc.
double normal_z(double confidence) {
    double p = 0.5 * (1.0 - confidence);  // upper tail mass
    double z = 2.0;
    for (int i = 0; i < 60; ++i) {
        double f = 0.5 * std::erfc(z / std::sqrt(2.0)) - p;
        double d = -std::exp(-0.5 * z * z) / std::sqrt(2.0 * 3.14159265358979324);
        double step = f / d;
        z -= step;
        if (std::abs(step) < 1e-14) break;
    }
    return z;
}

}  // namespace

SampleSizeAdvice variance_report(const McEstimate& e, double target_rel) {
    if (!(target_rel > 0.0))
        throw DomainError("variance_report: target_rel must be positive");
    double denom = std::abs(e.value) * target_rel;
    if (denom <= 0.0 || e.ci_half <= 0.0) {
        bool degenerate = std::abs(e.value) <= 0.0;
        return {degenerate ? std::numeric_limits<double>::infinity()
                           : static_cast<double>(e.n_effective),
                degenerate};
    }
    double factor = e.ci_half / denom;
    return {std::ceil(e.n_effective * factor * factor), false};
}

McSecrecy mc_secrecy(const RfLink& main, const FsoSampler& fso,
                     const RfLink& eve, double rs, const McConfig& cfg) {
    cfg.validate();
    const double theta = std::exp2(rs);
    std::vector<BatchSums> batches(kBatches);

    auto run_batch = [&](int b) {
        BatchSums s;
        std::uint64_t lo = cfg.n_samples * b / kBatches;
        std::uint64_t hi = cfg.n_samples * (b + 1) / kBatches;
        for (std::uint64_t i = lo; i < hi; ++i) {
            SampleRng rng_r(cfg.seed, kMainRf, i);
            SampleRng rng_d(cfg.seed, kFso, i);
            SampleRng rng_v(cfg.seed, kEveRf, i);
            double go = std::min(main.sample(rng_r), fso.sample(rng_d));
            double gv = eve.sample(rng_v);
            double cs = std::log1p(go) - std::log1p(gv);
            if (cs > 0.0) s.asc += cs;
            if (go <= theta * gv) ++s.sop_lower;
            if (go <= theta * gv + theta - 1.0) ++s.sop_exact;
            if (go > gv) ++s.pnsc;
            ++s.n;
        }
        batches[b] = s;
    };

    unsigned n_threads = cfg.n_streams
                             ? static_cast<unsigned>(cfg.n_streams)
                             : std::max(1u, std::thread::hardware_concurrency());
    if (n_threads <= 1) {
        for (int b = 0; b < kBatches; ++b) run_batch(b);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < n_threads; ++t)
            pool.emplace_back([&] {
                for (int b = next.fetch_add(1); b < kBatches;
                     b = next.fetch_add(1))
                    run_batch(b);
            });
        for (auto& th : pool) th.join();
    }

    // Deterministic reduction in batch order; the batch means feed the
    // confidence intervals.
    const double z = normal_z(cfg.confidence);
    auto reduce = [&](auto&& per_batch) -> McEstimate {
        double mean = 0.0, wsum = 0.0;
        std::vector<double> bm(kBatches);
        for (int b = 0; b < kBatches; ++b) {
            bm[b] = per_batch(batches[b]) / static_cast<double>(batches[b].n);
            mean += per_batch(batches[b]);
            wsum += static_cast<double>(batches[b].n);
        }
        mean /= wsum;
        double var = 0.0;
        for (int b = 0; b < kBatches; ++b)
            var += (bm[b] - mean) * (bm[b] - mean);
        var /= kBatches - 1;
        double se = std::sqrt(var / kBatches);
        return {mean, se, z * se, cfg.n_samples};
    };
    McSecrecy out;
    out.asc = reduce([](const BatchSums& s) { return s.asc; });
    out.sop_lower = reduce(
        [](const BatchSums& s) { return static_cast<double>(s.sop_lower); });
    out.sop_exact = reduce(
        [](const BatchSums& s) { return static_cast<double>(s.sop_exact); });
    out.pnsc =
        reduce([](const BatchSums& s) { return static_cast<double>(s.pnsc); });
    return out;
}

}  // namespace rfso
