#include "pcs/sim.hpp"

#include <cmath>

#include "parallel.hpp"
#include "pcs/error.hpp"

namespace pcs {

namespace {

std::vector<double> gammas_of(const CensoringScheme& scheme) {
    const int m = scheme.m();
    std::vector<double> gamma(static_cast<std::size_t>(m));
    long long tail = 0;
    for (int r = m; r >= 1; --r) {
        tail += scheme[static_cast<std::size_t>(r - 1)];
        gamma[static_cast<std::size_t>(r - 1)] = static_cast<double>(m - r + 1 + tail);
    }
    return gamma;
}

// Welford accumulator; merged with Chan's pairwise update.
struct Moments {
    double count = 0.0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x) {
        count += 1.0;
        const double d = x - mean;
        mean += d / count;
        m2 += d * (x - mean);
    }

    void merge(const Moments& o) {
        if (o.count == 0.0) return;
        const double total = count + o.count;
        const double d = o.mean - mean;
        mean += d * o.count / total;
        m2 += o.m2 + d * d * count * o.count / total;
        count = total;
    }
};

}  // namespace

SimulatedExperiment generate_experiment(const CensoringScheme& scheme, const WeibullParams& params,
                                        Rng& rng) {
    params.validate();
    const std::vector<double> gamma = gammas_of(scheme);
    SimulatedExperiment out{{}, scheme, rng.seed()};
    out.failure_times.reserve(gamma.size());
    const double inv_shape = 1.0 / params.shape;
    double x = 0.0;
    for (double g : gamma) {
        x += rng.exponential() / g;
        out.failure_times.push_back(std::pow(x, inv_shape) / params.scale_rate);
    }
    return out;
}

MonteCarloEstimate monte_carlo_duration(const CensoringScheme& scheme, const WeibullParams& params,
                                        std::uint64_t replications, std::uint64_t seed, int workers) {
    params.validate();
    if (replications < 1000) throw InvalidArgument("need at least 1000 replications");
    if (workers < 1) throw InvalidArgument("workers must be positive");

    const auto w = static_cast<std::size_t>(workers);
    std::vector<Moments> parts(w);
    detail::parallel_for(w, workers, [&](std::size_t k) {
        Rng rng(seed, k);
        const std::uint64_t begin = replications * k / w;
        const std::uint64_t end = replications * (k + 1) / w;
        for (std::uint64_t r = begin; r < end; ++r) {
            parts[k].add(generate_experiment(scheme, params, rng).failure_times.back());
        }
    });

    Moments total;
    for (const auto& p : parts) total.merge(p);
    const double variance = total.m2 / (total.count - 1.0);
    return {total.mean, std::sqrt(variance / total.count), replications};
}

}  // namespace pcs
