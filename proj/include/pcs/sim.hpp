#ifndef PCS_SIM_HPP
#define PCS_SIM_HPP

#include <cstdint>
#include <vector>

#include "pcs/model.hpp"
#include "pcs/rng.hpp"
#include "pcs/scheme.hpp"

namespace pcs {

/// One simulated progressively censored life test.
struct SimulatedExperiment {
    std::vector<double> failure_times;  ///< y_{1:m:n} < ... < y_{m:m:n}
    CensoringScheme scheme;
    std::uint64_t seed = 0;
};

/// Failure times from exponential spacings: X_i = sum_{j<=i} E_j / gamma_j
/// with E_j ~ Exp(1) is the i-th censored order statistic of a unit
/// exponential, mapped through the Weibull quantile y = X^{1/shape} / rate.
SimulatedExperiment generate_experiment(const CensoringScheme& scheme, const WeibullParams& params,
                                        Rng& rng);

struct MonteCarloEstimate {
    double mean = 0.0;
    double standard_error = 0.0;
    std::uint64_t replications = 0;
};

/// Sample mean and standard error of Y_{m:m:n}. Worker w draws from
/// Rng(seed, w); partial moments are merged in worker order, so a fixed
/// (seed, replications, workers) triple is reproducible.
MonteCarloEstimate monte_carlo_duration(const CensoringScheme& scheme, const WeibullParams& params,
                                        std::uint64_t replications, std::uint64_t seed,
                                        int workers = 1);

}  // namespace pcs

#endif  // PCS_SIM_HPP
