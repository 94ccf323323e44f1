#ifndef PCS_COST_HPP
#define PCS_COST_HPP

#include <utility>

#include "pcs/model.hpp"
#include "pcs/scheme.hpp"

namespace pcs {

/// Weights of the total-cost functional.
struct CostCoefficients {
    double k1 = 0.0;  ///< per observed failure
    double k2 = 0.0;  ///< per unit of test duration
    double k3 = 0.0;  ///< per unit of integrated quantile-log variance

    /// Throws InvalidArgument unless all finite, >= 0 and at least one > 0.
    void validate() const;

    friend bool operator==(const CostCoefficients&, const CostCoefficients&) = default;
};

/// The three additive parts of the total cost, unweighted.
struct CostBreakdown {
    int failures = 0;
    double expected_duration = 0.0;
    double integrated_variance = 0.0;
    double total = 0.0;
};

/// k1 * m + k2 * E[Y_{m:m:n}] + k3 * integral_0^1 Var[ln Y_p] dp.
double total_cost(const CensoringScheme& scheme, const WeibullParams& params,
                  const CostCoefficients& coeffs);

CostBreakdown cost_breakdown(const CensoringScheme& scheme, const WeibullParams& params,
                             const CostCoefficients& coeffs);

/// The same design problem with lifetimes measured in units scaled by w:
/// returns (shape, scale_rate / w) and (k1, k2 / w, k3).
std::pair<WeibullParams, CostCoefficients> scale_transform(const WeibullParams& params,
                                                           const CostCoefficients& coeffs, double w);

}  // namespace pcs

#endif  // PCS_COST_HPP
