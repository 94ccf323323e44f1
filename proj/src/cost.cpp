#include "pcs/cost.hpp"

#include <cmath>

#include "pcs/error.hpp"

namespace pcs {

void CostCoefficients::validate() const {
    for (double k : {k1, k2, k3}) {
        if (!std::isfinite(k) || k < 0.0) {
            throw InvalidArgument("cost coefficients must be finite and non-negative");
        }
    }
    if (!(k1 > 0.0 || k2 > 0.0 || k3 > 0.0)) {
        throw InvalidArgument("at least one cost coefficient must be positive");
    }
}

CostBreakdown cost_breakdown(const CensoringScheme& scheme, const WeibullParams& params,
                             const CostCoefficients& coeffs) {
    params.validate();
    coeffs.validate();
    const CampCramerCoefficients cc = camp_cramer_coefficients(scheme);
    CostBreakdown b;
    b.failures = scheme.m();
    b.expected_duration = expected_duration(cc, params);
    b.integrated_variance = integrated_quantile_log_variance(cc, params);
    b.total = coeffs.k1 * b.failures + coeffs.k2 * b.expected_duration +
              coeffs.k3 * b.integrated_variance;
    return b;
}

double total_cost(const CensoringScheme& scheme, const WeibullParams& params,
                  const CostCoefficients& coeffs) {
    return cost_breakdown(scheme, params, coeffs).total;
}

std::pair<WeibullParams, CostCoefficients> scale_transform(const WeibullParams& params,
                                                           const CostCoefficients& coeffs, double w) {
    if (!(std::isfinite(w) && w > 0.0)) {
        throw InvalidArgument("scale factor must be finite and positive");
    }
    return {WeibullParams{params.shape, params.scale_rate / w},
            CostCoefficients{coeffs.k1, coeffs.k2 / w, coeffs.k3}};
}

}  // namespace pcs
