#ifndef PCS_MODEL_HPP
#define PCS_MODEL_HPP

#include <cstddef>
#include <vector>

#include "pcs/scheme.hpp"
#include "pcs/signed_log.hpp"

namespace pcs {

inline constexpr double kEulerGamma = 0.57721566490153286;
inline constexpr double kPiSquaredOverSix = 1.6449340668482264;

/// Integral over (0,1) of g(p) = ln(-ln(1-p)); equals -gamma_E.
inline constexpr double kQuantileLogMean = -kEulerGamma;
/// Integral over (0,1) of g(p)^2; equals gamma_E^2 + pi^2/6.
inline constexpr double kQuantileLogSecondMoment =
    kEulerGamma * kEulerGamma + kPiSquaredOverSix;

/// Weibull lifetime with F(y) = 1 - exp(-(scale_rate * y)^shape).
///
/// scale_rate is a rate (1/time); a conventional scale parameter lambda
/// corresponds to scale_rate = 1/lambda.
struct WeibullParams {
    double shape = 1.0;
    double scale_rate = 1.0;

    /// Throws InvalidArgument unless both are finite and positive.
    void validate() const;

    double cdf(double y) const;
    double pdf(double y) const;
    /// Inverse of cdf(); p in [0, 1).
    double quantile(double p) const;
};

/// Camp-Cramer representation of the marginal densities of the
/// progressively censored order statistics for one scheme.
///
/// Indices k, i are 1-based in the accessors to match the usual notation
/// gamma_k, sigma_{i-1}, a_{k,i} with 1 <= k <= i <= m.
class CampCramerCoefficients {
public:
    int m() const noexcept { return static_cast<int>(gamma_.size()); }

    /// Units still on test just before the r-th failure (strictly decreasing, gamma_1 = n).
    long long gamma(int r) const { return gamma_.at(static_cast<std::size_t>(r - 1)); }
    const std::vector<long long>& gammas() const noexcept { return gamma_; }

    /// sigma_{r-1} = gamma_1 * ... * gamma_r, for r = 1..m.
    SignedLogValue sigma(int r) const { return sigma_.at(static_cast<std::size_t>(r - 1)); }

    /// a_{k,i} = prod_{j<=i, j!=k} 1/(gamma_j - gamma_k).
    SignedLogValue a(int k, int i) const;

    /// sigma_{i-1} * a_{k,i}, materialized in binary128.
    quad weight(int k, int i) const;

    /// sigma_{i-1} * sum_k a_{k,i} / gamma_k; one for every valid i.
    double normalization(int i) const;

private:
    friend CampCramerCoefficients camp_cramer_coefficients(const CensoringScheme& scheme);

    static std::size_t tri(int k, int i) noexcept {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(i - 1) / 2 +
               static_cast<std::size_t>(k - 1);
    }
    void check_index(int k, int i) const;

    std::vector<long long> gamma_;
    std::vector<SignedLogValue> sigma_;
    std::vector<SignedLogValue> a_;  // packed lower triangle, row i holds k = 1..i
    std::vector<quad> weight_;       // same packing
};

CampCramerCoefficients camp_cramer_coefficients(const CensoringScheme& scheme);

/// Density of the i-th progressively censored failure time at y > 0.
double censored_order_density(double y, int i, const CampCramerCoefficients& coeffs,
                              const WeibullParams& params);

/// Expected Fisher information for (shape, scale_rate).
struct FisherInfo {
    double i11 = 0.0;  ///< shape, shape
    double i12 = 0.0;  ///< shape, scale_rate
    double i22 = 0.0;  ///< scale_rate, scale_rate
};

/// Entries of the inverse information matrix (the asymptotic covariance).
struct InverseFisher {
    double i11 = 0.0;
    double i12 = 0.0;
    double i22 = 0.0;
};

FisherInfo fisher_information(const CensoringScheme& scheme, const WeibullParams& params);
FisherInfo fisher_information(const CampCramerCoefficients& coeffs, const WeibullParams& params);

/// Throws SingularInformation when the determinant is not positive and finite.
InverseFisher invert_fisher(const FisherInfo& info);

/// Asymptotic variance of ln of the MLE of the p-th quantile, integrated over p in (0,1).
double integrated_quantile_log_variance(const CensoringScheme& scheme, const WeibullParams& params);
double integrated_quantile_log_variance(const CampCramerCoefficients& coeffs,
                                        const WeibullParams& params);

/// E[Y_{m:m:n}], the expected test duration.
double expected_duration(const CensoringScheme& scheme, const WeibullParams& params);
double expected_duration(const CampCramerCoefficients& coeffs, const WeibullParams& params);

}  // namespace pcs

#endif  // PCS_MODEL_HPP
