#include "pcs/model.hpp"

#include <cmath>
#include <string>

#include "pcs/error.hpp"

namespace pcs {

// ---------------------------------------------------------------------------
// WeibullParams

void WeibullParams::validate() const {
    if (!(std::isfinite(shape) && shape > 0.0)) {
        throw InvalidArgument("Weibull shape must be finite and positive");
    }
    if (!(std::isfinite(scale_rate) && scale_rate > 0.0)) {
        throw InvalidArgument("Weibull scale_rate must be finite and positive");
    }
}

double WeibullParams::cdf(double y) const {
    if (y <= 0.0) return 0.0;
    return -std::expm1(-std::pow(scale_rate * y, shape));
}

double WeibullParams::pdf(double y) const {
    if (y <= 0.0) return 0.0;
    const double u = std::pow(scale_rate * y, shape);
    return shape * scale_rate * std::pow(scale_rate * y, shape - 1.0) * std::exp(-u);
}

double WeibullParams::quantile(double p) const {
    return std::pow(-std::log1p(-p), 1.0 / shape) / scale_rate;
}

// ---------------------------------------------------------------------------
// Camp-Cramer coefficients

void CampCramerCoefficients::check_index(int k, int i) const {
    if (i < 1 || i > m() || k < 1 || k > i) {
        throw InvalidArgument("Camp-Cramer index out of range: k=" + std::to_string(k) +
                              " i=" + std::to_string(i) + " m=" + std::to_string(m()));
    }
}

SignedLogValue CampCramerCoefficients::a(int k, int i) const {
    check_index(k, i);
    return a_[tri(k, i)];
}

quad CampCramerCoefficients::weight(int k, int i) const {
    check_index(k, i);
    return weight_[tri(k, i)];
}

double CampCramerCoefficients::normalization(int i) const {
    check_index(1, i);
    CompensatedSum<quad> sum;
    for (int k = 1; k <= i; ++k) {
        sum.add(weight_[tri(k, i)] / static_cast<quad>(gamma_[static_cast<std::size_t>(k - 1)]));
    }
    return static_cast<double>(sum.value());
}

CampCramerCoefficients camp_cramer_coefficients(const CensoringScheme& scheme) {
    const int m = scheme.m();
    const auto mm = static_cast<std::size_t>(m);
    CampCramerCoefficients c;
    c.gamma_.resize(mm);

    long long tail = 0;
    for (int r = m; r >= 1; --r) {
        tail += scheme[static_cast<std::size_t>(r - 1)];
        c.gamma_[static_cast<std::size_t>(r - 1)] = m - r + 1 + tail;
    }

    // gamma values and their differences are integers in [1, n]
    std::vector<double> log_int(static_cast<std::size_t>(scheme.n()) + 1, 0.0);
    for (std::size_t v = 2; v < log_int.size(); ++v) log_int[v] = std::log(static_cast<double>(v));

    c.sigma_.resize(mm);
    double log_sigma = 0.0;
    for (std::size_t r = 0; r < mm; ++r) {
        log_sigma += log_int[static_cast<std::size_t>(c.gamma_[r])];
        c.sigma_[r] = {1, log_sigma};
    }

    const std::size_t packed = mm * (mm + 1) / 2;
    c.a_.resize(packed);
    c.weight_.resize(packed);

    for (int i = 1; i <= m; ++i) {
        const auto gi = static_cast<quad>(c.gamma_[static_cast<std::size_t>(i - 1)]);
        for (int k = 1; k <= i; ++k) {
            const long long gk = c.gamma_[static_cast<std::size_t>(k - 1)];
            double log_mag = 0.0;
            for (int j = 1; j <= i; ++j) {
                if (j == k) continue;
                const long long diff = c.gamma_[static_cast<std::size_t>(j - 1)] - gk;
                log_mag -= log_int[static_cast<std::size_t>(diff < 0 ? -diff : diff)];
            }
            // gamma is strictly decreasing, so exactly i - k of the differences are negative
            c.a_[CampCramerCoefficients::tri(k, i)] = {((i - k) % 2 == 0) ? 1 : -1, log_mag};
        }

        if (i == 1) {
            c.weight_[CampCramerCoefficients::tri(1, 1)] = gi;
            continue;
        }
        // sigma_{i-1} a_{k,i} = sigma_{i-2} a_{k,i-1} * gamma_i / (gamma_i - gamma_k)
        for (int k = 1; k < i; ++k) {
            const auto gk = static_cast<quad>(c.gamma_[static_cast<std::size_t>(k - 1)]);
            c.weight_[CampCramerCoefficients::tri(k, i)] =
                c.weight_[CampCramerCoefficients::tri(k, i - 1)] * gi / (gi - gk);
        }
        quad diag = gi;
        for (int j = 1; j < i; ++j) {
            const auto gj = static_cast<quad>(c.gamma_[static_cast<std::size_t>(j - 1)]);
            diag *= gj / (gj - gi);
        }
        c.weight_[CampCramerCoefficients::tri(i, i)] = diag;
    }
    return c;
}

// ---------------------------------------------------------------------------
// Densities and functionals

double censored_order_density(double y, int i, const CampCramerCoefficients& coeffs,
                              const WeibullParams& params) {
    params.validate();
    if (i < 1 || i > coeffs.m()) {
        throw InvalidArgument("order statistic index out of range: " + std::to_string(i));
    }
    if (!(y > 0.0)) return 0.0;

    // (1-F)^{gamma_k - 1} f(y) = shape * rate * (rate y)^{shape-1} * exp(-gamma_k u)
    const quad ry = static_cast<quad>(params.scale_rate) * static_cast<quad>(y);
    const quad u = powq(ry, static_cast<quad>(params.shape));
    const quad front = static_cast<quad>(params.shape) * static_cast<quad>(params.scale_rate) *
                       powq(ry, static_cast<quad>(params.shape) - 1);
    CompensatedSum<quad> sum;
    for (int k = 1; k <= i; ++k) {
        sum.add(coeffs.weight(k, i) * expq(-static_cast<quad>(coeffs.gamma(k)) * u));
    }
    const double density = static_cast<double>(front * sum.value());
    return density < 0.0 ? 0.0 : density;
}

namespace {

// Per-k column sums W_k = sum_{i>=k} sigma_{i-1} a_{k,i} / gamma_k.
std::vector<quad> column_weights(const CampCramerCoefficients& coeffs) {
    const int m = coeffs.m();
    std::vector<quad> w(static_cast<std::size_t>(m));
    for (int k = 1; k <= m; ++k) {
        CompensatedSum<quad> sum;
        for (int i = k; i <= m; ++i) sum.add(coeffs.weight(k, i));
        w[static_cast<std::size_t>(k - 1)] = sum.value() / static_cast<quad>(coeffs.gamma(k));
    }
    return w;
}

}  // namespace

FisherInfo fisher_information(const CampCramerCoefficients& coeffs, const WeibullParams& params) {
    params.validate();
    const std::vector<quad> w = column_weights(coeffs);

    // Inner integrals, with c_k = 1 - ln gamma_k:
    //   int (1 + ln(z/gamma_k))^2 e^{-z} dz = (c_k - gamma_E)^2 + pi^2/6
    //   int (1 + ln(z/gamma_k))   e^{-z} dz =  c_k - gamma_E
    const quad euler = kEulerGamma;
    const quad pi2_6 = kPiSquaredOverSix;
    CompensatedSum<quad> s0, s1, s2;
    for (int k = 1; k <= coeffs.m(); ++k) {
        const quad wk = w[static_cast<std::size_t>(k - 1)];
        const quad first = 1 - logq(static_cast<quad>(coeffs.gamma(k))) - euler;
        s0.add(wk);
        s1.add(wk * first);
        s2.add(wk * (first * first + pi2_6));
    }

    const double shape = params.shape;
    const double rate = params.scale_rate;
    FisherInfo info;
    info.i11 = static_cast<double>(s2.value()) / (shape * shape);
    info.i12 = static_cast<double>(s1.value()) / rate;
    info.i22 = static_cast<double>(s0.value()) * (shape / rate) * (shape / rate);
    return info;
}

FisherInfo fisher_information(const CensoringScheme& scheme, const WeibullParams& params) {
    return fisher_information(camp_cramer_coefficients(scheme), params);
}

InverseFisher invert_fisher(const FisherInfo& info) {
    const double det = info.i11 * info.i22 - info.i12 * info.i12;
    if (!std::isfinite(det) || !(det > 0.0) || !(info.i11 > 0.0) || !(info.i22 > 0.0)) {
        throw SingularInformation("Fisher information is not positive definite (det = " +
                                  std::to_string(det) + ")");
    }
    return {info.i22 / det, -info.i12 / det, info.i11 / det};
}

double integrated_quantile_log_variance(const CampCramerCoefficients& coeffs,
                                        const WeibullParams& params) {
    const InverseFisher inv = invert_fisher(fisher_information(coeffs, params));
    const double shape = params.shape;
    const double rate = params.scale_rate;
    const double shape2 = shape * shape;
    return inv.i11 / (shape2 * shape2) * kQuantileLogSecondMoment +
           2.0 * inv.i12 / (shape2 * rate) * kQuantileLogMean + inv.i22 / (rate * rate);
}

double integrated_quantile_log_variance(const CensoringScheme& scheme, const WeibullParams& params) {
    return integrated_quantile_log_variance(camp_cramer_coefficients(scheme), params);
}

double expected_duration(const CampCramerCoefficients& coeffs, const WeibullParams& params) {
    params.validate();
    const int m = coeffs.m();
    // exponent formed in binary128: its rounding error would otherwise be
    // amplified by the cancellation between terms
    const quad power = 1 + 1 / static_cast<quad>(params.shape);
    CompensatedSum<quad> sum;
    for (int k = 1; k <= m; ++k) {
        const quad lg = logq(static_cast<quad>(coeffs.gamma(k)));
        sum.add(coeffs.weight(k, m) * expq(-power * lg));
    }
    const double gamma_fn = std::exp(std::lgamma(1.0 + 1.0 / params.shape));
    return gamma_fn * static_cast<double>(sum.value()) / params.scale_rate;
}

double expected_duration(const CensoringScheme& scheme, const WeibullParams& params) {
    return expected_duration(camp_cramer_coefficients(scheme), params);
}

}  // namespace pcs
