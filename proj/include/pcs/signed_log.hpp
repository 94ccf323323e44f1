#ifndef PCS_SIGNED_LOG_HPP
#define PCS_SIGNED_LOG_HPP

#include <cmath>
#include <limits>
#include <quadmath.h>

namespace pcs {

// IEEE binary128; used where alternating sums cancel to ~1e-17 of their terms.
__extension__ typedef __float128 quad;

/// A real number carried as sign and natural log of its magnitude.
struct SignedLogValue {
    int sign = 0;                ///< -1, 0 or +1
    double log_magnitude = 0.0;  ///< ln|value|; meaningless when sign == 0

    static SignedLogValue from_double(double value) noexcept {
        if (value == 0.0 || std::isnan(value)) return {};
        return {value > 0.0 ? 1 : -1, std::log(std::fabs(value))};
    }

    double to_double() const noexcept {
        return sign == 0 ? 0.0 : sign * std::exp(log_magnitude);
    }

    friend SignedLogValue operator*(SignedLogValue a, SignedLogValue b) noexcept {
        if (a.sign == 0 || b.sign == 0) return {};
        return {a.sign * b.sign, a.log_magnitude + b.log_magnitude};
    }

    friend SignedLogValue operator/(SignedLogValue a, SignedLogValue b) noexcept {
        // division by zero yields an infinite magnitude, like IEEE
        if (a.sign == 0) return {};
        if (b.sign == 0) return {a.sign, std::numeric_limits<double>::infinity()};
        return {a.sign * b.sign, a.log_magnitude - b.log_magnitude};
    }

    friend bool operator==(const SignedLogValue&, const SignedLogValue&) = default;
};

/// Neumaier's compensated summation.
template <typename Real>
class CompensatedSum {
public:
    void add(Real x) noexcept {
        const Real t = sum_ + x;
        if (abs_(sum_) >= abs_(x)) {
            compensation_ += (sum_ - t) + x;
        } else {
            compensation_ += (x - t) + sum_;
        }
        sum_ = t;
    }

    Real value() const noexcept { return sum_ + compensation_; }

private:
    static Real abs_(Real x) noexcept { return x < 0 ? -x : x; }

    Real sum_ = 0;
    Real compensation_ = 0;
};

}  // namespace pcs

#endif  // PCS_SIGNED_LOG_HPP
