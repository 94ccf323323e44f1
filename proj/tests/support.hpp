// Shared generators and independent oracles for the test suites.
#ifndef PCS_TESTS_SUPPORT_HPP
#define PCS_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "pcs/model.hpp"
#include "pcs/rng.hpp"
#include "pcs/scheme.hpp"

namespace pcs::testing {

/// Uniform over CS(n, m): stars and bars with m-1 distinct cut points.
inline CensoringScheme random_scheme(int n, int m, Rng& rng) {
    std::vector<int> slots(static_cast<std::size_t>(n - 1));
    for (int i = 0; i < n - 1; ++i) slots[static_cast<std::size_t>(i)] = i;
    // partial Fisher-Yates for m-1 cuts
    for (int i = 0; i < m - 1; ++i) {
        const std::size_t j = static_cast<std::size_t>(i) + rng.index(static_cast<std::size_t>(n - 1 - i));
        std::swap(slots[static_cast<std::size_t>(i)], slots[j]);
    }
    std::vector<int> cuts(slots.begin(), slots.begin() + (m - 1));
    std::sort(cuts.begin(), cuts.end());
    std::vector<int> r;
    int prev = -1;
    for (int c : cuts) {
        r.push_back(c - prev - 1);
        prev = c;
    }
    r.push_back(n - 2 - prev);
    return CensoringScheme(n, m, r);
}

/// Random (n, m) with m <= max_m, n in [max(m, min_n), max_n], then a random scheme.
inline CensoringScheme random_instance(int min_n, int max_n, int max_m, Rng& rng) {
    const int m = 1 + static_cast<int>(rng.index(static_cast<std::size_t>(max_m)));
    const int lo = std::max(m, min_n);
    const int n = lo + static_cast<int>(rng.index(static_cast<std::size_t>(max_n - lo + 1)));
    return random_scheme(n, m, rng);
}

/// Brute-force compositions via nested recursion, in no particular order.
inline void for_each_composition(int total, int parts, std::vector<int>& prefix,
                                 const std::function<void(const std::vector<int>&)>& fn) {
    if (parts == 1) {
        prefix.push_back(total);
        fn(prefix);
        prefix.pop_back();
        return;
    }
    for (int v = 0; v <= total; ++v) {
        prefix.push_back(v);
        for_each_composition(total - v, parts - 1, prefix, fn);
        prefix.pop_back();
    }
}

// ---------------------------------------------------------------------------
// 50-digit oracle: Camp-Cramer weights from the direct product formula and
// adaptive double-exponential quadrature of the unreduced integrands.

using Big = boost::multiprecision::cpp_bin_float_50;

struct BigMixture {
    std::vector<Big> gamma;
    /// Sum over i >= k of sigma_{i-1} a_{k,i}: the density of the sum of all
    /// m censored exponential order statistics is sum_k column[k] e^{-gamma_k u}.
    std::vector<Big> column;
    /// sigma_{m-1} a_{k,m}: density of the last one.
    std::vector<Big> last;
};

inline BigMixture big_mixture(const CensoringScheme& s) {
    const int m = s.m();
    BigMixture out;
    for (int r = 1; r <= m; ++r) {
        int tail = 0;
        for (int i = r; i <= m; ++i) tail += s[static_cast<std::size_t>(i - 1)];
        out.gamma.emplace_back(m - r + 1 + tail);
    }
    out.column.assign(static_cast<std::size_t>(m), Big(0));
    out.last.assign(static_cast<std::size_t>(m), Big(0));
    for (int i = 1; i <= m; ++i) {
        Big sigma = 1;
        for (int j = 0; j < i; ++j) sigma *= out.gamma[static_cast<std::size_t>(j)];
        for (int k = 0; k < i; ++k) {
            Big a = 1;
            for (int j = 0; j < i; ++j) {
                if (j != k) a /= (out.gamma[static_cast<std::size_t>(j)] - out.gamma[static_cast<std::size_t>(k)]);
            }
            out.column[static_cast<std::size_t>(k)] += sigma * a;
            if (i == m) out.last[static_cast<std::size_t>(k)] = sigma * a;
        }
    }
    return out;
}

/// Integral over u in (0, inf) of g(u) * sum_k w_k e^{-gamma_k u}, split at 1.
template <typename G>
Big integrate_mixture(const std::vector<Big>& gamma, const std::vector<Big>& w, G g) {
    auto f = [&](const Big& u) {
        Big d = 0;
        for (std::size_t k = 0; k < w.size(); ++k) d += w[k] * exp(-gamma[k] * u);
        return g(u) * d;
    };
    const Big tol("1e-22");
    boost::math::quadrature::tanh_sinh<Big> ts;
    boost::math::quadrature::exp_sinh<Big> es;
    return ts.integrate(f, Big(0), Big(1), tol) + es.integrate(f, Big(1), std::numeric_limits<Big>::infinity(), tol);
}

/// Fisher entries by quadrature in u = (rate*y)^shape, where the shape score is
/// (1 + ln u)/shape and the rate score is shape/rate.
inline FisherInfo quadrature_fisher(const CensoringScheme& s, const WeibullParams& p) {
    const BigMixture mix = big_mixture(s);
    const Big s2 = integrate_mixture(mix.gamma, mix.column, [](const Big& u) {
        const Big t = 1 + log(u);
        return t * t;
    });
    const Big s1 = integrate_mixture(mix.gamma, mix.column, [](const Big& u) { return 1 + log(u); });
    const Big s0 = integrate_mixture(mix.gamma, mix.column, [](const Big&) { return Big(1); });
    FisherInfo out;
    out.i11 = static_cast<double>(s2) / (p.shape * p.shape);
    out.i12 = static_cast<double>(s1) / p.scale_rate;
    out.i22 = static_cast<double>(s0) * (p.shape / p.scale_rate) * (p.shape / p.scale_rate);
    return out;
}

/// E[Y_{m:m:n}] = (1/rate) * integral u^{1/shape} f_m(u) du, no gamma function.
inline double quadrature_duration(const CensoringScheme& s, const WeibullParams& p) {
    const BigMixture mix = big_mixture(s);
    const Big power = Big(1) / Big(p.shape);
    const Big e = integrate_mixture(mix.gamma, mix.last, [&](const Big& u) { return pow(u, power); });
    return static_cast<double>(e) / p.scale_rate;
}

/// Integral of a double-valued function over (0, inf), split at `split`.
template <typename F>
double integrate_half_line(F f, double split = 1.0, double tol = 1e-13) {
    boost::math::quadrature::tanh_sinh<double> ts;
    boost::math::quadrature::exp_sinh<double> es;
    return ts.integrate(f, 0.0, split, tol) + es.integrate(f, split, std::numeric_limits<double>::infinity(), tol);
}

inline double rel_diff(double a, double b) { return std::fabs(a - b) / std::max(std::fabs(b), 1e-300); }

}  // namespace pcs::testing

#endif  // PCS_TESTS_SUPPORT_HPP
