#ifndef PCS_ANALYSIS_HPP
#define PCS_ANALYSIS_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "pcs/cost.hpp"
#include "pcs/model.hpp"
#include "pcs/search.hpp"

namespace pcs {

enum class SearchMode { exhaustive, ga };

/// How each cell of an analysis finds its optimal scheme.
struct SearchSettings {
    SearchMode mode = SearchMode::exhaustive;
    GAConfig ga{};
    std::uint64_t budget = kDefaultExhaustiveBudget;
    int threads = 1;
};

/// Best scheme for one (n, m) cell under the settings' mode.
OptimizationResult optimize_cell(int n, int m, const WeibullParams& params,
                                 const CostCoefficients& coeffs, const SearchSettings& settings);

/// One row of a sensitivity table.
struct SensitivityRow {
    /// Misspecified shape, or misspecified cost coefficients.
    std::variant<double, CostCoefficients> perturbed;
    /// Optimal scheme under the misspecified value.
    CensoringScheme scheme;
    /// Cost, under the true value, of that scheme.
    double cost_under_truth = 0.0;
    /// (optimal cost under truth) / cost_under_truth, in (0, 1].
    double relative_efficiency = 1.0;
};

/// RE1 for each misspecified shape; the scale rate is fixed at 1.
///
/// The reference optimum is the best cost under phi0 among the true
/// optimum and every perturbed optimum, so RE stays <= 1 when the
/// search is heuristic.
std::vector<SensitivityRow> sensitivity_to_shape(double phi0, const std::vector<double>& phis, int n,
                                                 int m, const CostCoefficients& coeffs,
                                                 const SearchSettings& settings = {});

/// RE2 for each misspecified coefficient triple.
std::vector<SensitivityRow> sensitivity_to_costs(const CostCoefficients& c0,
                                                 const std::vector<CostCoefficients>& cs, int n,
                                                 int m, const WeibullParams& params,
                                                 const SearchSettings& settings = {});

struct OptimalMResult {
    int m_star = 0;
    OptimizationResult best;
    /// Per-m optima in increasing m.
    std::vector<std::pair<int, OptimizationResult>> per_m;
};

/// Joint minimization over m in [m_range.first, m_range.second] (default 1..n)
/// and the scheme. Exhaustive mode falls back to the GA for cells over budget.
/// Ties go to the smaller m.
OptimalMResult optimal_m(int n, const WeibullParams& params, const CostCoefficients& coeffs,
                         const SearchSettings& settings = {},
                         std::optional<std::pair<int, int>> m_range = std::nullopt);

}  // namespace pcs

#endif  // PCS_ANALYSIS_HPP
