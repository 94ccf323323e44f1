#include "pcs/analysis.hpp"

#include <algorithm>
#include <string>

#include "pcs/error.hpp"

namespace pcs {

OptimizationResult optimize_cell(int n, int m, const WeibullParams& params,
                                 const CostCoefficients& coeffs, const SearchSettings& settings) {
    if (settings.mode == SearchMode::exhaustive) {
        return exhaustive_optimum(n, m, params, coeffs, settings.budget, settings.threads);
    }
    GAConfig ga = settings.ga;
    ga.threads = settings.threads;
    return ga_optimize(n, m, params, coeffs, ga);
}

namespace {

// RE = reference / cost_under_truth, with the reference the best known cost under truth.
void fill_efficiencies(std::vector<SensitivityRow>& rows, double optimum_under_truth) {
    double reference = optimum_under_truth;
    for (const auto& row : rows) reference = std::min(reference, row.cost_under_truth);
    for (auto& row : rows) row.relative_efficiency = reference / row.cost_under_truth;
}

}  // namespace

std::vector<SensitivityRow> sensitivity_to_shape(double phi0, const std::vector<double>& phis, int n,
                                                 int m, const CostCoefficients& coeffs,
                                                 const SearchSettings& settings) {
    const WeibullParams truth{phi0, 1.0};
    truth.validate();
    const OptimizationResult base = optimize_cell(n, m, truth, coeffs, settings);

    std::vector<SensitivityRow> rows;
    rows.reserve(phis.size());
    for (double phi : phis) {
        const WeibullParams guess{phi, 1.0};
        guess.validate();
        const OptimizationResult r = phi == phi0 ? base : optimize_cell(n, m, guess, coeffs, settings);
        const double under_truth =
            r.best_scheme == base.best_scheme ? base.best_cost : total_cost(r.best_scheme, truth, coeffs);
        rows.push_back({phi, r.best_scheme, under_truth, 1.0});
    }
    fill_efficiencies(rows, base.best_cost);
    return rows;
}

std::vector<SensitivityRow> sensitivity_to_costs(const CostCoefficients& c0,
                                                 const std::vector<CostCoefficients>& cs, int n,
                                                 int m, const WeibullParams& params,
                                                 const SearchSettings& settings) {
    c0.validate();
    const OptimizationResult base = optimize_cell(n, m, params, c0, settings);

    std::vector<SensitivityRow> rows;
    rows.reserve(cs.size());
    for (const auto& c : cs) {
        c.validate();
        const OptimizationResult r = c == c0 ? base : optimize_cell(n, m, params, c, settings);
        const double under_truth =
            r.best_scheme == base.best_scheme ? base.best_cost : total_cost(r.best_scheme, params, c0);
        rows.push_back({c, r.best_scheme, under_truth, 1.0});
    }
    fill_efficiencies(rows, base.best_cost);
    return rows;
}

OptimalMResult optimal_m(int n, const WeibullParams& params, const CostCoefficients& coeffs,
                         const SearchSettings& settings, std::optional<std::pair<int, int>> m_range) {
    if (n < 1) throw InvalidArgument("optimal_m needs n >= 1");
    const auto [lo, hi] = m_range.value_or(std::pair{1, n});
    if (lo < 1 || hi > n || lo > hi) {
        throw InvalidArgument("m range [" + std::to_string(lo) + ", " + std::to_string(hi) +
                              "] is not inside 1.." + std::to_string(n));
    }

    std::vector<std::pair<int, OptimizationResult>> cells;
    for (int m = lo; m <= hi; ++m) {
        SearchSettings cell = settings;
        if (cell.mode == SearchMode::exhaustive && scheme_count(n, m) > cell.budget) {
            cell.mode = SearchMode::ga;
        }
        cells.emplace_back(m, optimize_cell(n, m, params, coeffs, cell));
    }

    std::size_t best = 0;
    for (std::size_t i = 1; i < cells.size(); ++i) {
        if (cells[i].second.best_cost < cells[best].second.best_cost) best = i;
    }
    OptimalMResult out{cells[best].first, cells[best].second, std::move(cells)};
    return out;
}

}  // namespace pcs
