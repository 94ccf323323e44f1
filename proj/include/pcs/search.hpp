#ifndef PCS_SEARCH_HPP
#define PCS_SEARCH_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pcs/cost.hpp"
#include "pcs/model.hpp"
#include "pcs/rng.hpp"
#include "pcs/scheme.hpp"

namespace pcs {

// ---------------------------------------------------------------------------
// Types

/// Genetic algorithm hyper-parameters. Defaults reproduce the reference
/// configuration: k = 4, Cr = 0.8, alpha = 0.5, Mr = 0.1.
struct GAConfig {
    int population_size = 100;
    int tournament_size = 4;
    double crossover_rate = 0.8;
    double blend_alpha = 0.5;
    double mutation_rate = 0.1;
    int max_generations = 500;
    int stagnation_limit = 50;
    int elite_count = 1;
    std::uint64_t seed = 1;
    /// Fitness evaluation workers. Results do not depend on this.
    int threads = 1;

    void validate() const;
};

/// Real-coded genotype; decode() maps it onto CS(n, m).
struct Chromosome {
    std::vector<double> genes;

    friend bool operator==(const Chromosome&, const Chromosome&) = default;
};

using Population = std::vector<Chromosome>;

struct HistoryEntry {
    int generation = 0;
    double best_cost = 0.0;
};

struct OptimizationResult {
    CensoringScheme best_scheme;
    double best_cost = 0.0;
    int generations_run = 0;
    std::vector<HistoryEntry> history;
    std::uint64_t evaluations = 0;
};

inline constexpr std::uint64_t kDefaultExhaustiveBudget = 10'000'000;

// ---------------------------------------------------------------------------
// Enumeration and exhaustive search

/// Streams CS(n, m) in decreasing lexicographic order, starting at
/// (n-m, 0, ..., 0) and ending at (0, ..., 0, n-m).
class SchemeEnumerator {
public:
    SchemeEnumerator(int n, int m);

    bool done() const noexcept { return done_; }
    const std::vector<int>& current() const noexcept { return current_; }
    CensoringScheme scheme() const { return CensoringScheme(n_, m_, current_); }
    void advance();

private:
    int n_;
    int m_;
    std::vector<int> current_;
    bool done_ = false;
};

/// Every scheme of CS(n, m) in enumeration order. Meant for small instances.
std::vector<CensoringScheme> enumerate_schemes(int n, int m);

/// Global minimizer of total_cost over CS(n, m); ties go to the
/// lexicographically smallest removal vector. Throws InstanceTooLarge
/// when |CS(n, m)| > budget.
OptimizationResult exhaustive_optimum(int n, int m, const WeibullParams& params,
                                      const CostCoefficients& coeffs,
                                      std::uint64_t budget = kDefaultExhaustiveBudget,
                                      int threads = 1);

// ---------------------------------------------------------------------------
// Fitness evaluation

/// Memoized total_cost keyed by decoded scheme. Failed evaluations
/// (singular information) are cached as +infinity.
class CostCache {
public:
    CostCache(WeibullParams params, CostCoefficients coeffs);

    /// Costs for a batch of schemes; misses are evaluated on up to
    /// `threads` workers in a fixed partition.
    std::vector<double> evaluate(std::span<const CensoringScheme> schemes, int threads = 1);
    double evaluate(const CensoringScheme& scheme);

    std::uint64_t evaluations() const noexcept { return evaluations_; }

private:
    double compute(const CensoringScheme& scheme) const;

    WeibullParams params_;
    CostCoefficients coeffs_;
    std::unordered_map<CensoringScheme, double, SchemeHash> cache_;
    std::uint64_t evaluations_ = 0;
};

// ---------------------------------------------------------------------------
// Genetic operators

/// Scale genes onto the simplex sum = n - m, floor, then hand out the
/// remaining units by largest fractional part (ties to the lowest index).
/// An all-zero chromosome is treated as uniform.
CensoringScheme decode(const Chromosome& chromosome, int n, int m);

/// Integer schemes drawn from the multivariate hypergeometric distribution:
/// n - m draws without replacement from m categories of n - m items each.
Population init_population(int n, int m, int size, Rng& rng);
Population init_population(int n, int m, const GAConfig& config);

/// Population index of the fittest contestant in `subset`; ties go to the lowest
/// population index.
std::size_t tournament_winner(std::span<const std::size_t> subset, std::span<const double> fitness);

/// k distinct contestants drawn uniformly (Floyd's sampler); returns the
/// population index of the winner.
template <UniformSource R>
std::size_t tournament_select(std::span<const double> fitness, int k, R& rng) {
    const std::size_t n = fitness.size();
    const auto kk = static_cast<std::size_t>(k);
    std::vector<std::size_t> chosen;
    chosen.reserve(kk);
    for (std::size_t j = n - kk; j < n; ++j) {
        const std::size_t t = rng.index(j + 1);
        if (std::find(chosen.begin(), chosen.end(), t) == chosen.end()) {
            chosen.push_back(t);
        } else {
            chosen.push_back(j);
        }
    }
    return tournament_winner(chosen, fitness);
}

/// BLX-alpha for one gene pair with blend draw r in [0, 1).
std::pair<double, double> blend_genes(double p1, double p2, double alpha, double r) noexcept;

/// One blend draw per gene position; negative children are clamped to 0.
template <UniformSource R>
std::pair<Chromosome, Chromosome> blx_crossover(const Chromosome& p1, const Chromosome& p2,
                                                double alpha, R& rng) {
    std::pair<Chromosome, Chromosome> children;
    const std::size_t len = std::min(p1.genes.size(), p2.genes.size());
    children.first.genes.resize(len);
    children.second.genes.resize(len);
    for (std::size_t g = 0; g < len; ++g) {
        auto [c1, c2] = blend_genes(p1.genes[g], p2.genes[g], alpha, rng.uniform());
        children.first.genes[g] = std::max(c1, 0.0);
        children.second.genes[g] = std::max(c2, 0.0);
    }
    return children;
}

struct GeneRange {
    double lo = 0.0;
    double hi = 1.0;
};

/// Each gene, with probability `rate`, is redrawn uniformly from its range.
/// Draw order per gene: the selection draw, then (if selected) the value.
template <UniformSource R>
Chromosome uniform_mutation(Chromosome chromosome, std::span<const GeneRange> ranges, double rate,
                            R& rng) {
    for (std::size_t g = 0; g < chromosome.genes.size(); ++g) {
        if (rng.uniform() < rate) {
            const GeneRange& range = ranges[g];
            chromosome.genes[g] = range.lo + (range.hi - range.lo) * rng.uniform();
        }
    }
    return chromosome;
}

/// Problem-specific form: every gene ranges over [0, n - m].
template <UniformSource R>
Chromosome uniform_mutation(Chromosome chromosome, int n, int m, double rate, R& rng) {
    const std::vector<GeneRange> ranges(chromosome.genes.size(),
                                        GeneRange{0.0, static_cast<double>(n - m)});
    return uniform_mutation(std::move(chromosome), ranges, rate, rng);
}

// ---------------------------------------------------------------------------
// Optimizers

/// Real-coded GA minimizing total_cost over CS(n, m).
OptimizationResult ga_optimize(int n, int m, const WeibullParams& params,
                               const CostCoefficients& coeffs, const GAConfig& config = {});

/// Steepest descent over single-unit moves r_i -> r_j.
OptimizationResult local_search_baseline(int n, int m, const WeibullParams& params,
                                         const CostCoefficients& coeffs,
                                         const CensoringScheme& start, int max_iters = 10'000);

}  // namespace pcs

#endif  // PCS_SEARCH_HPP
