#include "pcs/search.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "parallel.hpp"
#include "pcs/error.hpp"

namespace pcs {

void GAConfig::validate() const {
    if (population_size < 2) throw InvalidArgument("population_size must be at least 2");
    if (tournament_size < 1 || tournament_size > population_size) {
        throw InvalidArgument("tournament_size must be in 1..population_size");
    }
    if (!(crossover_rate >= 0.0 && crossover_rate <= 1.0)) {
        throw InvalidArgument("crossover_rate must be in [0, 1]");
    }
    if (!(mutation_rate >= 0.0 && mutation_rate <= 1.0)) {
        throw InvalidArgument("mutation_rate must be in [0, 1]");
    }
    if (!(std::isfinite(blend_alpha) && blend_alpha >= 0.0)) {
        throw InvalidArgument("blend_alpha must be finite and non-negative");
    }
    if (max_generations < 1) throw InvalidArgument("max_generations must be positive");
    if (stagnation_limit < 1) throw InvalidArgument("stagnation_limit must be positive");
    if (elite_count < 0 || elite_count >= population_size) {
        throw InvalidArgument("elite_count must be in 0..population_size-1");
    }
    if (threads < 1) throw InvalidArgument("threads must be positive");
}

// ---------------------------------------------------------------------------
// Enumeration

SchemeEnumerator::SchemeEnumerator(int n, int m) : n_(n), m_(m) {
    if (m < 1 || n < m) {
        throw InvalidArgument("enumeration needs 1 <= m <= n, got n=" + std::to_string(n) +
                              " m=" + std::to_string(m));
    }
    current_.assign(static_cast<std::size_t>(m), 0);
    current_[0] = n - m;
}

void SchemeEnumerator::advance() {
    if (done_) return;
    // rightmost non-final position holding a unit
    int pos = m_ - 2;
    while (pos >= 0 && current_[static_cast<std::size_t>(pos)] == 0) --pos;
    if (pos < 0) {
        done_ = true;
        return;
    }
    int tail = 0;
    for (int j = pos + 1; j < m_; ++j) {
        tail += current_[static_cast<std::size_t>(j)];
        current_[static_cast<std::size_t>(j)] = 0;
    }
    --current_[static_cast<std::size_t>(pos)];
    current_[static_cast<std::size_t>(pos + 1)] = tail + 1;
}

std::vector<CensoringScheme> enumerate_schemes(int n, int m) {
    std::vector<CensoringScheme> out;
    for (SchemeEnumerator e(n, m); !e.done(); e.advance()) out.push_back(e.scheme());
    return out;
}

// ---------------------------------------------------------------------------
// Fitness cache

CostCache::CostCache(WeibullParams params, CostCoefficients coeffs)
    : params_(params), coeffs_(coeffs) {
    params_.validate();
    coeffs_.validate();
}

double CostCache::compute(const CensoringScheme& scheme) const {
    if (!is_feasible(scheme.n(), scheme.m(), scheme.removals())) {
        throw std::logic_error("infeasible scheme reached the fitness function");
    }
    try {
        return total_cost(scheme, params_, coeffs_);
    } catch (const SingularInformation&) {
        return std::numeric_limits<double>::infinity();
    }
}

std::vector<double> CostCache::evaluate(std::span<const CensoringScheme> schemes, int threads) {
    std::vector<const CensoringScheme*> misses;
    for (const auto& s : schemes) {
        if (cache_.contains(s)) continue;
        const bool seen = std::any_of(misses.begin(), misses.end(),
                                      [&](const CensoringScheme* p) { return *p == s; });
        if (!seen) misses.push_back(&s);
    }
    std::vector<double> fresh(misses.size());
    detail::parallel_for(misses.size(), threads,
                         [&](std::size_t i) { fresh[i] = compute(*misses[i]); });
    for (std::size_t i = 0; i < misses.size(); ++i) cache_.emplace(*misses[i], fresh[i]);
    evaluations_ += misses.size();

    std::vector<double> out;
    out.reserve(schemes.size());
    for (const auto& s : schemes) out.push_back(cache_.at(s));
    return out;
}

double CostCache::evaluate(const CensoringScheme& scheme) {
    return evaluate(std::span<const CensoringScheme>(&scheme, 1)).front();
}

// ---------------------------------------------------------------------------
// Exhaustive search

namespace {

bool better(double cost, const std::vector<int>& removals, double best_cost,
            const std::vector<int>& best) {
    if (cost < best_cost) return true;
    return cost == best_cost && !best.empty() && removals < best;
}

}  // namespace

OptimizationResult exhaustive_optimum(int n, int m, const WeibullParams& params,
                                      const CostCoefficients& coeffs, std::uint64_t budget,
                                      int threads) {
    params.validate();
    coeffs.validate();
    const std::uint64_t count = scheme_count(n, m);
    if (count > budget) throw InstanceTooLarge(count, budget);

    constexpr std::size_t kBatch = 4096;
    double best_cost = std::numeric_limits<double>::infinity();
    std::vector<int> best;
    std::uint64_t evaluated = 0;

    std::vector<std::vector<int>> batch;
    std::vector<double> costs;
    auto flush = [&] {
        costs.assign(batch.size(), 0.0);
        detail::parallel_for(batch.size(), threads, [&](std::size_t i) {
            try {
                costs[i] = total_cost(CensoringScheme(n, m, batch[i]), params, coeffs);
            } catch (const SingularInformation&) {
                costs[i] = std::numeric_limits<double>::infinity();
            }
        });
        for (std::size_t i = 0; i < batch.size(); ++i) {
            if (std::isfinite(costs[i]) && better(costs[i], batch[i], best_cost, best)) {
                best_cost = costs[i];
                best = batch[i];
            }
        }
        evaluated += batch.size();
        batch.clear();
    };

    for (SchemeEnumerator e(n, m); !e.done(); e.advance()) {
        batch.push_back(e.current());
        if (batch.size() == kBatch) flush();
    }
    flush();

    if (best.empty()) {
        throw OptimizationFailed("no scheme in CS(n, m) could be evaluated");
    }
    OptimizationResult result{CensoringScheme(n, m, best), best_cost, 0, {}, evaluated};
    result.history.push_back({0, best_cost});
    return result;
}

// ---------------------------------------------------------------------------
// Operators

CensoringScheme decode(const Chromosome& chromosome, int n, int m) {
    if (m < 1 || n < m) throw InvalidArgument("decode needs 1 <= m <= n");
    if (chromosome.genes.size() != static_cast<std::size_t>(m)) {
        throw InvalidArgument("chromosome length " + std::to_string(chromosome.genes.size()) +
                              " does not match m=" + std::to_string(m));
    }
    const int units = n - m;
    const auto mm = static_cast<std::size_t>(m);

    double total = 0.0;
    for (double g : chromosome.genes) {
        if (!std::isfinite(g) || g < 0.0) throw InvalidArgument("genes must be finite and >= 0");
        total += g;
    }

    std::vector<double> scaled(mm);
    for (std::size_t i = 0; i < mm; ++i) {
        scaled[i] = total > 0.0 ? chromosome.genes[i] * units / total
                                : static_cast<double>(units) / m;
    }

    std::vector<int> removals(mm);
    std::vector<double> remainder(mm);
    int assigned = 0;
    for (std::size_t i = 0; i < mm; ++i) {
        const double fl = std::floor(scaled[i]);
        removals[i] = static_cast<int>(fl);
        remainder[i] = scaled[i] - fl;
        assigned += removals[i];
    }
    // rounding in the scaling step can overshoot by a unit; take it back from the smallest remainders
    while (assigned > units) {
        std::size_t pick = mm;
        for (std::size_t i = 0; i < mm; ++i) {
            if (removals[i] > 0 && (pick == mm || remainder[i] < remainder[pick])) pick = i;
        }
        --removals[pick];
        remainder[pick] += 1.0;
        --assigned;
    }

    std::vector<std::size_t> order(mm);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return remainder[a] > remainder[b]; });
    for (std::size_t j = 0; assigned < units; j = (j + 1) % mm) {
        ++removals[order[j]];
        ++assigned;
    }
    return CensoringScheme(n, m, std::move(removals));
}

Population init_population(int n, int m, int size, Rng& rng) {
    if (m < 1 || n < m) throw InvalidArgument("init_population needs 1 <= m <= n");
    if (size < 1) throw InvalidArgument("population size must be positive");
    const int units = n - m;
    const auto mm = static_cast<std::size_t>(m);

    Population pop(static_cast<std::size_t>(size));
    std::vector<std::uint64_t> left(mm);
    for (auto& individual : pop) {
        std::fill(left.begin(), left.end(), static_cast<std::uint64_t>(units));
        std::uint64_t remaining = static_cast<std::uint64_t>(units) * mm;
        std::vector<int> counts(mm, 0);
        for (int draw = 0; draw < units; ++draw) {
            std::uint64_t ticket = rng.index(static_cast<std::size_t>(remaining));
            std::size_t cat = 0;
            while (ticket >= left[cat]) ticket -= left[cat++];
            --left[cat];
            --remaining;
            ++counts[cat];
        }
        individual.genes.assign(counts.begin(), counts.end());
    }
    return pop;
}

Population init_population(int n, int m, const GAConfig& config) {
    config.validate();
    Rng rng(config.seed);
    return init_population(n, m, config.population_size, rng);
}

std::size_t tournament_winner(std::span<const std::size_t> subset, std::span<const double> fitness) {
    if (subset.empty()) throw InvalidArgument("empty tournament");
    std::size_t best = subset.front();
    for (std::size_t idx : subset) {
        if (fitness[idx] > fitness[best] || (fitness[idx] == fitness[best] && idx < best)) {
            best = idx;
        }
    }
    return best;
}

std::pair<double, double> blend_genes(double p1, double p2, double alpha, double r) noexcept {
    const double g = (1.0 + 2.0 * alpha) * r - alpha;
    return {(1.0 - g) * p1 + g * p2, (1.0 - g) * p2 + g * p1};
}

// ---------------------------------------------------------------------------
// Genetic algorithm

namespace {

std::vector<CensoringScheme> decode_all(const Population& pop, int n, int m) {
    std::vector<CensoringScheme> out;
    out.reserve(pop.size());
    for (const auto& c : pop) out.push_back(decode(c, n, m));
    return out;
}

std::size_t argmin_cost(std::span<const double> costs) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < costs.size(); ++i) {
        if (costs[i] < costs[best]) best = i;
    }
    return best;
}

}  // namespace

OptimizationResult ga_optimize(int n, int m, const WeibullParams& params,
                               const CostCoefficients& coeffs, const GAConfig& config) {
    config.validate();
    params.validate();
    coeffs.validate();
    if (m < 1 || n < m) throw InvalidArgument("ga_optimize needs 1 <= m <= n");

    CostCache cache(params, coeffs);

    // a single feasible design: nothing to search
    if (scheme_count(n, m) == 1) {
        const CensoringScheme only = CensoringScheme::one_step(n, m, m);
        const double cost = cache.evaluate(only);
        if (!std::isfinite(cost)) throw OptimizationFailed("the only scheme failed to evaluate");
        return {only, cost, 1, {{0, cost}}, cache.evaluations()};
    }

    Rng rng(config.seed);
    const auto pop_size = static_cast<std::size_t>(config.population_size);
    const auto elites = static_cast<std::size_t>(config.elite_count);

    Population pop = init_population(n, m, config.population_size, rng);
    std::vector<CensoringScheme> decoded = decode_all(pop, n, m);
    std::vector<double> costs = cache.evaluate(decoded, config.threads);

    auto check_generation = [&](int generation) {
        if (std::none_of(costs.begin(), costs.end(), [](double c) { return std::isfinite(c); })) {
            throw OptimizationFailed("every individual of generation " + std::to_string(generation) +
                                     " failed to evaluate");
        }
    };
    check_generation(0);

    std::size_t lead = argmin_cost(costs);
    CensoringScheme best_scheme = decoded[lead];
    double best_cost = costs[lead];
    std::vector<HistoryEntry> history{{0, best_cost}};

    int generations = 1;
    int stagnant = 0;
    std::vector<double> fitness(pop_size);
    while (generations < config.max_generations && stagnant < config.stagnation_limit) {
        for (std::size_t i = 0; i < pop_size; ++i) fitness[i] = -costs[i];

        // elites: lowest cost first, ties to the lowest index
        std::vector<std::size_t> order(pop_size);
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return costs[a] < costs[b]; });

        Population next;
        next.reserve(pop_size);
        for (std::size_t e = 0; e < elites; ++e) next.push_back(pop[order[e]]);

        const std::size_t needed = pop_size - elites;
        const std::size_t pool_size = needed + needed % 2;
        std::vector<std::size_t> pool(pool_size);
        for (auto& p : pool) p = tournament_select(fitness, config.tournament_size, rng);

        for (std::size_t j = 0; j + 1 < pool_size && next.size() < pop_size; j += 2) {
            const Chromosome& a = pop[pool[j]];
            const Chromosome& b = pop[pool[j + 1]];
            std::pair<Chromosome, Chromosome> kids;
            if (rng.uniform() < config.crossover_rate) {
                kids = blx_crossover(a, b, config.blend_alpha, rng);
            } else {
                kids = {a, b};
            }
            next.push_back(uniform_mutation(std::move(kids.first), n, m, config.mutation_rate, rng));
            if (next.size() < pop_size) {
                next.push_back(
                    uniform_mutation(std::move(kids.second), n, m, config.mutation_rate, rng));
            }
        }

        pop = std::move(next);
        decoded = decode_all(pop, n, m);
        costs = cache.evaluate(decoded, config.threads);
        check_generation(generations);

        lead = argmin_cost(costs);
        if (costs[lead] < best_cost) {
            best_cost = costs[lead];
            best_scheme = decoded[lead];
            stagnant = 0;
        } else {
            ++stagnant;
        }
        history.push_back({generations, best_cost});
        ++generations;
    }

    return {best_scheme, best_cost, generations, std::move(history), cache.evaluations()};
}

// ---------------------------------------------------------------------------
// Local search

OptimizationResult local_search_baseline(int n, int m, const WeibullParams& params,
                                         const CostCoefficients& coeffs,
                                         const CensoringScheme& start, int max_iters) {
    if (start.n() != n || start.m() != m) {
        throw InvalidArgument("start scheme does not belong to CS(n, m)");
    }
    if (max_iters < 0) throw InvalidArgument("max_iters must be non-negative");

    CostCache cache(params, coeffs);
    CensoringScheme current = start;
    double current_cost = cache.evaluate(current);
    if (!std::isfinite(current_cost)) throw OptimizationFailed("start scheme failed to evaluate");

    std::vector<HistoryEntry> history{{0, current_cost}};
    int iter = 0;
    const auto mm = static_cast<std::size_t>(m);
    while (iter < max_iters) {
        std::vector<CensoringScheme> neighbours;
        for (std::size_t i = 0; i < mm; ++i) {
            if (current[i] == 0) continue;
            for (std::size_t j = 0; j < mm; ++j) {
                if (j == i) continue;
                std::vector<int> r = current.removals();
                --r[i];
                ++r[j];
                neighbours.emplace_back(n, m, std::move(r));
            }
        }
        if (neighbours.empty()) break;
        const std::vector<double> costs = cache.evaluate(neighbours);
        const std::size_t pick = argmin_cost(costs);
        if (!(costs[pick] < current_cost)) break;
        current = neighbours[pick];
        current_cost = costs[pick];
        ++iter;
        history.push_back({iter, current_cost});
    }
    return {current, current_cost, iter, std::move(history), cache.evaluations()};
}

}  // namespace pcs
