#include "pcs/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "pcs/error.hpp"
#include "pcs/notation.hpp"
#include "pcs/sim.hpp"

namespace pcs {

namespace {

int require(const std::optional<int>& v, const char* name) {
    if (!v) throw InvalidArgument(std::string("--") + name + " is required for this command");
    return *v;
}

CensoringScheme require_scheme(const RunConfig& c, int n, int m) {
    if (!c.scheme) throw InvalidArgument("--scheme is required for this command");
    return parse_scheme_notation(*c.scheme, n, m);
}

std::string coeff_label(const CostCoefficients& c) {
    return "(" + format_double(c.k1) + "," + format_double(c.k2) + "," + format_double(c.k3) + ")";
}

SearchSettings settings_of(const RunConfig& c) {
    return {c.mode, c.ga, c.budget, c.ga.threads};
}

std::vector<Cell> problem_cells(const RunConfig& c, int n, int m) {
    return {std::int64_t{n}, std::int64_t{m}, c.params.shape, c.params.scale_rate,
            c.coeffs.k1, c.coeffs.k2, c.coeffs.k3};
}

Report optimization_report(const RunConfig& c, int n, int m, const OptimizationResult& r) {
    Report rep{"", {"n", "m", "shape", "scale_rate", "k1", "k2", "k3", "seed", "scheme", "cost",
                    "generations", "evaluations"}, {}};
    auto row = problem_cells(c, n, m);
    row.emplace_back(static_cast<std::int64_t>(c.ga.seed));
    row.emplace_back(format_scheme_notation(r.best_scheme));
    row.emplace_back(r.best_cost);
    row.emplace_back(std::int64_t{r.generations_run});
    row.emplace_back(static_cast<std::int64_t>(r.evaluations));
    rep.rows.push_back(std::move(row));
    return rep;
}

Report sensitivity_report(const std::vector<SensitivityRow>& rows) {
    Report rep{"", {"perturbed", "scheme", "re"}, {}};
    for (const auto& row : rows) {
        Cell perturbed = std::visit(
            [](const auto& v) -> Cell {
                if constexpr (std::is_same_v<std::decay_t<decltype(v)>, double>) return v;
                else return coeff_label(v);
            },
            row.perturbed);
        rep.rows.push_back({perturbed, format_scheme_notation(row.scheme), row.relative_efficiency});
    }
    return rep;
}

const char* command_name(Command c) {
    switch (c) {
        case Command::evaluate: return "evaluate";
        case Command::optimize: return "optimize";
        case Command::exhaustive: return "exhaustive";
        case Command::baseline: return "baseline";
        case Command::sensitivity_shape: return "sensitivity-shape";
        case Command::sensitivity_cost: return "sensitivity-cost";
        case Command::optimal_m: return "optimal-m";
        case Command::compare: return "compare";
        case Command::simulate: return "simulate";
    }
    return "?";
}

}  // namespace

std::vector<CostCoefficients> parse_cost_list(const std::string& text) {
    std::vector<CostCoefficients> out;
    std::stringstream groups(text);
    std::string group;
    while (std::getline(groups, group, ';')) {
        if (group.find_first_not_of(" \t") == std::string::npos) continue;
        double k[3];
        char tail = 0;
        if (std::sscanf(group.c_str(), " %lf , %lf , %lf %c", &k[0], &k[1], &k[2], &tail) != 3) {
            throw ParseError("malformed cost triple '" + group + "'");
        }
        out.push_back({k[0], k[1], k[2]});
    }
    if (out.empty()) throw ParseError("no cost triples given");
    return out;
}

Report execute(const RunConfig& c) {
    c.params.validate();
    c.coeffs.validate();
    c.ga.validate();

    Report rep;
    switch (c.command) {
        case Command::evaluate: {
            const int n = require(c.n, "n");
            const int m = require(c.m, "m");
            const CensoringScheme s = require_scheme(c, n, m);
            const CostBreakdown b = cost_breakdown(s, c.params, c.coeffs);
            const FisherInfo info = fisher_information(s, c.params);
            rep = {"", {"n", "m", "shape", "scale_rate", "k1", "k2", "k3", "scheme",
                        "expected_duration", "integrated_variance", "i11", "i12", "i22", "cost"},
                   {}};
            auto row = problem_cells(c, n, m);
            row.insert(row.end(), {format_scheme_notation(s), b.expected_duration,
                                   b.integrated_variance, info.i11, info.i12, info.i22, b.total});
            rep.rows.push_back(std::move(row));
            break;
        }
        case Command::optimize: {
            const int n = require(c.n, "n");
            const int m = require(c.m, "m");
            rep = optimization_report(c, n, m, ga_optimize(n, m, c.params, c.coeffs, c.ga));
            break;
        }
        case Command::exhaustive: {
            const int n = require(c.n, "n");
            const int m = require(c.m, "m");
            rep = optimization_report(
                c, n, m, exhaustive_optimum(n, m, c.params, c.coeffs, c.budget, c.ga.threads));
            break;
        }
        case Command::baseline: {
            const int n = require(c.n, "n");
            const int m = require(c.m, "m");
            const CensoringScheme start =
                c.scheme ? parse_scheme_notation(*c.scheme, n, m) : CensoringScheme::type_ii(n, m);
            rep = optimization_report(
                c, n, m, local_search_baseline(n, m, c.params, c.coeffs, start, c.max_iters));
            break;
        }
        case Command::sensitivity_shape: {
            const int n = require(c.n, "n");
            const int m = require(c.m, "m");
            if (c.phis.empty()) throw InvalidArgument("--phis is required for sensitivity-shape");
            rep = sensitivity_report(sensitivity_to_shape(c.phi0.value_or(c.params.shape), c.phis, n,
                                                          m, c.coeffs, settings_of(c)));
            break;
        }
        case Command::sensitivity_cost: {
            const int n = require(c.n, "n");
            const int m = require(c.m, "m");
            if (c.perturbed_costs.empty()) {
                throw InvalidArgument("--costs is required for sensitivity-cost");
            }
            rep = sensitivity_report(sensitivity_to_costs(c.coeffs, c.perturbed_costs, n, m,
                                                          c.params, settings_of(c)));
            break;
        }
        case Command::optimal_m: {
            const int n = require(c.n, "n");
            const std::pair<int, int> range{c.min_m.value_or(1), c.max_m.value_or(n)};
            const OptimalMResult r = optimal_m(n, c.params, c.coeffs, settings_of(c), range);
            rep = {"", {"n", "m_star", "scheme", "cost"}, {}};
            rep.rows.push_back({std::int64_t{n}, std::int64_t{r.m_star},
                                format_scheme_notation(r.best.best_scheme), r.best.best_cost});
            break;
        }
        case Command::compare: {
            const int n = require(c.n, "n");
            const int m = require(c.m, "m");
            rep = {"", {"method", "scheme", "cost", "evaluations", "wall_ms"}, {}};
            auto timed = [&](const char* method, auto&& fn) {
                const auto t0 = std::chrono::steady_clock::now();
                const OptimizationResult r = fn();
                const std::chrono::duration<double, std::milli> dt =
                    std::chrono::steady_clock::now() - t0;
                rep.rows.push_back({std::string(method), format_scheme_notation(r.best_scheme),
                                    r.best_cost, static_cast<std::int64_t>(r.evaluations), dt.count()});
            };
            timed("ga", [&] { return ga_optimize(n, m, c.params, c.coeffs, c.ga); });
            const CensoringScheme start =
                c.scheme ? parse_scheme_notation(*c.scheme, n, m) : CensoringScheme::type_ii(n, m);
            timed("baseline", [&] {
                return local_search_baseline(n, m, c.params, c.coeffs, start, c.max_iters);
            });
            if (scheme_count(n, m) <= c.budget) {
                timed("exhaustive", [&] {
                    return exhaustive_optimum(n, m, c.params, c.coeffs, c.budget, c.ga.threads);
                });
            }
            break;
        }
        case Command::simulate: {
            const int n = require(c.n, "n");
            const int m = require(c.m, "m");
            const CensoringScheme s = require_scheme(c, n, m);
            const MonteCarloEstimate est =
                monte_carlo_duration(s, c.params, c.replications, c.ga.seed, c.ga.threads);
            rep = {"", {"n", "m", "shape", "scale_rate", "scheme", "replications", "seed", "mean",
                        "standard_error", "expected_duration"},
                   {}};
            rep.rows.push_back({std::int64_t{n}, std::int64_t{m}, c.params.shape,
                                c.params.scale_rate, format_scheme_notation(s),
                                static_cast<std::int64_t>(c.replications),
                                static_cast<std::int64_t>(c.ga.seed), est.mean, est.standard_error,
                                expected_duration(s, c.params)});
            break;
        }
    }
    rep.command = command_name(c.command);
    return rep;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        const Report rep = execute(config);
        write_report(rep, config.output_format, out);
        return kExitOk;
    } catch (const InstanceTooLarge& e) {
        err << "error: " << e.what() << '\n';
        return kExitTooLarge;
    } catch (const SingularInformation& e) {
        err << "error: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const OptimizationFailed& e) {
        err << "error: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig c;
    CLI::App app{"Cost-optimal progressive Type-II censoring schemes for Weibull life tests",
                 args.empty() ? "pcsopt" : args.front()};
    app.fallthrough();
    app.require_subcommand(1);
    app.set_config("--config", "", "Flat key = value file; command-line flags take precedence");

    std::string scheme, format = "json", mode = "exhaustive", costs;
    int n = 0, m = 0, min_m = 0, max_m = 0;
    double phi0 = 0.0;

    auto* n_opt = app.add_option("--n", n, "Units on test");
    auto* m_opt = app.add_option("--m", m, "Observed failures");
    app.add_option("--shape", c.params.shape, "Weibull shape")->capture_default_str();
    app.add_option("--scale-rate,--scale_rate", c.params.scale_rate,
                   "Weibull rate: F(y) = 1 - exp(-(rate*y)^shape); a scale lambda means rate = 1/lambda")
        ->capture_default_str();
    app.add_option("--k1", c.coeffs.k1, "Cost per observed failure")->capture_default_str();
    app.add_option("--k2", c.coeffs.k2, "Cost per unit test time")->capture_default_str();
    app.add_option("--k3", c.coeffs.k3, "Cost per unit imprecision")->capture_default_str();
    auto* scheme_opt = app.add_option("--scheme", scheme, "Scheme, e.g. \"3*2,0*2,4\"");
    app.add_option("--format,--output-format,--output_format", format, "csv | json | table")
        ->check(CLI::IsMember({"csv", "json", "table"}))
        ->capture_default_str();
    app.add_option("--seed", c.ga.seed, "Random seed")->capture_default_str();
    app.add_option("--threads", c.ga.threads, "Evaluation workers")->capture_default_str();
    app.add_option("--population-size,--population_size", c.ga.population_size)->capture_default_str();
    app.add_option("--tournament-size,--tournament_size", c.ga.tournament_size)->capture_default_str();
    app.add_option("--crossover-rate,--crossover_rate", c.ga.crossover_rate)->capture_default_str();
    app.add_option("--blend-alpha,--blend_alpha", c.ga.blend_alpha)->capture_default_str();
    app.add_option("--mutation-rate,--mutation_rate", c.ga.mutation_rate)->capture_default_str();
    app.add_option("--max-generations,--max_generations", c.ga.max_generations)->capture_default_str();
    app.add_option("--stagnation-limit,--stagnation_limit", c.ga.stagnation_limit)->capture_default_str();
    app.add_option("--elite-count,--elite_count", c.ga.elite_count)->capture_default_str();
    app.add_option("--mode,--search-mode,--search_mode", mode, "exhaustive | ga")
        ->check(CLI::IsMember({"exhaustive", "ga"}))
        ->capture_default_str();
    app.add_option("--budget", c.budget, "Largest |CS(n,m)| searched exhaustively")->capture_default_str();
    app.add_option("--max-iters,--max_iters", c.max_iters, "Local search iteration cap")->capture_default_str();
    auto* phi0_opt = app.add_option("--phi0", phi0, "True shape for sensitivity-shape (default --shape)");
    app.add_option("--phis", c.phis, "Misspecified shapes, comma separated")->delimiter(',');
    auto* costs_opt = app.add_option("--costs", costs, "Misspecified triples: \"k1,k2,k3;k1,k2,k3\"");
    auto* min_m_opt = app.add_option("--min-m,--min_m", min_m, "Smallest m for optimal-m");
    auto* max_m_opt = app.add_option("--max-m,--max_m", max_m, "Largest m for optimal-m");
    app.add_option("--replications", c.replications, "Monte Carlo replications")->capture_default_str();

    const std::map<std::string, std::pair<Command, std::string>> commands{
        {"evaluate", {Command::evaluate, "Cost of one scheme"}},
        {"optimize", {Command::optimize, "Genetic algorithm"}},
        {"exhaustive", {Command::exhaustive, "Search all of CS(n, m)"}},
        {"baseline", {Command::baseline, "Steepest-descent local search"}},
        {"sensitivity-shape", {Command::sensitivity_shape, "Relative efficiency under shape misspecification"}},
        {"sensitivity-cost", {Command::sensitivity_cost, "Relative efficiency under cost misspecification"}},
        {"optimal-m", {Command::optimal_m, "Joint optimum over m for fixed n"}},
        {"compare", {Command::compare, "GA vs baseline vs exhaustive"}},
        {"simulate", {Command::simulate, "Monte Carlo test duration"}},
    };
    std::vector<std::pair<CLI::App*, Command>> subs;
    for (const auto& [name, entry] : commands) {
        subs.emplace_back(app.add_subcommand(name, entry.second), entry.first);
    }

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    if (args.empty()) argv.push_back("pcsopt");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    for (const auto& [sub, cmd] : subs) {
        if (sub->parsed()) c.command = cmd;
    }
    if (*n_opt) c.n = n;
    if (*m_opt) c.m = m;
    if (*scheme_opt) c.scheme = scheme;
    if (*phi0_opt) c.phi0 = phi0;
    if (*min_m_opt) c.min_m = min_m;
    if (*max_m_opt) c.max_m = max_m;
    c.output_format = format == "csv" ? OutputFormat::csv
                      : format == "table" ? OutputFormat::table
                                          : OutputFormat::json;
    c.mode = mode == "ga" ? SearchMode::ga : SearchMode::exhaustive;
    if (*costs_opt) {
        try {
            c.perturbed_costs = parse_cost_list(costs);
        } catch (const ParseError& e) {
            err << "error: " << e.what() << '\n';
            return kExitUsage;
        }
    }
    return run(c, out, err);
}

}  // namespace pcs
