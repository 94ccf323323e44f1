#ifndef PCS_CLI_HPP
#define PCS_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pcs/analysis.hpp"
#include "pcs/cost.hpp"
#include "pcs/model.hpp"
#include "pcs/report.hpp"
#include "pcs/search.hpp"

namespace pcs {

enum class Command {
    evaluate,
    optimize,
    exhaustive,
    baseline,
    sensitivity_shape,
    sensitivity_cost,
    optimal_m,
    compare,
    simulate,
};

/// Process exit statuses.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 2,
    kExitNumerical = 3,
    kExitTooLarge = 4,
};

/// Everything one invocation needs.
struct RunConfig {
    Command command = Command::optimize;
    std::optional<int> n;
    std::optional<int> m;
    WeibullParams params{};
    CostCoefficients coeffs{10.0, 50.0, 250.0};
    GAConfig ga{};
    std::optional<std::string> scheme;
    OutputFormat output_format = OutputFormat::json;

    SearchMode mode = SearchMode::exhaustive;
    std::uint64_t budget = kDefaultExhaustiveBudget;
    int max_iters = 10'000;

    std::optional<double> phi0;
    std::vector<double> phis;
    std::vector<CostCoefficients> perturbed_costs;
    std::optional<int> min_m;
    std::optional<int> max_m;
    std::uint64_t replications = 100'000;
};

/// Parses "k1,k2,k3;k1,k2,k3;..." into coefficient triples.
std::vector<CostCoefficients> parse_cost_list(const std::string& text);

/// Builds the report for a validated configuration. Library errors propagate.
Report execute(const RunConfig& config);

/// Executes and writes the report; maps errors to exit codes with a
/// message on `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full command-line entry point: parse args (args[0] is the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pcs

#endif  // PCS_CLI_HPP
