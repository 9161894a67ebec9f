#include "ineq/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

namespace {

void add_common(CLI::App* cmd, ineq::cli::CliConfig& config, std::string& format,
                std::string& tolerance) {
    cmd->add_option("--n-max", config.n_max, "Largest index to evaluate");
    cmd->add_option("--n-min", config.n_min, "Smallest index to evaluate (0 = family default)");
    cmd->add_option("--precision-bits", config.precision_bits, "Working mantissa bits (>= 64)");
    cmd->add_option("--tolerance", tolerance, "Relative residual tolerance");
    cmd->add_option("--format", format, "Output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--seed", config.seed, "Seed for randomized checks");
    cmd->add_option("--threads", config.threads, "Scan worker threads (0 = auto)");
    cmd->add_option("--support", config.support, "Support length of random sequences");
    cmd->add_option("--count", config.count, "Number of random sequences");
}

void add_param(CLI::App* cmd, std::map<std::string, std::string>& params, const std::string& key,
               const std::string& help) {
    cmd->add_option_function<std::string>(
        "--" + key, [&params, key](const std::string& v) { params[key] = v; }, help);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Numerical verification of improved discrete Hardy, Copson, Rellich and Knopp inequalities"};
    app.require_subcommand(1);

    ineq::cli::CliConfig config;
    std::string format = "csv";
    std::string tolerance = "1e-25";
    if (const char* env = std::getenv("INEQ_PRECISION_BITS"))
        config.precision_bits = static_cast<unsigned>(std::stoul(env));
    if (const char* env = std::getenv("INEQ_TOLERANCE")) tolerance = env;

    auto* weights = app.add_subcommand(
        "weights", "Tabulate a weight family: columns n, value, classical_bound, excess");
    add_common(weights, config, format, tolerance);
    add_param(weights, config.params, "family", "Weight family name");
    add_param(weights, config.params, "mu", "mu sequence spec");
    add_param(weights, config.params, "lambda", "lambda sequence spec");
    add_param(weights, config.params, "delta", "delta sequence spec");
    add_param(weights, config.params, "c", "Exponent parameter c in (1, 2]");
    add_param(weights, config.params, "alpha", "Order parameter alpha");
    add_param(weights, config.params, "lambda0", "Boundary value lambda_0");
    add_param(weights, config.params, "delta0", "Boundary value delta_0");

    auto* scan = app.add_subcommand(
        "scan", "Strict pointwise comparison of two families: columns family, comparison, n_min, "
                "n_max, min_gap, min_gap_at, verdict");
    add_common(scan, config, format, tolerance);
    add_param(scan, config.params, "a", "Left family (checked to dominate)");
    add_param(scan, config.params, "b", "Right family (default: paired classical bound)");
    add_param(scan, config.params, "family", "Alias for a=");
    add_param(scan, config.params, "mu", "mu sequence spec");
    add_param(scan, config.params, "lambda", "lambda sequence spec");
    add_param(scan, config.params, "delta", "delta sequence spec");
    add_param(scan, config.params, "c", "Exponent parameter c in (1, 2]");
    add_param(scan, config.params, "alpha", "Order parameter alpha");

    auto* verify = app.add_subcommand(
        "verify", "Check an energy identity on random or file-provided sequences: columns k, seed, "
                  "name, residual, verdict");
    add_common(verify, config, format, tolerance);
    add_param(verify, config.params, "identity",
              "hardy | copson-tilde | copson-hat | rellich | knopp-rellich | knopp-chain");
    add_param(verify, config.params, "lambda", "lambda sequence spec");
    add_param(verify, config.params, "mu", "mu sequence spec");
    add_param(verify, config.params, "delta", "delta sequence spec");
    add_param(verify, config.params, "c", "Exponent parameter c in (1, 2]");
    add_param(verify, config.params, "alpha", "Difference order alpha");
    add_param(verify, config.params, "lambda0", "Boundary value lambda_0");
    add_param(verify, config.params, "delta0", "Boundary value delta_0");
    add_param(verify, config.params, "sequence", "Explicit test sequence file (decimal, index 1 first)");

    auto* gamma = app.add_subcommand(
        "gamma", "Run the factorization recurrence: columns n, lower, gamma_sq, upper, strict");
    add_common(gamma, config, format, tolerance);
    add_param(gamma, config.params, "delta", "delta sequence spec");
    add_param(gamma, config.params, "mu", "mu sequence spec");
    add_param(gamma, config.params, "delta0", "Boundary value delta_0");

    auto* criticality = app.add_subcommand(
        "criticality", "Remainder decay along cutoff sequences: columns N, remainder_sum, bound");
    add_common(criticality, config, format, tolerance);
    add_param(criticality, config.params, "variant", "tilde or hat");
    add_param(criticality, config.params, "N", "Comma-separated cutoff list, e.g. 4,8,16");

    auto* knopp = app.add_subcommand(
        "knopp", "Order-alpha difference identity and improvement chain: columns k, seed, "
                 "identity_residual, energy, improved_sum, classical_sum, knopp_sum, verdict");
    add_common(knopp, config, format, tolerance);
    add_param(knopp, config.params, "alpha", "Difference order alpha");

    CLI11_PARSE(app, argc, argv);

    ineq::Real::default_precision(ineq::digits_for_bits(std::max(config.precision_bits, 64u)));
    config.format = (format == "json") ? ineq::cli::OutputFormat::json : ineq::cli::OutputFormat::csv;
    try {
        config.tolerance = ineq::Real(tolerance.c_str());
    } catch (const std::exception&) {
        std::cerr << "usage error: unparseable tolerance " << tolerance << "\n";
        return ineq::cli::exit_usage;
    }
    for (auto* sub : {weights, scan, verify, gamma, criticality, knopp})
        if (sub->parsed()) config.command = sub->get_name();

    return ineq::cli::run(config, std::cout, std::cerr);
}
