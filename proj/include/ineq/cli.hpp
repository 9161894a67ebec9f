#pragma once

#include "ineq/precision.hpp"
#include "ineq/sequences.hpp"

#include <iosfwd>
#include <map>
#include <string>

namespace ineq::cli {

enum class OutputFormat { csv, json };

/// Parsed command-line configuration. `params` carries the free-form
/// key=value options (mu=, lambda=, delta=, c=, alpha=, variant=, ...).
struct CliConfig {
    std::string command;  // weights | scan | verify | gamma | criticality | knopp
    long n_max = 100;
    long n_min = 0;  // 0 = family default
    unsigned precision_bits = 256;
    Real tolerance = Real("1e-25");
    OutputFormat format = OutputFormat::csv;
    std::uint64_t seed = 12345;
    unsigned threads = 0;  // 0 = auto
    long support = 15;
    long count = 1;
    std::map<std::string, std::string> params;
};

/// Exit statuses: 0 all verdicts pass, 1 verification failure, 2 usage error.
inline constexpr int exit_pass = 0;
inline constexpr int exit_fail = 1;
inline constexpr int exit_usage = 2;

/// Parse a sequence description:
///   ones | linear | pow:<r> | shifted | copson-tilde-lambda |
///   copson-hat-lambda | file:<path>
/// File payloads are newline-delimited decimal values, index 1 first;
/// the index-0 boundary value comes from `zero_value` (flag-controlled,
/// default 1).
PositiveSequence parse_sequence_spec(const std::string& text, const Real& zero_value = Real(1));

/// Executes a command, writing the table to `out` and witness rows to `err`.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

}  // namespace ineq::cli
