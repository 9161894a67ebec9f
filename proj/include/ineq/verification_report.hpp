#pragma once

#include "ineq/precision.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ineq {

/// A scanned index where a check failed (or, for scans, the minimum-gap
/// location), with both compared values.
struct Witness {
    long index = 0;
    Real lhs;
    Real rhs;
};

/// Outcome of one executable check: identity residual, pointwise scan,
/// bound comparison, or decay experiment.
struct VerificationReport {
    std::string name;
    std::string range;
    Real max_residual = 0;
    bool pass = false;
    std::vector<Witness> witnesses;
    unsigned precision_bits = 0;

    /// Smallest strict gap found by a scan and where it occurred.
    std::optional<Real> min_gap;
    long min_gap_index = 0;

    /// Caveats attached to the verdict (conjecture-backed order, parameter
    /// outside proven validity, factorization breakdown witness, ...).
    std::optional<std::string> flag;

    /// Seed used for randomized checks, recorded for reproducibility.
    std::optional<std::uint64_t> seed;
};

}  // namespace ineq
