#pragma once

#include "ineq/sequences.hpp"
#include "ineq/verification_report.hpp"

#include <optional>
#include <vector>

namespace ineq {

/// Parameters of the first-order remainder operator (bidiagonal factor of
/// the lambda,c operator minus its weight diagonal).
struct Remainder1Spec {
    PositiveSequence lambda;
    Real c;
    PositiveSequence mu;

    Remainder1Spec(PositiveSequence lambda_, Real c_, PositiveSequence mu_);
};

/// (R A)_n = (sqrt(mu_{n+1}/(mu_n l_{n+1})) A_n - sqrt(mu_n/(mu_{n+1} l_{n+1})) A_{n+1})
///           * Lambda_{n+1}^{(2-c)/2},  n >= 1. Vanishes on mu by construction.
FiniteSequence remainder1_apply(const Remainder1Spec& spec, const FiniteSequence& A);

/// Factorization data {gamma_n^2, beta_n} for the second-order remainder.
/// gamma_sq and beta are indexed from 1 (slot [0] unused).
struct RemainderCoefficients {
    std::vector<Real> gamma_sq;
    std::vector<Real> beta;
    long n_max = 0;
    std::string delta_name;
    std::string mu_name;

    const Real& gamma_sq_at(long n) const;
    const Real& beta_at(long n) const;
};

/// Result of running the gamma recurrence. On breakdown (gamma_n^2 <= 0)
/// the coefficients are truncated before the offending index and
/// `breakdown` carries it; scans treat this as a value, not an abort.
struct GammaBuildResult {
    RemainderCoefficients coeffs;
    std::optional<long> breakdown;

    bool ok() const { return !breakdown.has_value(); }
    /// Coefficients of a successful build; throws FactorizationBreakdownError otherwise.
    const RemainderCoefficients& require() const;
};

/// Runs the initial condition and the gamma^2 recurrence up to n_max.
GammaBuildResult gamma_coefficients(const PositiveSequence& delta, const PositiveSequence& mu,
                                    long n_max);

/// Fills beta from the vanishing condition:
/// beta_n = sqrt(d_{n+2}) (gamma_n mu_n + mu_{n+2}/gamma_n) / mu_{n+1}.
RemainderCoefficients beta_coefficients(const PositiveSequence& delta, const PositiveSequence& mu,
                                        RemainderCoefficients coeffs);

/// Convenience: gamma + beta in one call (throws on breakdown unless
/// `allow_breakdown`); result carries the breakdown index if any.
GammaBuildResult remainder2_coefficients(const PositiveSequence& delta, const PositiveSequence& mu,
                                         long n_max);

/// (R A)_n = gamma_n sqrt(d_{n+1} d_{n+2}) A_n - beta_n sqrt(d_{n+1}) A_{n+1}
///           + (sqrt(d_{n+1} d_{n+2}) / gamma_n) A_{n+2},  n >= 1.
/// Requires coefficients covering [1, support_end(A)].
FiniteSequence remainder2_apply(const PositiveSequence& delta, const RemainderCoefficients& coeffs,
                                const FiniteSequence& A);

/// For each n <= n_max reports (p_n p_{n+1}, gamma_n^2, p_n p_{n+1} p_{n+2})
/// with p_n = mu_{n+1}/mu_n, and checks both strict inequalities.
VerificationReport gamma_bounds_check(const PositiveSequence& delta, const PositiveSequence& mu,
                                      long n_max, const PrecisionContext& ctx);

/// Rows of the gamma_bounds_check table, exposed for the CLI.
struct GammaBoundsRow {
    long n;
    Real lower;     // p_n p_{n+1}
    Real gamma_sq;  // gamma_n^2
    Real upper;     // p_n p_{n+1} p_{n+2}
    bool strict;    // lower < gamma_sq < upper
};
std::vector<GammaBoundsRow> gamma_bounds_rows(const PositiveSequence& delta,
                                              const PositiveSequence& mu, long n_max);

}  // namespace ineq
