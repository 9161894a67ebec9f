#include "ineq/factorization.hpp"

#include <algorithm>

namespace ineq {

Remainder1Spec::Remainder1Spec(PositiveSequence lambda_, Real c_, PositiveSequence mu_)
    : lambda(std::move(lambda_)), c(std::move(c_)), mu(std::move(mu_)) {
    if (!(c > 1 && c <= 2)) throw ValidationError("c must lie in (1, 2]");
}

FiniteSequence remainder1_apply(const Remainder1Spec& spec, const FiniteSequence& A) {
    if (!A.at(0).is_zero()) throw PreconditionError("remainder rows assume A(0) = 0");
    long s = A.support_end();
    long len = A.stored_size() + 2;
    std::vector<Complex> out(static_cast<std::size_t>(len));
    const bool flat = (spec.c == 2);
    PositiveSequence Lam = partial_sums(spec.lambda, std::max<long>(s + 1, 1));
    for (long n = 1; n <= s; ++n) {
        Real mun = spec.mu(n), mun1 = spec.mu(n + 1), lam = spec.lambda(n + 1);
        Complex v = A.at(n) * sqrt(mun1 / (mun * lam)) - A.at(n + 1) * sqrt(mun / (mun1 * lam));
        if (!flat) v = v * pow(Lam(n + 1), (2 - spec.c) / 2);
        out[static_cast<std::size_t>(n)] = v;
    }
    return FiniteSequence::from_values(std::move(out));
}

const Real& RemainderCoefficients::gamma_sq_at(long n) const {
    if (n < 1 || n > n_max) throw CoverageError("gamma^2 not computed at n = " + std::to_string(n));
    return gamma_sq[static_cast<std::size_t>(n)];
}

const Real& RemainderCoefficients::beta_at(long n) const {
    if (n < 1 || n >= static_cast<long>(beta.size()))
        throw CoverageError("beta not computed at n = " + std::to_string(n));
    return beta[static_cast<std::size_t>(n)];
}

const RemainderCoefficients& GammaBuildResult::require() const {
    if (breakdown)
        throw FactorizationBreakdownError(
            "gamma^2 became non-positive at n = " + std::to_string(*breakdown), *breakdown);
    return coeffs;
}

GammaBuildResult gamma_coefficients(const PositiveSequence& delta, const PositiveSequence& mu,
                                    long n_max) {
    if (n_max < 1) throw PreconditionError("n_max must be >= 1");
    GammaBuildResult result;
    result.coeffs.delta_name = delta.name();
    result.coeffs.mu_name = mu.name();
    auto& g = result.coeffs.gamma_sq;
    g.assign(static_cast<std::size_t>(n_max) + 1, Real(0));

    Real g1 = (mu(2) / mu(1)) * (2 * delta(2) / delta(3) + delta(1) / delta(3) + 1) - mu(3) / mu(1);
    if (g1 <= 0) {
        result.breakdown = 1;
        result.coeffs.n_max = 0;
        return result;
    }
    g[1] = g1;
    for (long n = 2; n <= n_max; ++n) {
        Real dn = delta(n), dn1 = delta(n + 1), dn2 = delta(n + 2);
        Real mun = mu(n), mun1 = mu(n + 1);
        Real bracket = 2 * dn1 * dn1 + dn * dn1 + dn1 * dn2 - (mu(n + 2) / mun1) * dn1 * dn2 -
                       (mu(n - 1) / mun) * dn * dn1 -
                       (mun1 / (mun * g[static_cast<std::size_t>(n - 1)])) * dn * dn1;
        Real gn = (mun1 / (mun * dn1 * dn2)) * bracket;
        if (gn <= 0) {
            result.breakdown = n;
            result.coeffs.n_max = n - 1;
            g.resize(static_cast<std::size_t>(n));
            return result;
        }
        g[static_cast<std::size_t>(n)] = gn;
    }
    result.coeffs.n_max = n_max;
    return result;
}

RemainderCoefficients beta_coefficients(const PositiveSequence& delta, const PositiveSequence& mu,
                                        RemainderCoefficients coeffs) {
    coeffs.beta.assign(static_cast<std::size_t>(coeffs.n_max) + 1, Real(0));
    for (long n = 1; n <= coeffs.n_max; ++n) {
        Real gamma = sqrt(coeffs.gamma_sq_at(n));
        coeffs.beta[static_cast<std::size_t>(n)] =
            sqrt(delta(n + 2)) * (gamma * mu(n) + mu(n + 2) / gamma) / mu(n + 1);
    }
    return coeffs;
}

GammaBuildResult remainder2_coefficients(const PositiveSequence& delta, const PositiveSequence& mu,
                                         long n_max) {
    GammaBuildResult result = gamma_coefficients(delta, mu, n_max);
    if (result.coeffs.n_max >= 1) result.coeffs = beta_coefficients(delta, mu, result.coeffs);
    return result;
}

FiniteSequence remainder2_apply(const PositiveSequence& delta, const RemainderCoefficients& coeffs,
                                const FiniteSequence& A) {
    long s = A.support_end();
    if (s >= 1 && (coeffs.n_max < s || static_cast<long>(coeffs.beta.size()) <= s))
        throw CoverageError("remainder coefficients cover [1, " + std::to_string(coeffs.n_max) +
                            "] but the sequence is supported up to " + std::to_string(s));
    long len = A.stored_size() + 2;
    std::vector<Complex> out(static_cast<std::size_t>(len));
    for (long n = 1; n <= s; ++n) {
        Real dd = sqrt(delta(n + 1) * delta(n + 2));
        Real gamma = sqrt(coeffs.gamma_sq_at(n));
        out[static_cast<std::size_t>(n)] = A.at(n) * (gamma * dd) -
                                           A.at(n + 1) * (coeffs.beta_at(n) * sqrt(delta(n + 1))) +
                                           A.at(n + 2) * (dd / gamma);
    }
    return FiniteSequence::from_values(std::move(out));
}

std::vector<GammaBoundsRow> gamma_bounds_rows(const PositiveSequence& delta,
                                              const PositiveSequence& mu, long n_max) {
    GammaBuildResult built = gamma_coefficients(delta, mu, n_max);
    std::vector<GammaBoundsRow> rows;
    rows.reserve(static_cast<std::size_t>(built.coeffs.n_max));
    for (long n = 1; n <= built.coeffs.n_max; ++n) {
        Real pn = mu(n + 1) / mu(n);
        Real pn1 = mu(n + 2) / mu(n + 1);
        Real pn2 = mu(n + 3) / mu(n + 2);
        Real lower = pn * pn1;
        Real upper = lower * pn2;
        const Real& g = built.coeffs.gamma_sq_at(n);
        rows.push_back({n, lower, g, upper, lower < g && g < upper});
    }
    return rows;
}

VerificationReport gamma_bounds_check(const PositiveSequence& delta, const PositiveSequence& mu,
                                      long n_max, const PrecisionContext& ctx) {
    PrecisionScope scope(ctx);
    VerificationReport report;
    report.name = "gamma-bounds(" + delta.name() + ", " + mu.name() + ")";
    report.range = "[1, " + std::to_string(n_max) + "]";
    report.precision_bits = ctx.mantissa_bits;

    GammaBuildResult built = gamma_coefficients(delta, mu, n_max);
    auto rows = gamma_bounds_rows(delta, mu, n_max);
    bool all_strict = true;
    for (const auto& row : rows) {
        Real gap = min(row.gamma_sq - row.lower, row.upper - row.gamma_sq);
        if (!report.min_gap || gap < *report.min_gap) {
            report.min_gap = gap;
            report.min_gap_index = row.n;
        }
        if (!row.strict) {
            all_strict = false;
            report.witnesses.push_back({row.n, row.lower, row.gamma_sq});
        }
    }
    if (built.breakdown) {
        report.flag = "factorization breakdown at n = " + std::to_string(*built.breakdown);
        report.witnesses.push_back({*built.breakdown, Real(0), Real(0)});
    }
    report.pass = all_strict && !built.breakdown;
    report.max_residual = report.min_gap ? max(Real(0), -*report.min_gap) : Real(0);
    return report;
}

}  // namespace ineq
