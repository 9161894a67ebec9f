#pragma once

#include "ineq/sequences.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>

namespace ineq {

/// S_tilde(n) = n(n+1)(2n+1)/6, the running sum of squares.
Real sum_of_squares(long n);
Rational sum_of_squares_rational(long n);

/// S_hat(n) = (n(n+1)/2)^2, the running sum of cubes.
Real sum_of_cubes(long n);
Rational sum_of_cubes_rational(long n);

/// Improved Hardy weight 2 - sqrt(1 - 1/n) - sqrt(1 + 1/n), evaluated in
/// the algebraically stabilized form 2x^2 / [(1+sqrt(1-x^2)) (2+sqrt(1-x)+sqrt(1+x))].
Real hardy_weight_classical(long n);
/// Same weight evaluated literally (cancellation-prone; cross-check path).
Real hardy_weight_classical_naive(long n);

/// Classical Hardy comparison weight 1/(4n^2).
Real hardy_classical_bound(long n);

/// Generated Hardy weight 2 - mu_{n-1}/mu_n - mu_{n+1}/mu_n with mu_0 = 0.
Real hardy_weight_mu(const PositiveSequence& mu, long n);

/// Weight of the lambda,c operator against mu:
/// Lam_n^{2-c}/l_n + Lam_{n+1}^{2-c}/l_{n+1} - mu_{n-1} Lam_n^{2-c}/(l_n mu_n)
///   - mu_{n+1} Lam_{n+1}^{2-c}/(l_{n+1} mu_n),  mu_0 = 0.
/// `lambda_partial` must be the partial-sums sequence of lambda.
Real eta_weight(const PositiveSequence& lambda, const PositiveSequence& lambda_partial,
                const Real& c, const PositiveSequence& mu, long n);

/// Convenience overload building the partial sums internally (O(n) per call).
Real eta_weight(const PositiveSequence& lambda, const Real& c, const PositiveSequence& mu, long n);

/// The c = 2 specialization: 1/l_n + 1/l_{n+1} - mu_{n-1}/(l_n mu_n) - mu_{n+1}/(l_{n+1} mu_n).
Real sigma_weight(const PositiveSequence& lambda, const PositiveSequence& mu, long n);

/// Closed form of eta for lambda_n = mu_n = n, c = 2: 1/(n^2 (n+1)).
Real eta_linear_closed(long n);
/// Its classical comparison weight 1/(n (n+1)^2).
Real generalized_hardy_bound(long n);

/// Power-weighted Hardy improvement, beta = (1-alpha)/2. Validity of the
/// improvement is established for alpha in {0} u [1/3, 1); outside that
/// set the value is still computed and `gupta_alpha_valid` reports false.
Real gupta_weight(const Real& alpha, long n);
bool gupta_alpha_valid(const Real& alpha);
/// Comparison weight ((alpha-1)^2/4) n^(alpha-2).
Real gupta_bound(const Real& alpha, long n);

/// Improved Copson weight for the square-weights case (four-term display,
/// inner differences evaluated via log1p/expm1).
Real copson_tilde_weight(long n);
Real copson_tilde_weight_naive(long n);
/// Comparison weight (1/16) n^2 / S_tilde(n)^(3/2).
Real copson_tilde_bound(long n);

/// Improved Copson weight for the cube-weights case. The stabilized path
/// uses the exact rational reduction (n^2+3n+1)/(2 n^3 (n+1)^2).
Real copson_hat_weight(long n);
Real copson_hat_weight_naive(long n);
Rational copson_hat_weight_rational(long n);
/// Comparison weight (1/16) n^3 / S_hat(n)^(3/2) = 1/(2(n+1)^3).
Real copson_hat_bound(long n);
Rational copson_hat_bound_rational(long n);

/// Improved Rellich weight
/// 6 - 4(1+1/n)^{3/2} - 4(1-1/n)^{3/2} + (1+2/n)^{3/2} + (1-2/n)^{3/2}, n >= 2.
Real rellich_rho2(long n);
/// Classical comparison 9/(16 n^4).
Real rellich_classical_bound(long n);

/// Order-alpha Rellich weight: interior stencil of the alpha-th Laplacian
/// power applied to mu(k) = k^(alpha - 1/2) (zero at k <= 0), divided by mu(n).
Real rellich_rho_alpha(unsigned alpha, long n);

/// Weight of the squared delta operator against mu (five-term row, mu_0 = 0), n >= 2.
Real sigma2_weight(const PositiveSequence& delta, const PositiveSequence& mu, long n);

/// Sharp constant of the order-alpha binomial-mean inequality,
/// (4^alpha (alpha!)^2 / (2 alpha)!)^2, computed exactly then converted.
Real knopp_constant(unsigned alpha);
Rational knopp_constant_rational(unsigned alpha);

/// Row weight 1 / C(n-1+alpha, n-1)^2.
Real knopp_row_weight(unsigned alpha, long n);

/// Classical chain weight ((2 alpha)!)^2 / (16^alpha (alpha!)^2) * n^(-2 alpha).
Real knopp_classical_bound(unsigned alpha, long n);
Rational knopp_classical_constant_rational(unsigned alpha);

/// A named weight evaluator over n >= n_min. `eval` is the scan path;
/// `eval_naive`, when present, is the literal-formula path used for
/// cross-validation at doubled precision. `flag` carries caveats
/// (parameter outside proven validity, conjecture-backed order, ...).
struct WeightFamily {
    std::string name;
    long n_min = 1;
    std::function<Real(long)> eval;
    std::function<Real(long)> eval_naive;
    std::optional<std::string> flag;
};

/// Registry lookup used by the command-line layer. `params` supplies
/// mu=, lambda=, delta=, c=, alpha= as needed by the family.
WeightFamily make_weight_family(const std::string& name, const std::map<std::string, std::string>& params);

/// The comparison (classical) family conventionally paired with `name`.
std::optional<WeightFamily> paired_bound_family(const std::string& name,
                                                const std::map<std::string, std::string>& params);

/// Names accepted by make_weight_family.
std::vector<std::string> weight_family_names();

}  // namespace ineq
