#pragma once

#include "ineq/factorization.hpp"
#include "ineq/operators.hpp"
#include "ineq/verification_report.hpp"
#include "ineq/weights.hpp"

#include <vector>

namespace ineq {

/// First-order energy identity: for A_0 = 0,
///   sum |A_{n-1}-A_n|^2 Lam_n^{2-c}/l_n
///     = sum eta_n |A_n|^2 + sum |(R A)_n|^2.
/// Both sides are computed through independent paths; the report carries
/// the relative residual.
VerificationReport verify_hardy_identity(const PositiveSequence& lambda, const Real& c,
                                         const PositiveSequence& mu, const FiniteSequence& A,
                                         const PrecisionContext& ctx);

/// The two improved-Copson specializations. Besides the generic remainder
/// route these also evaluate the explicit closed-form remainder rows as a
/// third independent path.
enum class CopsonVariant { tilde, hat };
VerificationReport verify_copson_identity(CopsonVariant variant, const FiniteSequence& A,
                                          const PrecisionContext& ctx);

/// Second-order energy identity: for A_0 = A_1 = 0,
///   sum |(delta Laplacian A)_n|^2
///     = sum sigma2_n |A_n|^2 + sum |(R A)_n|^2.
/// Propagates factorization breakdown as a failed report with witness.
VerificationReport verify_rellich_identity(const PositiveSequence& delta, const PositiveSequence& mu,
                                           const FiniteSequence& A, const PrecisionContext& ctx);

/// Strict pointwise comparison a(n) > b(n) over [n_min, n_max]. Near-ties
/// (|a-b| < 2^{-bits/2} |a|) are re-evaluated at doubled mantissa width
/// before deciding. Blocks of the range run on `threads` workers
/// (0 = auto); results are merged deterministically.
VerificationReport pointwise_scan(const WeightFamily& a, const WeightFamily& b, long n_min,
                                  long n_max, const PrecisionContext& ctx, unsigned threads = 0,
                                  bool strict = true);

/// Auxiliary closed forms for the comparison lemmas.
Real lemma_F(long n);
Real lemma_G(long n);
Real lemma_H(long n);
Real lemma_T(long n);
Real lemma_U(long n);
Real lemma_S(long n);
Real lemma_f(long n);
Real lemma_h(long n);
Rational lemma_h_rational(long n);

/// Evaluates every auxiliary inequality on [n_min, n_max]:
/// F > G, G > (36/16) n^{5/4}, H > 0, T > 0 (n >= 2), U < p_{n+1} p_{n+2}
/// (n >= 2), S < 0 (n >= 2), f < 0 (n >= 2), h > 0.
std::vector<VerificationReport> lemma_suite(long n_min, long n_max, const PrecisionContext& ctx);

/// Cutoff-modulated test sequences driving the remainder functional to zero.
enum class CriticalityVariant { tilde, hat };

struct CriticalitySequence {
    CriticalityVariant variant;
    long N;
    FiniteSequence realized;  // entries 0 .. N^2 (zero beyond)
};

CriticalitySequence make_criticality_sequence(CriticalityVariant variant, long N);

struct CriticalityRow {
    long N;
    Real remainder_sum;
    Real bound;  // log N / N^2 (+ 1/(2N) - 1/(2N^2) for the tilde variant)
};

/// For each N: builds the test sequence, evaluates the reduced remainder
/// sum over the modulated window, and checks it against the closed-form
/// bound. The report also requires the sums to decrease along N_list.
VerificationReport criticality_decay(CriticalityVariant variant, const std::vector<long>& N_list,
                                     const PrecisionContext& ctx);
std::vector<CriticalityRow> criticality_rows(CriticalityVariant variant,
                                             const std::vector<long>& N_list);

/// Identity between the order-alpha backward difference energy and the
/// quadratic form of the alpha-th Laplacian power:
///   sum_{n>=alpha} |(D^alpha A)_n|^2 = sum_{n>=alpha} ((-L)^alpha A)_n conj(A_n),
/// requiring A_n = 0 for 0 <= n <= alpha-1.
VerificationReport knopp_rellich_identity(unsigned alpha, const FiniteSequence& A,
                                          const PrecisionContext& ctx);

/// The four sums of the improvement chain and their ordering. For
/// alpha >= 3 the weight links rest on the conjectured higher-order
/// improvement and the report is flagged accordingly. At alpha = 2 both
/// normalizations of the final sum (binomial-row and mean-normalized) are
/// computed and reconciled.
struct KnoppChainSums {
    Real energy;            // sum |(D^alpha A)_n|^2
    Real improved;          // sum rho_n |A_n|^2
    Real classical;         // classical-constant-weighted sum
    Real knopp_weighted;    // constant^{-1} * sum |A_n|^2 / C(n-1+alpha, n-1)^2
    std::optional<Real> knopp_weighted_mean_form;  // alpha = 2 alternative normalization
};
VerificationReport knopp_improvement_chain(unsigned alpha, const FiniteSequence& A,
                                           const PrecisionContext& ctx,
                                           KnoppChainSums* sums_out = nullptr);

}  // namespace ineq
