#pragma once

#include "ineq/complex.hpp"
#include "ineq/precision.hpp"

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace ineq {

/// A finitely supported complex sequence on indices 0, 1, 2, ...
/// Queries outside the stored range (including negative indices) return
/// exactly zero. Immutable after construction.
class FiniteSequence {
public:
    FiniteSequence() = default;

    /// General data, no boundary constraint.
    static FiniteSequence from_values(std::vector<Complex> values);

    /// Dirichlet data: value(0) must be zero.
    static FiniteSequence dirichlet(std::vector<Complex> values);

    /// Second-order data: value(0) and value(1) must be zero.
    static FiniteSequence rellich(std::vector<Complex> values);

    /// Unit sequence e_k (all zero except index k).
    static FiniteSequence unit(long k);

    /// Entry at index n; exact zero for n < 0 or beyond the stored range.
    const Complex& at(long n) const;

    /// Largest index with a nonzero entry, or -1 for the zero sequence.
    long support_end() const { return support_end_; }

    /// Number of stored slots (may include trailing explicit zeros).
    long stored_size() const { return static_cast<long>(values_.size()); }

    bool is_zero() const { return support_end_ < 0; }

    /// Set by transforms whose output is eventually constant: entries are
    /// materialized up to this index and the mathematical sequence keeps
    /// the same value beyond it.
    std::optional<long> horizon() const { return horizon_; }

    FiniteSequence with_horizon(long h) const;

private:
    std::vector<Complex> values_;
    long support_end_ = -1;
    std::optional<long> horizon_;

    static long compute_support_end(const std::vector<Complex>& v);
};

/// A strictly positive real sequence given by a generator on n >= 1 plus
/// a positive boundary value at index 0. Evaluation revalidates
/// positivity; generators are expected to rebuild values from exact data
/// so results track the ambient precision.
class PositiveSequence {
public:
    PositiveSequence(std::string name, Real zero_value, std::function<Real(long)> generator);

    /// Value at n: generator(n) for n >= 1, the boundary value at n = 0.
    Real operator()(long n) const;

    const Real& zero_value() const { return zero_value_; }
    const std::string& name() const { return name_; }

private:
    std::string name_;
    Real zero_value_;
    std::function<Real(long)> generator_;
};

/// Named constructors for the common families.
PositiveSequence seq_ones();
PositiveSequence seq_linear();                      // n
PositiveSequence seq_power(const Real& exponent);   // n^r
PositiveSequence seq_shifted_ratio();               // (n+2)/(n+1)
PositiveSequence seq_copson_tilde_lambda();         // n^2 / sqrt(n(n+1)(2n+1)/6)
PositiveSequence seq_copson_hat_lambda();           // n^3 / sqrt((n(n+1)/2)^2)
PositiveSequence seq_from_values(std::string name, Real zero_value, std::vector<Real> values);

/// Running sums Q_n = q_1 + ... + q_n as a PositiveSequence (strictly
/// increasing). Q_0 is the boundary value of q. Values are memoized at
/// the precision in effect when first computed.
PositiveSequence partial_sums(const PositiveSequence& q, long n_max);

/// A_n = sum_{k=1..n} q_k a_k for n in [1, horizon]; A_0 = 0. The result
/// is eventually constant, so the constant tail is materialized up to
/// `horizon` and marked via FiniteSequence::horizon().
FiniteSequence weighted_partial_sum_transform(const FiniteSequence& a, const PositiveSequence& q,
                                              long horizon);

/// Binomial means of order alpha >= 1:
/// A_n = sum_{k=1..n} C(n-k+alpha-1, n-k) |a_k|. Real and nonnegative.
/// The output keeps growing beyond the support of `a`, so entries are
/// materialized up to the caller-supplied horizon.
FiniteSequence knopp_transform(const FiniteSequence& a, unsigned alpha, long horizon);

/// sum_{n >= n_start} w(n) |A_n|^2 with compensated accumulation.
Real weighted_norm_sq(const FiniteSequence& A, const std::function<Real(long)>& w, long n_start);

/// Exact binomial coefficient C(n, k) as an Integer (0 for k < 0 or k > n).
Integer binomial(long n, long k);

/// Deterministic pseudo-random complex sequence for reproducible checks.
/// Entries are dyadic rationals with |entry| <= 10, exactly representable
/// at any working precision. `leading_zeros` entries at the front are
/// pinned to zero (boundary data).
FiniteSequence random_sequence(std::uint64_t seed, long support, long leading_zeros);

/// SplitMix64: a small, platform-stable generator for seeds.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

}  // namespace ineq
