#include "ineq/sequences.hpp"

#include <algorithm>
#include <utility>

namespace ineq {

namespace {
const Complex kZero{};
}

long FiniteSequence::compute_support_end(const std::vector<Complex>& v) {
    for (long i = static_cast<long>(v.size()) - 1; i >= 0; --i)
        if (!v[static_cast<std::size_t>(i)].is_zero()) return i;
    return -1;
}

FiniteSequence FiniteSequence::from_values(std::vector<Complex> values) {
    FiniteSequence s;
    s.values_ = std::move(values);
    s.support_end_ = compute_support_end(s.values_);
    return s;
}

FiniteSequence FiniteSequence::dirichlet(std::vector<Complex> values) {
    if (!values.empty() && !values[0].is_zero())
        throw PreconditionError("Dirichlet data requires value(0) = 0");
    return from_values(std::move(values));
}

FiniteSequence FiniteSequence::rellich(std::vector<Complex> values) {
    if ((!values.empty() && !values[0].is_zero()) || (values.size() > 1 && !values[1].is_zero()))
        throw PreconditionError("second-order data requires value(0) = value(1) = 0");
    return from_values(std::move(values));
}

FiniteSequence FiniteSequence::unit(long k) {
    std::vector<Complex> v(static_cast<std::size_t>(k) + 1);
    v[static_cast<std::size_t>(k)] = Complex(Real(1));
    return from_values(std::move(v));
}

const Complex& FiniteSequence::at(long n) const {
    if (n < 0 || n >= static_cast<long>(values_.size())) return kZero;
    return values_[static_cast<std::size_t>(n)];
}

FiniteSequence FiniteSequence::with_horizon(long h) const {
    FiniteSequence s = *this;
    s.horizon_ = h;
    return s;
}

PositiveSequence::PositiveSequence(std::string name, Real zero_value,
                                   std::function<Real(long)> generator)
    : name_(std::move(name)), zero_value_(std::move(zero_value)), generator_(std::move(generator)) {
    if (zero_value_ <= 0) throw ValidationError("boundary value at index 0 must be positive");
}

Real PositiveSequence::operator()(long n) const {
    if (n <= 0) return zero_value_;
    Real v = generator_(n);
    if (v <= 0)
        throw ValidationError("sequence '" + name_ + "' is not positive at n = " + std::to_string(n));
    return v;
}

PositiveSequence seq_ones() {
    return {"ones", Real(1), [](long) { return Real(1); }};
}

PositiveSequence seq_linear() {
    return {"linear", Real(1), [](long n) { return Real(n); }};
}

PositiveSequence seq_power(const Real& exponent) {
    // Rebuild the exponent from its exact decimal form so escalated scopes
    // do not inherit a narrower value.
    std::string r = exponent.str();
    return {"pow:" + r, Real(1), [r](long n) { return pow(Real(n), Real(r.c_str())); }};
}

PositiveSequence seq_shifted_ratio() {
    return {"shifted", Real(1), [](long n) { return Real(n + 2) / (n + 1); }};
}

PositiveSequence seq_copson_tilde_lambda() {
    return {"copson-tilde-lambda", Real(1), [](long n) {
                Real s = Real(n) * (n + 1) * (2 * n + 1) / 6;
                return Real(n) * n / sqrt(s);
            }};
}

PositiveSequence seq_copson_hat_lambda() {
    return {"copson-hat-lambda", Real(1), [](long n) {
                // sqrt((n(n+1)/2)^2) = n(n+1)/2 exactly
                return Real(n) * n * n / (Real(n) * (n + 1) / 2);
            }};
}

PositiveSequence seq_from_values(std::string name, Real zero_value, std::vector<Real> values) {
    for (std::size_t i = 0; i < values.size(); ++i)
        if (values[i] <= 0)
            throw ValidationError("sequence '" + name + "' has a non-positive value at n = " +
                                  std::to_string(i + 1));
    auto shared = std::make_shared<std::vector<Real>>(std::move(values));
    return {std::move(name), std::move(zero_value), [shared](long n) {
                if (n < 1 || n > static_cast<long>(shared->size()))
                    throw OutOfRangeError("sequence value requested beyond provided data at n = " +
                                          std::to_string(n));
                return (*shared)[static_cast<std::size_t>(n - 1)];
            }};
}

namespace {

// Memoized running sums, extended on demand. Guarded so shared sequences
// stay safe under the data-parallel scan model.
struct PartialSumMemo {
    PositiveSequence q;
    std::vector<Real> sums;  // sums[i] = q_1 + ... + q_{i+1}
    std::mutex mutex;

    explicit PartialSumMemo(PositiveSequence q_) : q(std::move(q_)) {}

    Real at(long n) {
        std::lock_guard<std::mutex> lock(mutex);
        while (static_cast<long>(sums.size()) < n) {
            long k = static_cast<long>(sums.size()) + 1;
            Real term = q(k);
            sums.push_back(sums.empty() ? term : sums.back() + term);
        }
        return sums[static_cast<std::size_t>(n - 1)];
    }
};

}  // namespace

PositiveSequence partial_sums(const PositiveSequence& q, long n_max) {
    if (n_max < 1) throw PreconditionError("partial_sums requires n_max >= 1");
    auto memo = std::make_shared<PartialSumMemo>(q);
    memo->at(n_max);  // validates positivity over the requested range
    return {"partial-sums(" + q.name() + ")", q.zero_value(),
            [memo](long n) { return memo->at(n); }};
}

FiniteSequence weighted_partial_sum_transform(const FiniteSequence& a, const PositiveSequence& q,
                                              long horizon) {
    if (!a.at(0).is_zero())
        throw PreconditionError("weighted partial sums assume a(0) = 0 (index 0 unused)");
    if (horizon < a.support_end())
        throw InvalidHorizonError("horizon " + std::to_string(horizon) +
                                  " is smaller than support end " + std::to_string(a.support_end()));
    std::vector<Complex> out(static_cast<std::size_t>(horizon) + 1);
    CompensatedSum re_acc, im_acc;
    for (long n = 1; n <= horizon; ++n) {
        const Complex& an = a.at(n);
        if (!an.is_zero()) {
            Complex term = an * q(n);
            re_acc.add(term.re);
            im_acc.add(term.im);
        }
        out[static_cast<std::size_t>(n)] = Complex(re_acc.value(), im_acc.value());
    }
    return FiniteSequence::from_values(std::move(out)).with_horizon(horizon);
}

FiniteSequence knopp_transform(const FiniteSequence& a, unsigned alpha, long horizon) {
    if (alpha == 0) throw InvalidOrderError("binomial mean order must be >= 1");
    if (horizon < a.support_end())
        throw InvalidHorizonError("horizon " + std::to_string(horizon) +
                                  " is smaller than support end " + std::to_string(a.support_end()));
    long s = std::max<long>(horizon, 0);
    std::vector<Complex> out(static_cast<std::size_t>(s) + 1);
    for (long n = 1; n <= s; ++n) {
        CompensatedSum acc;
        for (long k = 1; k <= n; ++k) {
            const Complex& ak = a.at(k);
            if (ak.is_zero()) continue;
            Real coeff(binomial(n - k + static_cast<long>(alpha) - 1, n - k));
            acc.add(coeff * abs(ak));
        }
        out[static_cast<std::size_t>(n)] = Complex(acc.value());
    }
    return FiniteSequence::from_values(std::move(out)).with_horizon(s);
}

Real weighted_norm_sq(const FiniteSequence& A, const std::function<Real(long)>& w, long n_start) {
    CompensatedSum acc;
    for (long n = std::max<long>(n_start, 0); n <= A.support_end(); ++n) {
        const Complex& v = A.at(n);
        if (v.is_zero()) continue;
        acc.add(w(n) * norm_sq(v));
    }
    return acc.value();
}

Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return Integer(0);
    Integer r;
    mpz_bin_uiui(r.backend().data(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

FiniteSequence random_sequence(std::uint64_t seed, long support, long leading_zeros) {
    SplitMix64 rng(seed);
    std::vector<Complex> v(static_cast<std::size_t>(support) + 1);
    for (long n = leading_zeros; n <= support; ++n) {
        // Dyadic entries k/1024 with |k| <= 7168 keep |entry| <= 10 and stay
        // exact at every working precision.
        auto draw = [&rng]() {
            long k = static_cast<long>(rng.next() % 14337ULL) - 7168;
            return Real(k) / 1024;
        };
        v[static_cast<std::size_t>(n)] = Complex(draw(), draw());
    }
    return FiniteSequence::from_values(std::move(v));
}

}  // namespace ineq
