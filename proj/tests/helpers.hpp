#pragma once

#include <doctest.h>

#include "ineq/complex.hpp"
#include "ineq/precision.hpp"
#include "ineq/sequences.hpp"

#include <vector>

namespace test {

using ineq::Complex;
using ineq::FiniteSequence;
using ineq::Integer;
using ineq::Rational;
using ineq::Real;
using ineq::max;
using ineq::min;

inline Real tol() { return Real("1e-60"); }

inline void check_close(const Real& a, const Real& b, const Real& t = tol()) {
    Real scale = max(max(abs(a), abs(b)), Real(1));
    CHECK(abs(a - b) <= t * scale);
}

inline void check_close(const Complex& a, const Complex& b, const Real& t = tol()) {
    check_close(a.re, b.re, t);
    check_close(a.im, b.im, t);
}

inline FiniteSequence seq_of(std::initializer_list<double> values) {
    std::vector<Complex> v;
    for (double x : values) v.emplace_back(Real(x));
    return FiniteSequence::from_values(std::move(v));
}

// Binomial coefficients by the Pascal recurrence, independent of the
// library's GMP-backed route.
inline Integer pascal_binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return Integer(0);
    std::vector<Integer> row(static_cast<std::size_t>(n) + 1, Integer(0));
    row[0] = 1;
    for (long i = 1; i <= n; ++i)
        for (long j = i; j >= 1; --j) row[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j - 1)];
    return row[static_cast<std::size_t>(k)];
}

// Plain uncompensated inner product, used as the summation oracle.
inline Real naive_norm_sq(const FiniteSequence& A, long n_start = 0) {
    Real s = 0;
    for (long n = n_start; n <= A.support_end(); ++n) s += norm_sq(A.at(n));
    return s;
}

}  // namespace test
