#pragma once

#include <boost/multiprecision/mpfr.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace ineq {

/// Software floating point with runtime-selectable mantissa width.
using Real = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<0, boost::multiprecision::allocate_dynamic>,
    boost::multiprecision::et_off>;

inline Real max(const Real& a, const Real& b) { return a < b ? b : a; }
inline Real min(const Real& a, const Real& b) { return b < a ? b : a; }

/// Exact rational arithmetic, used by certification routes.
using Rational = boost::multiprecision::mpq_rational;

/// Exact integer arithmetic (binomials, factorials).
using Integer = boost::multiprecision::mpz_int;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidHorizonError : Error { using Error::Error; };
struct InvalidOrderError : Error { using Error::Error; };
struct OutOfRangeError : Error { using Error::Error; };
struct NonHermitianError : Error { using Error::Error; };
struct CoverageError : Error { using Error::Error; };
struct PreconditionError : Error { using Error::Error; };
struct ValidationError : Error { using Error::Error; };
struct FactorizationBreakdownError : Error {
    FactorizationBreakdownError(const std::string& what, long witness_index)
        : Error(what), witness(witness_index) {}
    long witness;
};

/// Decimal digits needed to represent `bits` binary mantissa bits,
/// rounded up (ceil(bits * 0.30103)).
inline unsigned digits_for_bits(unsigned bits) {
    return static_cast<unsigned>((static_cast<unsigned long long>(bits) * 30103ULL + 99999ULL) / 100000ULL);
}

/// Controls the mantissa width and comparison tolerances for all real
/// arithmetic. The effective MPFR precision is the smallest width
/// representing `mantissa_bits` decimal-round-trippably, so it is always
/// >= mantissa_bits.
struct PrecisionContext {
    unsigned mantissa_bits = 256;
    Real tolerance_rel;
    Real tolerance_abs;

    PrecisionContext() : PrecisionContext(256) {}

    explicit PrecisionContext(unsigned bits)
        : mantissa_bits(bits),
          tolerance_rel("1e-30"),
          tolerance_abs("1e-40") {
        if (bits < 64) throw ValidationError("mantissa_bits must be >= 64");
    }

    PrecisionContext(unsigned bits, Real tol_rel, Real tol_abs)
        : mantissa_bits(bits), tolerance_rel(std::move(tol_rel)), tolerance_abs(std::move(tol_abs)) {
        if (bits < 64) throw ValidationError("mantissa_bits must be >= 64");
        if (tolerance_rel <= 0 || tolerance_abs <= 0)
            throw ValidationError("tolerances must be positive");
    }

    unsigned digits10() const { return digits_for_bits(mantissa_bits); }
};

/// RAII guard: sets the process-wide default precision for newly
/// constructed Real values, restoring the previous one on exit.
/// Existing values keep the width they were created with, so escalated
/// re-evaluation must rebuild its inputs from exact data inside the scope.
class PrecisionScope {
public:
    explicit PrecisionScope(unsigned mantissa_bits)
        : saved_(Real::default_precision()) {
        Real::default_precision(digits_for_bits(mantissa_bits));
    }
    explicit PrecisionScope(const PrecisionContext& ctx) : PrecisionScope(ctx.mantissa_bits) {}
    ~PrecisionScope() { Real::default_precision(saved_); }

    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    unsigned saved_;
};

/// Neumaier-compensated accumulator.
class CompensatedSum {
public:
    void add(const Real& x) {
        Real t = sum_ + x;
        if (abs(sum_) >= abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    Real value() const { return sum_ + comp_; }

private:
    Real sum_ = 0;
    Real comp_ = 0;
};

/// (a/b)^(3/2) for positive a, b.
inline Real ratio_pow_3_2(const Real& a, const Real& b) {
    Real t = a / b;
    return t * sqrt(t);
}

/// Decimal significant-digit rendering at the width implied by `bits`.
std::string format_decimal(const Real& x, unsigned bits);

/// Exact hexadecimal-float rendering (bit-for-bit reparseable).
std::string format_hex(const Real& x);

/// Parse a hexadecimal-float produced by format_hex.
Real parse_hex(const std::string& s);

}  // namespace ineq
