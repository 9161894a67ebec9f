#pragma once

#include "ineq/precision.hpp"

namespace ineq {

/// Complex number over Real. std::complex is not usable with
/// multiprecision scalars, so we carry the handful of operations the
/// quadratic forms need.
struct Complex {
    Real re;
    Real im;

    Complex() : re(0), im(0) {}
    Complex(Real r) : re(std::move(r)), im(0) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    Complex(int r) : re(r), im(0) {}

    bool is_zero() const { return re == 0 && im == 0; }

    Complex operator+(const Complex& o) const { return {re + o.re, im + o.im}; }
    Complex operator-(const Complex& o) const { return {re - o.re, im - o.im}; }
    Complex operator-() const { return {-re, -im}; }
    Complex operator*(const Complex& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    Complex operator*(const Real& s) const { return {re * s, im * s}; }

    Complex& operator+=(const Complex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }

    friend Complex operator*(const Real& s, const Complex& z) { return z * s; }

    bool operator==(const Complex& o) const { return re == o.re && im == o.im; }
};

inline Complex conj(const Complex& z) { return {z.re, -z.im}; }

inline Real norm_sq(const Complex& z) { return z.re * z.re + z.im * z.im; }

inline Real abs(const Complex& z) { return sqrt(norm_sq(z)); }

}  // namespace ineq
