#include "ineq/operators.hpp"

#include <algorithm>

namespace ineq {

OperatorSpec OperatorSpec::make_dirichlet() { return {OperatorKind::dirichlet, std::nullopt, Real(2)}; }

OperatorSpec OperatorSpec::make_generalized(PositiveSequence lambda, Real c) {
    if (!(c > 1 && c <= 2)) throw ValidationError("c must lie in (1, 2]");
    return {OperatorKind::generalized_lambda_c, std::move(lambda), std::move(c)};
}

OperatorSpec OperatorSpec::make_weighted(PositiveSequence delta) {
    return {OperatorKind::weighted_delta, std::move(delta), Real(2)};
}

OperatorSpec OperatorSpec::make_bilaplacian(PositiveSequence delta) {
    return {OperatorKind::bilaplacian_delta, std::move(delta), Real(2)};
}

FiniteSequence apply_dirichlet_laplacian(const FiniteSequence& A) {
    long len = A.stored_size() + 2;
    std::vector<Complex> out(static_cast<std::size_t>(len));
    out[0] = A.at(0) * Real(2) - A.at(1);
    for (long n = 1; n < len; ++n)
        out[static_cast<std::size_t>(n)] = A.at(n) * Real(2) - A.at(n - 1) - A.at(n + 1);
    return FiniteSequence::from_values(std::move(out));
}

FiniteSequence apply_laplacian_power(const FiniteSequence& A, unsigned alpha) {
    if (alpha == 0) throw InvalidOrderError("power must be >= 1");
    FiniteSequence r = A;
    for (unsigned i = 0; i < alpha; ++i) r = apply_dirichlet_laplacian(r);
    return r;
}

FiniteSequence apply_generalized_laplacian(const OperatorSpec& spec, const FiniteSequence& A) {
    if (spec.kind != OperatorKind::generalized_lambda_c || !spec.weight)
        throw PreconditionError("spec is not a generalized operator");
    const PositiveSequence& lambda = *spec.weight;
    long len = A.stored_size() + 2;
    PositiveSequence Lam = partial_sums(lambda, len + 1);
    const bool flat = (spec.c == 2);
    auto ratio = [&](long n) {
        // Lambda_n^{2-c} / lambda_n; the boundary slot uses Lambda_0 = lambda_0.
        Real lam_n = lambda(n);
        if (flat) return 1 / lam_n;
        Real base = (n == 0) ? lambda.zero_value() : Lam(n);
        return pow(base, 2 - spec.c) / lam_n;
    };
    std::vector<Complex> out(static_cast<std::size_t>(len));
    Real prev = ratio(0);
    for (long n = 0; n < len; ++n) {
        Real next = ratio(n + 1);
        if (n == 0)
            out[0] = A.at(0) * (prev + next) - A.at(1) * next;
        else
            out[static_cast<std::size_t>(n)] =
                A.at(n) * (prev + next) - A.at(n - 1) * prev - A.at(n + 1) * next;
        prev = next;
    }
    return FiniteSequence::from_values(std::move(out));
}

FiniteSequence apply_weighted_laplacian_delta(const PositiveSequence& delta, const FiniteSequence& A) {
    long len = A.stored_size() + 2;
    std::vector<Complex> out(static_cast<std::size_t>(len));
    Real d0 = delta.zero_value();
    Real d1 = delta(1);
    out[0] = A.at(0) * (d0 + d1) - A.at(1) * d1;
    Real dn = d1;
    for (long n = 1; n < len; ++n) {
        Real dn1 = delta(n + 1);
        out[static_cast<std::size_t>(n)] = A.at(n) * (dn + dn1) - A.at(n - 1) * dn - A.at(n + 1) * dn1;
        dn = dn1;
    }
    return FiniteSequence::from_values(std::move(out));
}

FiniteSequence apply_bilaplacian_delta(const PositiveSequence& delta, const FiniteSequence& A) {
    long len = A.stored_size() + 3;
    std::vector<Complex> out(static_cast<std::size_t>(len));
    Real d0 = delta.zero_value();
    Real d1 = delta(1), d2 = delta(2), d3 = delta(3);
    out[0] = A.at(0) * ((d0 + d1) * (d0 + d1) + d1 * d1) -
             A.at(1) * (2 * d1 * d1 + d0 * d1 + d1 * d2) + A.at(2) * (d1 * d2);
    out[1] = -A.at(0) * (2 * d1 * d1 + d0 * d1 + d1 * d2) +
             A.at(1) * ((d1 + d2) * (d1 + d2) + d1 * d1 + d2 * d2) -
             A.at(2) * (2 * d2 * d2 + d1 * d2 + d2 * d3) + A.at(3) * (d2 * d3);
    for (long n = 2; n < len; ++n) {
        Real dn = delta(n), dn1 = delta(n + 1), dn2 = delta(n + 2), dnm = delta(n - 1);
        out[static_cast<std::size_t>(n)] =
            A.at(n) * ((dn + dn1) * (dn + dn1) + dn * dn + dn1 * dn1) -
            A.at(n - 1) * (2 * dn * dn + dn * dnm + dn * dn1) -
            A.at(n + 1) * (2 * dn1 * dn1 + dn * dn1 + dn1 * dn2) + A.at(n - 2) * (dn * dnm) +
            A.at(n + 2) * (dn1 * dn2);
    }
    return FiniteSequence::from_values(std::move(out));
}

FiniteSequence backward_difference(const FiniteSequence& A, unsigned alpha) {
    if (alpha == 0) throw InvalidOrderError("difference order must be >= 1");
    long len = A.stored_size() + static_cast<long>(alpha) + 1;
    std::vector<Real> coeff(alpha + 1);
    for (unsigned j = 0; j <= alpha; ++j) {
        coeff[j] = Real(binomial(static_cast<long>(alpha), static_cast<long>(j)));
        if (j % 2 == 1) coeff[j] = -coeff[j];
    }
    std::vector<Complex> out(static_cast<std::size_t>(len));
    for (long n = 1; n < len; ++n) {
        Complex acc{};
        for (unsigned j = 0; j <= alpha; ++j) {
            long m = n - static_cast<long>(j);
            if (m < 1) break;  // indices <= 0 contribute zero
            acc += A.at(m) * coeff[j];
        }
        out[static_cast<std::size_t>(n)] = acc;
    }
    return FiniteSequence::from_values(std::move(out));
}

FiniteSequence apply_operator(const OperatorSpec& spec, const FiniteSequence& A) {
    switch (spec.kind) {
        case OperatorKind::dirichlet: return apply_dirichlet_laplacian(A);
        case OperatorKind::generalized_lambda_c: return apply_generalized_laplacian(spec, A);
        case OperatorKind::weighted_delta: return apply_weighted_laplacian_delta(*spec.weight, A);
        case OperatorKind::bilaplacian_delta: return apply_bilaplacian_delta(*spec.weight, A);
    }
    throw PreconditionError("unknown operator kind");
}

Real quadratic_form(const std::function<FiniteSequence(const FiniteSequence&)>& op_apply,
                    const FiniteSequence& A, long n_start, const PrecisionContext& ctx) {
    FiniteSequence opA = op_apply(A);
    CompensatedSum re_acc, im_acc, scale_acc;
    long hi = std::max(opA.support_end(), A.support_end());
    for (long n = std::max<long>(n_start, 0); n <= hi; ++n) {
        const Complex& a = A.at(n);
        if (a.is_zero()) continue;
        Complex term = opA.at(n) * conj(a);
        re_acc.add(term.re);
        im_acc.add(term.im);
        scale_acc.add(abs(term.re) + abs(term.im));
    }
    Real im = im_acc.value();
    Real scale = scale_acc.value();
    Real rounding_floor = ldexp(scale, -static_cast<long>(ctx.mantissa_bits) + 8);
    if (abs(im) > ctx.tolerance_abs && abs(im) > rounding_floor)
        throw NonHermitianError("quadratic form has imaginary residue " + im.str(6));
    return re_acc.value();
}

Real quadratic_form(const OperatorSpec& spec, const FiniteSequence& A, long n_start,
                    const PrecisionContext& ctx) {
    return quadratic_form([&spec](const FiniteSequence& X) { return apply_operator(spec, X); }, A,
                          n_start, ctx);
}

Real hardy_energy(const FiniteSequence& A, const PositiveSequence& lambda, const Real& c) {
    if (!A.at(0).is_zero()) throw PreconditionError("energy requires A(0) = 0");
    if (!(c > 1 && c <= 2)) throw ValidationError("c must lie in (1, 2]");
    long hi = A.support_end() + 1;
    const bool flat = (c == 2);
    PositiveSequence Lam = partial_sums(lambda, std::max<long>(hi, 1));
    CompensatedSum acc;
    for (long n = 1; n <= hi; ++n) {
        Complex diff = A.at(n - 1) - A.at(n);
        if (diff.is_zero()) continue;
        Real w = flat ? 1 / lambda(n) : pow(Lam(n), 2 - c) / lambda(n);
        acc.add(norm_sq(diff) * w);
    }
    return acc.value();
}

Real rellich_energy(const PositiveSequence& delta, const FiniteSequence& A) {
    if (!A.at(0).is_zero() || !A.at(1).is_zero())
        throw PreconditionError("second-order energy requires A(0) = A(1) = 0");
    FiniteSequence LA = apply_weighted_laplacian_delta(delta, A);
    CompensatedSum acc;
    for (long n = 1; n <= LA.support_end(); ++n) {
        const Complex& v = LA.at(n);
        if (!v.is_zero()) acc.add(norm_sq(v));
    }
    return acc.value();
}

std::vector<std::vector<Real>> assemble_matrix(const OperatorSpec& spec, long size) {
    std::vector<std::vector<Real>> M(static_cast<std::size_t>(size),
                                     std::vector<Real>(static_cast<std::size_t>(size), Real(0)));
    auto at = [&M](long i, long j) -> Real& {
        return M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    };
    switch (spec.kind) {
        case OperatorKind::dirichlet: {
            for (long n = 0; n < size; ++n) {
                at(n, n) = 2;
                if (n > 0) at(n, n - 1) = -1;
                if (n + 1 < size) at(n, n + 1) = -1;
            }
            break;
        }
        case OperatorKind::generalized_lambda_c: {
            const PositiveSequence& lambda = *spec.weight;
            PositiveSequence Lam = partial_sums(lambda, size + 1);
            const bool flat = (spec.c == 2);
            auto ratio = [&](long n) {
                Real base = (n == 0) ? lambda.zero_value() : Lam(n);
                return flat ? 1 / lambda(n) : pow(base, 2 - spec.c) / lambda(n);
            };
            for (long n = 0; n < size; ++n) {
                Real rn = ratio(n), rn1 = ratio(n + 1);
                at(n, n) = rn + rn1;
                if (n > 0) at(n, n - 1) = -rn;
                if (n + 1 < size) at(n, n + 1) = -rn1;
            }
            break;
        }
        case OperatorKind::weighted_delta: {
            const PositiveSequence& delta = *spec.weight;
            for (long n = 0; n < size; ++n) {
                Real dn = (n == 0) ? delta.zero_value() : delta(n);
                Real dn1 = delta(n + 1);
                at(n, n) = dn + dn1;
                if (n > 0) at(n, n - 1) = -dn;
                if (n + 1 < size) at(n, n + 1) = -dn1;
            }
            break;
        }
        case OperatorKind::bilaplacian_delta: {
            auto tri = assemble_matrix(OperatorSpec::make_weighted(*spec.weight), size);
            for (long i = 0; i < size; ++i)
                for (long j = std::max<long>(0, i - 2); j <= std::min<long>(size - 1, i + 2); ++j) {
                    Real s = 0;
                    for (long k = std::max<long>(0, i - 1); k <= std::min<long>(size - 1, i + 1); ++k)
                        s += tri[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                             tri[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
                    at(i, j) = s;
                }
            break;
        }
    }
    return M;
}

FiniteSequence matrix_apply(const std::vector<std::vector<Real>>& M, const FiniteSequence& A) {
    long size = static_cast<long>(M.size());
    std::vector<Complex> out(static_cast<std::size_t>(size));
    for (long i = 0; i < size; ++i) {
        Complex acc{};
        for (long j = 0; j < size; ++j) {
            const Complex& a = A.at(j);
            if (a.is_zero()) continue;
            acc += a * M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
        out[static_cast<std::size_t>(i)] = acc;
    }
    return FiniteSequence::from_values(std::move(out));
}

}  // namespace ineq
