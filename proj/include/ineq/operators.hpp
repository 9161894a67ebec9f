#pragma once

#include "ineq/sequences.hpp"

#include <functional>
#include <vector>

namespace ineq {

enum class OperatorKind {
    dirichlet,           // diagonal 2, off-diagonals -1
    generalized_lambda_c,  // tridiagonal with Lambda^(2-c)/lambda ratios
    weighted_delta,      // tridiagonal with delta weights
    bilaplacian_delta,   // five-diagonal square of weighted_delta
};

/// Parameters defining one of the difference operators. `weight` is the
/// lambda (generalized) or delta (weighted / bilaplacian) sequence and is
/// ignored for the plain Dirichlet kind. `c` applies to the generalized
/// kind only and must lie in (1, 2].
struct OperatorSpec {
    OperatorKind kind = OperatorKind::dirichlet;
    std::optional<PositiveSequence> weight;
    Real c = 2;

    static OperatorSpec make_dirichlet();
    static OperatorSpec make_generalized(PositiveSequence lambda, Real c);
    static OperatorSpec make_weighted(PositiveSequence delta);
    static OperatorSpec make_bilaplacian(PositiveSequence delta);
};

/// row 0: 2A_0 - A_1;  row n: 2A_n - A_{n-1} - A_{n+1}.
FiniteSequence apply_dirichlet_laplacian(const FiniteSequence& A);

/// alpha-fold composition of apply_dirichlet_laplacian.
FiniteSequence apply_laplacian_power(const FiniteSequence& A, unsigned alpha);

/// The lambda,c-weighted tridiagonal operator. Row 0 uses the boundary
/// value Lambda_0 = lambda_0.
FiniteSequence apply_generalized_laplacian(const OperatorSpec& spec, const FiniteSequence& A);

/// row 0: (d_0 + d_1)A_0 - d_1 A_1;
/// row n: (d_n + d_{n+1})A_n - d_n A_{n-1} - d_{n+1} A_{n+1}.
FiniteSequence apply_weighted_laplacian_delta(const PositiveSequence& delta, const FiniteSequence& A);

/// Square of the delta-weighted operator (five-diagonal), rows written
/// out so the boundary rows match the operator composition exactly.
FiniteSequence apply_bilaplacian_delta(const PositiveSequence& delta, const FiniteSequence& A);

/// Order-alpha backward difference: alternating binomial sum with zero
/// extension at index <= 0.
FiniteSequence backward_difference(const FiniteSequence& A, unsigned alpha);

/// Generic application through a spec.
FiniteSequence apply_operator(const OperatorSpec& spec, const FiniteSequence& A);

/// sum_{n >= n_start} (op A)_n conj(A_n). The result must be real for the
/// self-adjoint operators here; an imaginary residue beyond tolerance
/// signals an operator bug and throws NonHermitianError.
Real quadratic_form(const std::function<FiniteSequence(const FiniteSequence&)>& op_apply,
                    const FiniteSequence& A, long n_start, const PrecisionContext& ctx);

Real quadratic_form(const OperatorSpec& spec, const FiniteSequence& A, long n_start,
                    const PrecisionContext& ctx);

/// sum_{n>=1} |A_{n-1} - A_n|^2 Lambda_n^(2-c) / lambda_n  (A_0 = 0).
Real hardy_energy(const FiniteSequence& A, const PositiveSequence& lambda, const Real& c);

/// sum_{n>=1} |(delta-weighted Laplacian A)_n|^2  (A_0 = A_1 = 0).
Real rellich_energy(const PositiveSequence& delta, const FiniteSequence& A);

/// Dense truncation of the operator's matrix, assembled from the entry
/// formulas (independent of the apply_* routines). The bilaplacian
/// truncation is the square of the tridiagonal truncation, which is exact
/// on entries away from the cut.
std::vector<std::vector<Real>> assemble_matrix(const OperatorSpec& spec, long size);

/// Dense matrix-vector product against the stored entries of A.
FiniteSequence matrix_apply(const std::vector<std::vector<Real>>& M, const FiniteSequence& A);

}  // namespace ineq
