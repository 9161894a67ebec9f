#include "helpers.hpp"

#include "ineq/operators.hpp"
#include "ineq/weights.hpp"

using namespace ineq;
using test::check_close;
using test::seq_of;

namespace {

PrecisionContext ctx() { return PrecisionContext(256); }

FiniteSequence linear_ramp(long top) {
    std::vector<Complex> v;
    for (long n = 0; n <= top; ++n) v.emplace_back(Real(n));
    return FiniteSequence::from_values(std::move(v));
}

}  // namespace

TEST_CASE("dirichlet laplacian stencil") {
    FiniteSequence r = apply_dirichlet_laplacian(FiniteSequence::unit(2));
    CHECK(r.at(0).re == 0);
    CHECK(r.at(1).re == -1);
    CHECK(r.at(2).re == 2);
    CHECK(r.at(3).re == -1);
    CHECK(r.at(4).re == 0);

    FiniteSequence ramp = linear_ramp(6);
    FiniteSequence lr = apply_dirichlet_laplacian(ramp);
    for (long n = 1; n <= 5; ++n) CHECK(lr.at(n).re == 0);

    FiniteSequence r1 = apply_dirichlet_laplacian(FiniteSequence::unit(1));
    CHECK(r1.at(0).re == -1);
    CHECK(r1.at(1).re == 2);
    CHECK(r1.at(2).re == -1);
    CHECK(r1.at(3).re == 0);
}

TEST_CASE("laplacian powers and the explicit boundary rows") {
    FiniteSequence r = apply_laplacian_power(FiniteSequence::unit(3), 2);
    CHECK(r.at(1).re == 1);
    CHECK(r.at(2).re == -4);
    CHECK(r.at(3).re == 6);
    CHECK(r.at(4).re == -4);
    CHECK(r.at(5).re == 1);

    FiniteSequence a = random_sequence(11, 10, 0);
    FiniteSequence p1 = apply_laplacian_power(a, 1);
    FiniteSequence d1 = apply_dirichlet_laplacian(a);
    for (long n = 0; n <= d1.support_end() + 1; ++n) check_close(p1.at(n), d1.at(n));

    FiniteSequence p2 = apply_laplacian_power(a, 2);
    Complex row0 = a.at(0) * Real(5) - a.at(1) * Real(4) + a.at(2);
    Complex row1 = -a.at(0) * Real(4) + a.at(1) * Real(6) - a.at(2) * Real(4) + a.at(3);
    check_close(p2.at(0), row0);
    check_close(p2.at(1), row1);

    FiniteSequence ramp = linear_ramp(10);
    FiniteSequence b = apply_laplacian_power(ramp, 2);
    for (long n = 2; n <= 8; ++n) CHECK(abs(b.at(n)) <= test::tol());
}

TEST_CASE("generalized operator") {
    OperatorSpec flat = OperatorSpec::make_generalized(seq_ones(), Real(2));
    FiniteSequence a = random_sequence(5, 12, 0);
    FiniteSequence g = apply_generalized_laplacian(flat, a);
    FiniteSequence d = apply_dirichlet_laplacian(a);
    for (long n = 0; n <= d.support_end() + 1; ++n) check_close(g.at(n), d.at(n));

    OperatorSpec spec = OperatorSpec::make_generalized(seq_linear(), Real(2));
    FiniteSequence r = apply_generalized_laplacian(spec, FiniteSequence::unit(2));
    check_close(r.at(1).re, Real(-1) / 2);
    check_close(r.at(2).re, Real(1) / 2 + Real(1) / 3);
    check_close(r.at(3).re, Real(-1) / 3);

    CHECK(apply_generalized_laplacian(spec, FiniteSequence()).is_zero());
    CHECK_THROWS_AS(OperatorSpec::make_generalized(seq_linear(), Real(3)), ValidationError);
}

TEST_CASE("delta-weighted operator") {
    FiniteSequence a = random_sequence(6, 12, 0);
    FiniteSequence w = apply_weighted_laplacian_delta(seq_ones(), a);
    FiniteSequence d = apply_dirichlet_laplacian(a);
    for (long n = 0; n <= d.support_end() + 1; ++n) check_close(w.at(n), d.at(n));

    FiniteSequence r = apply_weighted_laplacian_delta(seq_shifted_ratio(), FiniteSequence::unit(2));
    check_close(r.at(1).re, Real(-4) / 3);
    check_close(r.at(2).re, Real(4) / 3 + Real(5) / 4);
    check_close(r.at(3).re, Real(-5) / 4);

    CHECK(apply_weighted_laplacian_delta(seq_shifted_ratio(), FiniteSequence()).is_zero());
}

TEST_CASE("bilaplacian specializes and composes") {
    FiniteSequence a = random_sequence(8, 12, 0);
    FiniteSequence b1 = apply_bilaplacian_delta(seq_ones(), a);
    FiniteSequence p2 = apply_laplacian_power(a, 2);
    for (long n = 0; n <= p2.support_end() + 1; ++n) check_close(b1.at(n), p2.at(n));

    for (std::uint64_t seed : {21ULL, 22ULL, 23ULL}) {
        FiniteSequence x = random_sequence(seed, 12, 0);
        PositiveSequence delta = seq_shifted_ratio();
        FiniteSequence once = apply_weighted_laplacian_delta(delta, x);
        FiniteSequence twice = apply_weighted_laplacian_delta(delta, once);
        FiniteSequence direct = apply_bilaplacian_delta(delta, x);
        for (long n = 0; n <= direct.support_end() + 1; ++n) check_close(direct.at(n), twice.at(n));
    }

    CHECK(apply_bilaplacian_delta(seq_shifted_ratio(), FiniteSequence()).is_zero());
}

TEST_CASE("backward differences") {
    FiniteSequence d1 = backward_difference(FiniteSequence::unit(2), 1);
    CHECK(d1.at(1).re == 0);
    CHECK(d1.at(2).re == 1);
    CHECK(d1.at(3).re == -1);
    CHECK(d1.at(4).re == 0);

    FiniteSequence d2 = backward_difference(FiniteSequence::unit(2), 2);
    CHECK(d2.at(2).re == 1);
    CHECK(d2.at(3).re == -2);
    CHECK(d2.at(4).re == 1);

    FiniteSequence d3 = backward_difference(FiniteSequence::unit(3), 3);
    CHECK(d3.at(3).re == 1);
    CHECK(d3.at(4).re == -3);
    CHECK(d3.at(5).re == 3);
    CHECK(d3.at(6).re == -1);

    // index 0 is excluded by the zero-extension convention
    FiniteSequence with_head = backward_difference(test::seq_of({5, 1}), 1);
    CHECK(with_head.at(1).re == 1);

    CHECK_THROWS_AS(backward_difference(FiniteSequence::unit(1), 0), InvalidOrderError);
}

TEST_CASE("quadratic forms") {
    PrecisionContext pc = ctx();
    CHECK(quadratic_form(OperatorSpec::make_dirichlet(), FiniteSequence::unit(2), 1, pc) == 2);

    Real diag = quadratic_form(OperatorSpec::make_bilaplacian(seq_ones()), FiniteSequence::unit(3), 2, pc);
    check_close(diag, Real(6));

    FiniteSequence plateau = seq_of({0, 1, 1});
    Real form = quadratic_form(OperatorSpec::make_dirichlet(), plateau, 1, pc);
    check_close(form, Real(2));
    check_close(form, hardy_energy(plateau, seq_ones(), Real(2)));

    auto shift = [](const FiniteSequence& A) {
        std::vector<Complex> v;
        for (long n = 0; n <= A.support_end() + 2; ++n) v.push_back(A.at(n + 1));
        return FiniteSequence::from_values(std::move(v));
    };
    std::vector<Complex> z(4);
    z[2] = Complex(Real(1));
    z[3] = Complex(Real(0), Real(1));
    FiniteSequence zc = FiniteSequence::from_values(std::move(z));
    CHECK_THROWS_AS(quadratic_form(shift, zc, 0, pc), NonHermitianError);
}

TEST_CASE("operator symmetry") {
    PrecisionContext pc = ctx();
    std::vector<OperatorSpec> specs;
    specs.push_back(OperatorSpec::make_dirichlet());
    specs.push_back(OperatorSpec::make_generalized(seq_linear(), Real(3) / 2));
    specs.push_back(OperatorSpec::make_weighted(seq_shifted_ratio()));
    specs.push_back(OperatorSpec::make_bilaplacian(seq_shifted_ratio()));
    for (const auto& spec : specs) {
        FiniteSequence A = random_sequence(31, 16, 0);
        FiniteSequence B = random_sequence(32, 16, 0);
        auto inner = [](const FiniteSequence& X, const FiniteSequence& Y) {
            Complex acc{};
            for (long n = 0; n <= std::max(X.support_end(), Y.support_end()); ++n)
                acc += X.at(n) * conj(Y.at(n));
            return acc;
        };
        Complex lhs = inner(apply_operator(spec, A), B);
        Complex rhs = inner(A, apply_operator(spec, B));
        check_close(lhs, rhs);
    }
    (void)pc;
}

TEST_CASE("energies") {
    check_close(hardy_energy(FiniteSequence::unit(1), seq_ones(), Real(2)), Real(2));

    Real v = hardy_energy(FiniteSequence::unit(1), seq_copson_tilde_lambda(), Real(2));
    check_close(v, 1 + sqrt(Real(5)) / 4);

    CHECK(hardy_energy(FiniteSequence(), seq_ones(), Real(2)) == 0);
    CHECK_THROWS_AS(hardy_energy(test::seq_of({1}), seq_ones(), Real(2)), PreconditionError);

    check_close(rellich_energy(seq_ones(), FiniteSequence::unit(2)), Real(6));
    CHECK(rellich_energy(seq_ones(), FiniteSequence()) == 0);
    CHECK_THROWS_AS(rellich_energy(seq_ones(), test::seq_of({0, 1})), PreconditionError);

    PrecisionContext pc = ctx();
    for (std::uint64_t seed : {41ULL, 42ULL}) {
        FiniteSequence A = random_sequence(seed, 14, 2);
        PositiveSequence delta = seq_shifted_ratio();
        check_close(quadratic_form(OperatorSpec::make_bilaplacian(delta), A, 2, pc),
                    rellich_energy(delta, A), Real("1e-70"));
        FiniteSequence H = random_sequence(seed + 10, 14, 1);
        check_close(quadratic_form(OperatorSpec::make_dirichlet(), H, 1, pc),
                    hardy_energy(H, seq_ones(), Real(2)), Real("1e-70"));
    }
}

TEST_CASE("assembled matrices are symmetric") {
    std::vector<OperatorSpec> specs;
    specs.push_back(OperatorSpec::make_dirichlet());
    specs.push_back(OperatorSpec::make_generalized(seq_linear(), Real(3) / 2));
    specs.push_back(OperatorSpec::make_weighted(seq_shifted_ratio()));
    specs.push_back(OperatorSpec::make_bilaplacian(seq_shifted_ratio()));
    for (const auto& spec : specs) {
        auto M = assemble_matrix(spec, 10);
        for (std::size_t i = 0; i < M.size(); ++i)
            for (std::size_t j = 0; j < i; ++j) check_close(M[i][j], M[j][i], Real("1e-70"));
    }
}

TEST_CASE("matrix oracle equivalence") {
    std::vector<OperatorSpec> specs;
    specs.push_back(OperatorSpec::make_dirichlet());
    specs.push_back(OperatorSpec::make_generalized(seq_linear(), Real(3) / 2));
    specs.push_back(OperatorSpec::make_generalized(seq_copson_tilde_lambda(), Real(2)));
    specs.push_back(OperatorSpec::make_weighted(seq_shifted_ratio()));
    specs.push_back(OperatorSpec::make_bilaplacian(seq_shifted_ratio()));
    for (const auto& spec : specs) {
        for (std::uint64_t seed : {51ULL, 52ULL}) {
            FiniteSequence A = random_sequence(seed, 16, 0);
            auto M = assemble_matrix(spec, 20);
            FiniteSequence via_matrix = matrix_apply(M, A);
            FiniteSequence direct = apply_operator(spec, A);
            for (long n = 0; n <= 17; ++n) check_close(direct.at(n), via_matrix.at(n), Real("1e-70"));
        }
    }
}
