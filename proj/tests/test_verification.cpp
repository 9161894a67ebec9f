#include "helpers.hpp"

#include "ineq/operators.hpp"
#include "ineq/verification.hpp"

using namespace ineq;
using test::check_close;

namespace {
PrecisionContext ctx() { return PrecisionContext(256); }
}

TEST_CASE("first-order identity checks") {
    PrecisionContext pc = ctx();

    VerificationReport zero =
        verify_hardy_identity(seq_ones(), Real(2), seq_power(Real(1) / 2), FiniteSequence(), pc);
    CHECK(zero.pass);
    CHECK(zero.max_residual == 0);

    // unit-vector decomposition: energy 2 splits into weight + remainder parts
    FiniteSequence e1 = FiniteSequence::unit(1);
    PositiveSequence root = seq_power(Real(1) / 2);
    CHECK(hardy_energy(e1, seq_ones(), Real(2)) == 2);
    check_close(eta_weight(seq_ones(), Real(2), root, 1), 2 - sqrt(Real(2)));
    Remainder1Spec spec(seq_ones(), Real(2), root);
    FiniteSequence R = remainder1_apply(spec, e1);
    check_close(weighted_norm_sq(R, [](long) { return Real(1); }, 1), sqrt(Real(2)));
    VerificationReport unit = verify_hardy_identity(seq_ones(), Real(2), root, e1, pc);
    CHECK(unit.pass);

    for (std::uint64_t seed : {101ULL, 102ULL}) {
        FiniteSequence A = random_sequence(seed, 15, 1);
        VerificationReport r = verify_hardy_identity(seq_copson_tilde_lambda(), Real(2),
                                                     seq_power(Real(3) / 4), A, pc);
        CHECK(r.pass);
        CHECK(r.max_residual <= Real("1e-25"));
    }
}

TEST_CASE("improved copson identities, three routes") {
    PrecisionContext pc = ctx();
    for (std::uint64_t seed : {111ULL, 112ULL, 113ULL}) {
        FiniteSequence A = random_sequence(seed, 20, 1);
        VerificationReport tilde = verify_copson_identity(CopsonVariant::tilde, A, pc);
        CHECK(tilde.pass);
        CHECK(tilde.max_residual <= Real("1e-25"));
        VerificationReport hat = verify_copson_identity(CopsonVariant::hat, A, pc);
        CHECK(hat.pass);
        CHECK(hat.max_residual <= Real("1e-25"));
    }
}

TEST_CASE("second-order identity checks") {
    PrecisionContext pc = ctx();

    VerificationReport zero = verify_rellich_identity(seq_shifted_ratio(), seq_power(Real(3) / 2),
                                                      FiniteSequence(), pc);
    CHECK(zero.pass);

    for (std::uint64_t seed : {121ULL, 122ULL}) {
        FiniteSequence A = random_sequence(seed, 15, 2);
        VerificationReport r =
            verify_rellich_identity(seq_shifted_ratio(), seq_power(Real(3) / 2), A, pc);
        CHECK(r.pass);
        CHECK(r.max_residual <= Real("1e-25"));
    }

    std::vector<Complex> v(4);
    v[2] = Complex(Real(1));
    v[3] = Complex(Real(2));
    FiniteSequence combo = FiniteSequence::from_values(std::move(v));
    VerificationReport r = verify_rellich_identity(seq_ones(), seq_power(Real(3) / 2), combo, pc);
    CHECK(r.pass);

    // the recurrence for a geometrically decaying mu fails a few steps in, so
    // a sequence supported past that point propagates the breakdown
    PositiveSequence mu_decay("2^-n", Real(1), [](long n) { return pow(Real(2), -n); });
    VerificationReport broken =
        verify_rellich_identity(seq_ones(), mu_decay, random_sequence(9, 10, 2), pc);
    CHECK(!broken.pass);
    CHECK(broken.flag.has_value());

    CHECK_THROWS_AS(
        verify_rellich_identity(seq_ones(), seq_linear(), test::seq_of({0, 1, 1}), pc),
        PreconditionError);
}

TEST_CASE("power-weighted improvement scan") {
    PrecisionContext pc = ctx();
    WeightFamily w = make_weight_family("gupta", {{"alpha", std::string("0.3333333333333333333333333333333333")}});
    WeightFamily b = make_weight_family("gupta-bound", {{"alpha", std::string("0.3333333333333333333333333333333333")}});
    VerificationReport r = pointwise_scan(w, b, 1, 10000, pc);
    CHECK(r.pass);
    REQUIRE(r.min_gap.has_value());
    CHECK(*r.min_gap > 0);
}

TEST_CASE("remainder nonnegativity yields the inequalities on tested data") {
    // the quadratic remainder term is a sum of squares, so the energy
    // dominates the weighted sum on every sequence we test
    for (std::uint64_t seed : {301ULL, 302ULL, 303ULL, 304ULL}) {
        FiniteSequence A = random_sequence(seed, 18, 1);
        PositiveSequence lambda = seq_copson_tilde_lambda();
        PositiveSequence mu = seq_power(Real(3) / 4);
        Real energy = hardy_energy(A, lambda, Real(2));
        Real weighted = weighted_norm_sq(A, [](long n) { return copson_tilde_weight(n); }, 1);
        CHECK(energy >= weighted);

        FiniteSequence B = random_sequence(seed ^ 0x77ULL, 18, 2);
        PositiveSequence delta = seq_shifted_ratio();
        PositiveSequence mu32 = seq_power(Real(3) / 2);
        Real renergy = rellich_energy(delta, B);
        Real rweighted = weighted_norm_sq(B, [&](long n) { return sigma2_weight(delta, mu32, n); }, 2);
        CHECK(renergy >= rweighted);
    }
}

TEST_CASE("pointwise scans") {
    PrecisionContext pc = ctx();
    WeightFamily w = make_weight_family("hardy-classical", {});
    WeightFamily bound = make_weight_family("hardy-classical-bound", {});

    VerificationReport fwd = pointwise_scan(w, bound, 1, 10000, pc);
    CHECK(fwd.pass);
    REQUIRE(fwd.min_gap.has_value());
    CHECK(*fwd.min_gap > 0);

    VerificationReport rev = pointwise_scan(bound, w, 1, 100, pc);
    CHECK(!rev.pass);
    REQUIRE(!rev.witnesses.empty());
    CHECK(rev.witnesses[0].index == 1);

    VerificationReport threaded = pointwise_scan(w, bound, 1, 10000, pc, 2);
    CHECK(threaded.pass);
    CHECK(threaded.min_gap_index == fwd.min_gap_index);
    CHECK(*threaded.min_gap == *fwd.min_gap);
}

TEST_CASE("scan escalation on near ties") {
    PrecisionContext pc = ctx();
    WeightFamily a{"one-plus-tiny", 1, [](long n) { return 1 + ldexp(Real(n), -200); }, nullptr, {}};
    WeightFamily b{"one", 1, [](long) { return Real(1); }, nullptr, {}};
    VerificationReport r = pointwise_scan(a, b, 1, 50, pc);
    CHECK(r.pass);
    REQUIRE(r.min_gap.has_value());
    CHECK(*r.min_gap == ldexp(Real(1), -200));
    CHECK(r.min_gap_index == 1);

    VerificationReport rev = pointwise_scan(b, a, 1, 50, pc);
    CHECK(!rev.pass);
}

TEST_CASE("comparison lemma closed forms") {
    PrecisionContext pc = ctx();
    auto reports = lemma_suite(2, 500, pc);
    CHECK(reports.size() == 8);
    for (const auto& r : reports) {
        CAPTURE(r.name);
        CHECK(r.pass);
        REQUIRE(r.min_gap.has_value());
        CHECK(*r.min_gap > 0);
    }

    // G - (36/16) n^(5/4) carries the positive factor H
    for (long n : {2L, 5L, 50L}) {
        Real lhs = lemma_G(n) - Real(36) / 16 * pow(Real(n), Real(5) / 4);
        Real rhs = Real(3) / (32 * pow(Real(n), Real(5) / 4)) * lemma_H(n);
        check_close(lhs, rhs);
    }

    for (long n : {2L, 3L, 10L}) {
        check_close(lemma_S(n), lemma_U(n) - ratio_pow_3_2(Real(n + 3), Real(n + 1)));
        CHECK(lemma_h(n) > 0);
    }
}

TEST_CASE("criticality sequences and decay") {
    PrecisionContext pc = ctx();

    CriticalitySequence tilde = make_criticality_sequence(CriticalityVariant::tilde, 4);
    for (long n = 1; n < 4; ++n) check_close(tilde.realized.at(n).re, pow(Real(n), Real(3) / 4));
    CHECK(tilde.realized.at(17).is_zero());
    Real den = 4 * pow(sum_of_squares(16), Real(1) / 4) * sqrt(Real(16));
    check_close(tilde.realized.at(16).re, pow(Real(16), Real(3) / 4) * (den - 16) / den);

    CriticalitySequence hat = make_criticality_sequence(CriticalityVariant::hat, 4);
    for (long n = 1; n < 4; ++n) CHECK(hat.realized.at(n).re == n);
    for (long n = 4; n <= 16; ++n) check_close(hat.realized.at(n).re, Real(n) - Real(1) / 4);
    CHECK(hat.realized.at(17).is_zero());

    // the reduced summand agrees with the remainder row on the realized
    // sequence in the interior of the modulated window
    {
        long N = 5;
        CriticalitySequence cs = make_criticality_sequence(CriticalityVariant::hat, N);
        for (long n = N + 1; n <= N * N - 1; ++n) {
            Real r = Real(n) / (n + 1);
            Complex diff = cs.realized.at(n + 1) * sqrt(r) - cs.realized.at(n) * sqrt(1 / r);
            Real row = norm_sq(diff) * sqrt(sum_of_cubes(n + 1)) / (Real(n + 1) * (n + 1) * (n + 1));
            Real d = 1 / (Real(N) * n * (n + 1));
            Real summand = Real(n) * (n + 1) * d * d * sqrt(sum_of_cubes(n + 1)) /
                           (Real(n + 1) * (n + 1) * (n + 1));
            check_close(row, summand, Real("1e-50"));
        }
    }

    auto rows = criticality_rows(CriticalityVariant::tilde, {10});
    Real expected_bound = log(Real(10)) / 100 + Real(1) / 20 - Real(1) / 200;
    check_close(rows[0].bound, expected_bound);
    CHECK(rows[0].remainder_sum <= rows[0].bound);
    CHECK(static_cast<double>(expected_bound) == doctest::Approx(0.068026).epsilon(1e-4));

    auto hat_rows = criticality_rows(CriticalityVariant::hat, {10});
    check_close(hat_rows[0].bound, log(Real(10)) / 100);
    CHECK(hat_rows[0].remainder_sum < hat_rows[0].bound);

    for (auto variant : {CriticalityVariant::tilde, CriticalityVariant::hat}) {
        VerificationReport r = criticality_decay(variant, {4, 8, 16, 32, 64}, pc);
        CHECK(r.pass);
        auto seq_rows = criticality_rows(variant, {4, 8, 16, 32, 64});
        for (std::size_t i = 1; i < seq_rows.size(); ++i)
            CHECK(seq_rows[i].remainder_sum < seq_rows[i - 1].remainder_sum);
    }
}

TEST_CASE("difference-energy identity") {
    PrecisionContext pc = ctx();

    FiniteSequence e2 = FiniteSequence::unit(2);
    FiniteSequence d = backward_difference(e2, 2);
    check_close(test::naive_norm_sq(d, 2), Real(6));
    VerificationReport r2 = knopp_rellich_identity(2, e2, pc);
    CHECK(r2.pass);

    for (std::uint64_t seed : {131ULL, 132ULL}) {
        FiniteSequence A = random_sequence(seed, 20, 1);
        FiniteSequence d1 = backward_difference(A, 1);
        Real direct = 0;
        for (long n = 1; n <= A.support_end() + 1; ++n) direct += norm_sq(A.at(n) - A.at(n - 1));
        check_close(test::naive_norm_sq(d1, 1), direct);
    }

    for (unsigned alpha = 1; alpha <= 5; ++alpha) {
        for (std::uint64_t seed : {141ULL, 142ULL}) {
            FiniteSequence A = random_sequence(seed + alpha, 30, static_cast<long>(alpha));
            VerificationReport r = knopp_rellich_identity(alpha, A, pc);
            CHECK(r.pass);
            CHECK(r.max_residual <= Real("1e-25"));
        }
    }

    CHECK_THROWS_AS(knopp_rellich_identity(2, FiniteSequence::unit(1), pc), PreconditionError);
}

TEST_CASE("difference energies reduce to half-order operator energies") {
    for (unsigned alpha = 2; alpha <= 5; ++alpha) {
        FiniteSequence A = random_sequence(150 + alpha, 24, static_cast<long>(alpha));
        FiniteSequence d = backward_difference(A, alpha);
        Real lhs = test::naive_norm_sq(d, static_cast<long>(alpha));
        Real rhs;
        if (alpha % 2 == 0) {
            FiniteSequence L = apply_laplacian_power(A, alpha / 2);
            rhs = test::naive_norm_sq(L, static_cast<long>(alpha / 2));
        } else {
            FiniteSequence L = apply_laplacian_power(A, (alpha - 1) / 2);
            FiniteSequence dL = backward_difference(L, 1);
            rhs = test::naive_norm_sq(dL, static_cast<long>((alpha + 1) / 2));
        }
        check_close(lhs, rhs, Real("1e-60"));
    }
}

TEST_CASE("improvement chain") {
    PrecisionContext pc = ctx();

    // order 2 on the transformed unit sequence, truncated with boundary zeros
    std::vector<Complex> v(31);
    for (long n = 2; n <= 30; ++n) v[static_cast<std::size_t>(n)] = Complex(Real(n));
    FiniteSequence A = FiniteSequence::from_values(std::move(v));
    KnoppChainSums sums;
    VerificationReport chain2 = knopp_improvement_chain(2, A, pc, &sums);
    CHECK(chain2.pass);
    CHECK(sums.energy >= sums.improved);
    CHECK(sums.improved > sums.classical);
    CHECK(sums.classical >= sums.knopp_weighted);
    REQUIRE(sums.knopp_weighted_mean_form.has_value());
    check_close(sums.knopp_weighted, *sums.knopp_weighted_mean_form);

    // order 1 collapses to the first-order improvement, with the final two
    // sums coinciding
    FiniteSequence H = random_sequence(161, 20, 1);
    KnoppChainSums sums1;
    VerificationReport chain1 = knopp_improvement_chain(1, H, pc, &sums1);
    CHECK(chain1.pass);
    CHECK(!chain1.flag.has_value());
    check_close(sums1.classical, sums1.knopp_weighted);

    FiniteSequence C = random_sequence(171, 20, 3);
    VerificationReport chain3 = knopp_improvement_chain(3, C, pc);
    CHECK(chain3.pass);
    REQUIRE(chain3.flag.has_value());
    CHECK(chain3.flag->find("conjecture") != std::string::npos);

    VerificationReport trivial = knopp_improvement_chain(2, FiniteSequence(), pc);
    CHECK(trivial.pass);
}
