#include "ineq/verification.hpp"

#include <algorithm>
#include <thread>

namespace ineq {

namespace {

Real relative_residual(const Real& lhs, const Real& rhs) {
    Real diff = abs(lhs - rhs);
    Real scale = abs(lhs);
    return scale == 0 ? diff : Real(diff / scale);
}

VerificationReport make_identity_report(std::string name, std::string range, Real residual,
                                        const PrecisionContext& ctx) {
    VerificationReport report;
    report.name = std::move(name);
    report.range = std::move(range);
    report.max_residual = residual;
    report.pass = residual <= ctx.tolerance_rel;
    report.precision_bits = ctx.mantissa_bits;
    return report;
}

}  // namespace

VerificationReport verify_hardy_identity(const PositiveSequence& lambda, const Real& c,
                                         const PositiveSequence& mu, const FiniteSequence& A,
                                         const PrecisionContext& ctx) {
    PrecisionScope scope(ctx);
    if (!A.at(0).is_zero()) throw PreconditionError("identity requires A(0) = 0");
    long s = A.support_end();

    Real lhs = hardy_energy(A, lambda, c);

    PositiveSequence Lam = partial_sums(lambda, std::max<long>(s + 1, 1));
    CompensatedSum weighted;
    for (long n = 1; n <= s; ++n) {
        const Complex& v = A.at(n);
        if (!v.is_zero()) weighted.add(eta_weight(lambda, Lam, c, mu, n) * norm_sq(v));
    }
    Remainder1Spec rspec(lambda, c, mu);
    FiniteSequence RA = remainder1_apply(rspec, A);
    CompensatedSum remainder;
    for (long n = 1; n <= RA.support_end(); ++n) {
        const Complex& v = RA.at(n);
        if (!v.is_zero()) remainder.add(norm_sq(v));
    }
    Real rhs = weighted.value() + remainder.value();

    auto report = make_identity_report(
        "hardy-identity(" + lambda.name() + ", c=" + c.str(4) + ", " + mu.name() + ")",
        "support <= " + std::to_string(s), relative_residual(lhs, rhs), ctx);
    if (!report.pass) report.witnesses.push_back({0, lhs, rhs});
    return report;
}

VerificationReport verify_copson_identity(CopsonVariant variant, const FiniteSequence& A,
                                          const PrecisionContext& ctx) {
    PrecisionScope scope(ctx);
    if (!A.at(0).is_zero()) throw PreconditionError("identity requires A(0) = 0");
    long s = A.support_end();
    const bool tilde = (variant == CopsonVariant::tilde);

    PositiveSequence lambda = tilde ? seq_copson_tilde_lambda() : seq_copson_hat_lambda();
    PositiveSequence mu = tilde ? seq_power(Real(3) / 4) : seq_linear();

    // Route 1: generic weight + bidiagonal remainder.
    VerificationReport generic = verify_hardy_identity(lambda, Real(2), mu, A, ctx);

    // Route 2: closed-form weight plus the explicit remainder rows.
    Real lhs = hardy_energy(A, lambda, Real(2));
    CompensatedSum weighted, remainder;
    for (long n = 1; n <= s; ++n) {
        const Complex& v = A.at(n);
        if (!v.is_zero())
            weighted.add((tilde ? copson_tilde_weight(n) : copson_hat_weight(n)) * norm_sq(v));
    }
    for (long n = 1; n <= s; ++n) {
        Complex diff;
        Real row_weight;
        if (tilde) {
            Real r = Real(n) / (n + 1);
            Real e = Real(3) / 8;
            diff = A.at(n + 1) * pow(r, e) - A.at(n) * pow(1 / r, e);
            row_weight = sqrt(sum_of_squares(n + 1)) / (Real(n + 1) * (n + 1));
        } else {
            Real r = Real(n) / (n + 1);
            diff = A.at(n + 1) * sqrt(r) - A.at(n) * sqrt(1 / r);
            row_weight = sqrt(sum_of_cubes(n + 1)) / (Real(n + 1) * (n + 1) * (n + 1));
        }
        if (!diff.is_zero()) remainder.add(norm_sq(diff) * row_weight);
    }
    Real rhs = weighted.value() + remainder.value();
    Real residual = max(generic.max_residual, relative_residual(lhs, rhs));

    auto report = make_identity_report(
        std::string("copson-identity(") + (tilde ? "tilde" : "hat") + ")",
        "support <= " + std::to_string(s), residual, ctx);
    if (!report.pass) report.witnesses.push_back({0, lhs, rhs});
    return report;
}

VerificationReport verify_rellich_identity(const PositiveSequence& delta, const PositiveSequence& mu,
                                           const FiniteSequence& A, const PrecisionContext& ctx) {
    PrecisionScope scope(ctx);
    if (!A.at(0).is_zero() || !A.at(1).is_zero())
        throw PreconditionError("identity requires A(0) = A(1) = 0");
    long s = A.support_end();

    VerificationReport report;
    report.name = "rellich-identity(" + delta.name() + ", " + mu.name() + ")";
    report.range = "support <= " + std::to_string(s);
    report.precision_bits = ctx.mantissa_bits;

    GammaBuildResult built = remainder2_coefficients(delta, mu, std::max<long>(s, 1));
    if (!built.ok()) {
        report.pass = false;
        report.flag = "factorization breakdown at n = " + std::to_string(*built.breakdown);
        report.witnesses.push_back({*built.breakdown, Real(0), Real(0)});
        return report;
    }

    Real lhs = rellich_energy(delta, A);
    CompensatedSum weighted;
    for (long n = 2; n <= s; ++n) {
        const Complex& v = A.at(n);
        if (!v.is_zero()) weighted.add(sigma2_weight(delta, mu, n) * norm_sq(v));
    }
    FiniteSequence RA = remainder2_apply(delta, built.coeffs, A);
    CompensatedSum remainder;
    for (long n = 1; n <= RA.support_end(); ++n) {
        const Complex& v = RA.at(n);
        if (!v.is_zero()) remainder.add(norm_sq(v));
    }
    Real rhs = weighted.value() + remainder.value();
    Real residual = relative_residual(lhs, rhs);
    report.max_residual = residual;
    report.pass = residual <= ctx.tolerance_rel;
    if (!report.pass) report.witnesses.push_back({0, lhs, rhs});
    return report;
}

namespace {

struct ScanBlock {
    std::optional<Real> min_gap;
    long min_gap_index = 0;
    std::vector<Witness> failures;
    std::vector<long> reevaluate;
};

void scan_block(const WeightFamily& a, const WeightFamily& b, long lo, long hi, bool strict,
                unsigned bits, ScanBlock& out) {
    for (long n = lo; n <= hi; ++n) {
        Real va = a.eval(n);
        Real vb = b.eval(n);
        Real gap = va - vb;
        if (abs(gap) < ldexp(abs(va), -static_cast<long>(bits / 2))) {
            out.reevaluate.push_back(n);
            continue;
        }
        if (!out.min_gap || gap < *out.min_gap) {
            out.min_gap = gap;
            out.min_gap_index = n;
        }
        bool ok = strict ? gap > 0 : gap >= 0;
        if (!ok) out.failures.push_back({n, va, vb});
    }
}

}  // namespace

VerificationReport pointwise_scan(const WeightFamily& a, const WeightFamily& b, long n_min,
                                  long n_max, const PrecisionContext& ctx, unsigned threads,
                                  bool strict) {
    PrecisionScope scope(ctx);
    long lo = std::max({n_min, a.n_min, b.n_min});

    VerificationReport report;
    report.name = "scan(" + a.name + (strict ? " > " : " >= ") + b.name + ")";
    report.range = "[" + std::to_string(lo) + ", " + std::to_string(n_max) + "]";
    report.precision_bits = ctx.mantissa_bits;
    if (a.flag) report.flag = a.flag;
    if (!a.flag && b.flag) report.flag = b.flag;
    if (lo > n_max) {
        report.pass = true;
        return report;
    }

    unsigned workers = threads ? threads : std::thread::hardware_concurrency();
    workers = std::clamp<unsigned>(workers, 1, 8);
    long span = n_max - lo + 1;
    workers = static_cast<unsigned>(std::min<long>(workers, span));

    std::vector<ScanBlock> blocks(workers);
    std::vector<std::thread> pool;
    long chunk = span / workers, extra = span % workers;
    long start = lo;
    for (unsigned w = 0; w < workers; ++w) {
        long len = chunk + (w < static_cast<unsigned>(extra) ? 1 : 0);
        long end = start + len - 1;
        if (workers == 1)
            scan_block(a, b, start, end, strict, ctx.mantissa_bits, blocks[w]);
        else
            pool.emplace_back(scan_block, std::cref(a), std::cref(b), start, end, strict,
                              ctx.mantissa_bits, std::ref(blocks[w]));
        start = end + 1;
    }
    for (auto& t : pool) t.join();

    std::vector<long> reevaluate;
    for (const auto& blk : blocks) {
        if (blk.min_gap && (!report.min_gap || *blk.min_gap < *report.min_gap)) {
            report.min_gap = blk.min_gap;
            report.min_gap_index = blk.min_gap_index;
        }
        report.witnesses.insert(report.witnesses.end(), blk.failures.begin(), blk.failures.end());
        reevaluate.insert(reevaluate.end(), blk.reevaluate.begin(), blk.reevaluate.end());
    }

    // Near-ties are decided at doubled mantissa width; evaluators rebuild
    // their values from exact data inside the escalated scope.
    if (!reevaluate.empty()) {
        PrecisionScope escalated(ctx.mantissa_bits * 2);
        for (long n : reevaluate) {
            Real va = a.eval(n);
            Real vb = b.eval(n);
            Real gap = va - vb;
            if (!report.min_gap || gap < *report.min_gap) {
                report.min_gap = gap;
                report.min_gap_index = n;
            }
            bool ok = strict ? gap > 0 : gap >= 0;
            if (!ok) report.witnesses.push_back({n, va, vb});
        }
    }

    std::sort(report.witnesses.begin(), report.witnesses.end(),
              [](const Witness& x, const Witness& y) { return x.index < y.index; });
    report.pass = report.witnesses.empty();
    report.max_residual = report.min_gap ? max(Real(0), -*report.min_gap) : Real(0);
    return report;
}

Real lemma_F(long n) {
    Real nn(n);
    Real n34 = pow(nn, Real(3) / 4);
    Real a = sqrt(nn) * (2 * nn + 3) * (2 * nn + 3) * (n34 - pow(nn - 1, Real(3) / 4));
    Real b = ratio_pow_3_2(2 * nn + 1, Real(1)) * sqrt((nn + 2) * (2 * nn + 3)) *
             (n34 - pow(nn + 1, Real(3) / 4));
    return a + b;
}

Real lemma_G(long n) {
    Real nn(n);
    Real q = pow(nn, Real(1) / 4);
    Real n14 = 3 / (4 * q);
    Real n54 = 3 / (32 * q * nn);
    Real a = sqrt(nn) * (2 * nn + 3) * (2 * nn + 3) * (n14 + n54);
    Real b = ratio_pow_3_2(2 * nn + 1, Real(1)) * sqrt((nn + 2) * (2 * nn + 3)) * (n54 - n14);
    return a + b;
}

Real lemma_H(long n) {
    Real nn(n);
    Real a = sqrt(nn) * (32 * nn * nn * nn + 76 * nn * nn + 84 * nn + 9);
    Real b = (2 * nn + 1) * (8 * nn - 1) * sqrt((nn + 2) * (2 * nn + 1) * (2 * nn + 3));
    return a - b;
}

Real lemma_T(long n) {
    Real nn(n);
    Real r1 = 2 * (nn + 3) * (nn + 3) / ((nn + 2) * (nn + 4));
    Real r2 = (nn + 3) * (nn + 2) / ((nn + 4) * (nn + 1));
    return 1 + r1 + r2 - 2 * r2 * ratio_pow_3_2(nn - 1, nn) - 2 * ratio_pow_3_2(nn + 2, nn + 1);
}

Real lemma_U(long n) {
    Real nn(n);
    Real r1 = 2 * (nn + 3) * (nn + 3) / ((nn + 2) * (nn + 4));
    Real r2 = (nn + 3) * (nn + 2) / ((nn + 4) * (nn + 1));
    Real down = ratio_pow_3_2(nn - 1, nn);
    return 1 + r1 + r2 - r2 * down * ratio_pow_3_2(nn + 1, nn + 2) - r2 * down -
           ratio_pow_3_2(nn + 2, nn + 1);
}

Real lemma_S(long n) { return lemma_U(n) - ratio_pow_3_2(Real(n + 3), Real(n + 1)); }

Real lemma_f(long n) {
    Real nn(n);
    Real n2 = nn * nn, n3 = n2 * nn, n4 = n3 * nn, n5 = n4 * nn;
    Real t1 = sqrt(nn * (nn + 1) * (nn + 2)) * (4 * n4 + 28 * n3 + 60 * n2 + 38 * nn);
    Real t2 = sqrt(nn * (nn + 2) * (nn + 3)) * (n4 + 9 * n3 + 26 * n2 + 24 * nn);
    Real t3 = sqrt((nn - 1) * (nn + 1) * (nn + 2)) * (n4 + 6 * n3 + 9 * n2 - 4 * nn - 12);
    Real t4 = sqrt(nn) * (n5 + 10 * n4 + 36 * n3 + 56 * n2 + 32 * nn);
    Real t5 = sqrt(nn - 1) * (n5 + 6 * n4 + 10 * n3 - 11 * nn - 6);
    return t1 - t2 - t3 - t4 - t5;
}

Real lemma_h(long n) { return Real(lemma_h_rational(n)); }

Rational lemma_h_rational(long n) {
    Integer nn(n);
    Integer num = 4 * nn * nn + 4 * nn + 1;
    Integer den = 2 * (nn + 1) * (nn + 1) * (nn + 1) * nn * nn * nn;
    return Rational(num, den);
}

namespace {

VerificationReport scan_positive(const std::string& name, long lo, long hi,
                                 const std::function<Real(long)>& gap_fn,
                                 const PrecisionContext& ctx) {
    VerificationReport report;
    report.name = name;
    report.range = "[" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
    report.precision_bits = ctx.mantissa_bits;
    for (long n = lo; n <= hi; ++n) {
        Real gap = gap_fn(n);
        if (!report.min_gap || gap < *report.min_gap) {
            report.min_gap = gap;
            report.min_gap_index = n;
        }
        if (!(gap > 0)) report.witnesses.push_back({n, gap, Real(0)});
    }
    report.pass = report.witnesses.empty();
    report.max_residual = report.min_gap ? max(Real(0), -*report.min_gap) : Real(0);
    return report;
}

}  // namespace

std::vector<VerificationReport> lemma_suite(long n_min, long n_max, const PrecisionContext& ctx) {
    PrecisionScope scope(ctx);
    long lo1 = std::max<long>(n_min, 1);
    long lo2 = std::max<long>(n_min, 2);
    std::vector<VerificationReport> reports;
    reports.push_back(scan_positive("lemma(F > G)", lo1, n_max,
                                    [](long n) { return lemma_F(n) - lemma_G(n); }, ctx));
    reports.push_back(scan_positive(
        "lemma(G > (36/16) n^(5/4))", lo1, n_max,
        [](long n) { return lemma_G(n) - Real(36) / 16 * pow(Real(n), Real(5) / 4); }, ctx));
    reports.push_back(scan_positive("lemma(H > 0)", lo1, n_max, [](long n) { return lemma_H(n); }, ctx));
    reports.push_back(scan_positive("lemma(T > 0)", lo2, n_max, [](long n) { return lemma_T(n); }, ctx));
    reports.push_back(scan_positive(
        "lemma(U < p_{n+1} p_{n+2})", lo2, n_max,
        [](long n) { return ratio_pow_3_2(Real(n + 3), Real(n + 1)) - lemma_U(n); }, ctx));
    reports.push_back(
        scan_positive("lemma(S < 0)", lo2, n_max, [](long n) { return -lemma_S(n); }, ctx));
    reports.push_back(
        scan_positive("lemma(f < 0)", lo2, n_max, [](long n) { return -lemma_f(n); }, ctx));

    // h > 0, with the closed form certified against the weight difference in
    // exact rationals on the shared validity range.
    VerificationReport h_report =
        scan_positive("lemma(h > 0)", lo1, n_max, [](long n) { return lemma_h(n); }, ctx);
    long rational_hi = std::min<long>(n_max, 1000);
    for (long n = lo1; n <= rational_hi; ++n) {
        Rational lhs = copson_hat_weight_rational(n) - copson_hat_bound_rational(n);
        if (lhs != lemma_h_rational(n)) {
            h_report.pass = false;
            h_report.witnesses.push_back({n, Real(lhs), lemma_h(n)});
            h_report.flag = "exact rational identity failed";
        }
    }
    reports.push_back(std::move(h_report));
    return reports;
}

CriticalitySequence make_criticality_sequence(CriticalityVariant variant, long N) {
    if (N < 2) throw PreconditionError("cutoff parameter N must be >= 2");
    long top = N * N;
    std::vector<Complex> v(static_cast<std::size_t>(top) + 1);
    for (long n = 1; n <= top; ++n) {
        if (variant == CriticalityVariant::tilde) {
            Real base = pow(Real(n), Real(3) / 4);
            if (n < N) {
                v[static_cast<std::size_t>(n)] = Complex(base);
            } else {
                Real den = N * pow(sum_of_squares(n), Real(1) / 4) * sqrt(Real(n));
                v[static_cast<std::size_t>(n)] = Complex(base * ((den - n) / den));
            }
        } else {
            if (n < N)
                v[static_cast<std::size_t>(n)] = Complex(Real(n));
            else
                v[static_cast<std::size_t>(n)] = Complex(Real(n) * (1 - Real(1) / (Real(N) * n)));
        }
    }
    return {variant, N, FiniteSequence::from_values(std::move(v))};
}

std::vector<CriticalityRow> criticality_rows(CriticalityVariant variant,
                                             const std::vector<long>& N_list) {
    std::vector<CriticalityRow> rows;
    for (long N : N_list) {
        if (N < 2) throw PreconditionError("cutoff parameter N must be >= 2");
        Real NN(N);
        CompensatedSum acc;
        if (variant == CriticalityVariant::tilde) {
            // Modulation profile g(n) = sqrt(n) / S~(n)^(1/4); the window sum is
            // (1/N^2) sum (n(n+1))^(3/4) (g(n+1) - g(n))^2 sqrt(S~(n+1)) / (n+1)^2.
            auto g = [](long n) { return sqrt(Real(n)) / pow(sum_of_squares(n), Real(1) / 4); };
            Real prev = g(N + 1);
            for (long n = N + 1; n <= N * N; ++n) {
                Real next = g(n + 1);
                Real diff = next - prev;
                Real term = pow(Real(n) * (n + 1), Real(3) / 4) * diff * diff *
                            sqrt(sum_of_squares(n + 1)) / (Real(n + 1) * (n + 1));
                acc.add(term);
                prev = next;
            }
            Real sum = acc.value() / (NN * NN);
            Real bound = log(NN) / (NN * NN) + 1 / (2 * NN) - 1 / (2 * NN * NN);
            rows.push_back({N, sum, bound});
        } else {
            // Modulation profile 1 - 1/(N n); successive differences 1/(N n (n+1)).
            for (long n = N + 1; n <= N * N; ++n) {
                Real diff = 1 / (NN * n * (n + 1));
                Real term = Real(n) * (n + 1) * diff * diff * sqrt(sum_of_cubes(n + 1)) /
                            (Real(n + 1) * (n + 1) * (n + 1));
                acc.add(term);
            }
            rows.push_back({N, acc.value(), log(NN) / (NN * NN)});
        }
    }
    return rows;
}

VerificationReport criticality_decay(CriticalityVariant variant, const std::vector<long>& N_list,
                                     const PrecisionContext& ctx) {
    PrecisionScope scope(ctx);
    VerificationReport report;
    report.name = std::string("criticality-decay(") +
                  (variant == CriticalityVariant::tilde ? "tilde" : "hat") + ")";
    report.precision_bits = ctx.mantissa_bits;
    std::string range = "N in {";
    for (std::size_t i = 0; i < N_list.size(); ++i)
        range += (i ? "," : "") + std::to_string(N_list[i]);
    report.range = range + "}";

    auto rows = criticality_rows(variant, N_list);
    Real worst = 0;
    bool ok = true;

    // Bind the reduced window sum to the realized test sequence: on interior
    // indices the remainder row evaluated on A^N must reproduce the summand.
    for (long N : N_list) {
        CriticalitySequence cs = make_criticality_sequence(variant, N);
        for (long n : {N + 1, (N + 1 + N * N) / 2, N * N - 1}) {
            if (n < N + 1 || n + 1 > N * N) continue;
            Real row_value, summand;
            if (variant == CriticalityVariant::tilde) {
                Real r = Real(n) / (n + 1);
                Real e = Real(3) / 8;
                Complex diff = cs.realized.at(n + 1) * pow(r, e) - cs.realized.at(n) * pow(1 / r, e);
                row_value = norm_sq(diff) * sqrt(sum_of_squares(n + 1)) / (Real(n + 1) * (n + 1));
                auto g = [](long k) { return sqrt(Real(k)) / pow(sum_of_squares(k), Real(1) / 4); };
                Real d = (g(n + 1) - g(n)) / N;
                summand = pow(Real(n) * (n + 1), Real(3) / 4) * d * d *
                          sqrt(sum_of_squares(n + 1)) / (Real(n + 1) * (n + 1));
            } else {
                Real r = Real(n) / (n + 1);
                Complex diff = cs.realized.at(n + 1) * sqrt(r) - cs.realized.at(n) * sqrt(1 / r);
                row_value = norm_sq(diff) * sqrt(sum_of_cubes(n + 1)) /
                            (Real(n + 1) * (n + 1) * (n + 1));
                Real d = 1 / (Real(N) * n * (n + 1));
                summand = Real(n) * (n + 1) * d * d * sqrt(sum_of_cubes(n + 1)) /
                          (Real(n + 1) * (n + 1) * (n + 1));
            }
            Real scale = max(max(row_value, summand), Real("1e-30"));
            if (abs(row_value - summand) > Real("1e-40") * scale) {
                ok = false;
                report.witnesses.push_back({n, row_value, summand});
                if (!report.flag) report.flag = "window summand does not match the realized sequence";
            }
        }
    }

    std::optional<Real> prev_sum;
    for (const auto& row : rows) {
        Real violation = row.remainder_sum - row.bound;
        worst = max(worst, violation);
        if (violation > 0) {
            ok = false;
            report.witnesses.push_back({row.N, row.remainder_sum, row.bound});
        }
        if (prev_sum && row.remainder_sum > *prev_sum) {
            ok = false;
            report.witnesses.push_back({row.N, row.remainder_sum, *prev_sum});
            if (!report.flag) report.flag = "remainder sums not nonincreasing";
        }
        prev_sum = row.remainder_sum;
    }
    report.pass = ok;
    report.max_residual = worst;
    return report;
}

namespace {

void require_boundary_zeros(const FiniteSequence& A, unsigned alpha) {
    for (long n = 0; n < static_cast<long>(alpha); ++n)
        if (!A.at(n).is_zero())
            throw PreconditionError("requires A(n) = 0 for 0 <= n <= " +
                                    std::to_string(alpha - 1));
}

Real abs_sq_sum(const FiniteSequence& X, long n_start) {
    CompensatedSum acc;
    for (long n = std::max<long>(n_start, 0); n <= X.support_end(); ++n) {
        const Complex& v = X.at(n);
        if (!v.is_zero()) acc.add(norm_sq(v));
    }
    return acc.value();
}

}  // namespace

VerificationReport knopp_rellich_identity(unsigned alpha, const FiniteSequence& A,
                                          const PrecisionContext& ctx) {
    PrecisionScope scope(ctx);
    if (alpha == 0) throw InvalidOrderError("order must be >= 1");
    require_boundary_zeros(A, alpha);

    FiniteSequence diff = backward_difference(A, alpha);
    Real lhs = abs_sq_sum(diff, static_cast<long>(alpha));
    Real rhs = quadratic_form(
        [alpha](const FiniteSequence& X) { return apply_laplacian_power(X, alpha); }, A,
        static_cast<long>(alpha), ctx);

    auto report = make_identity_report("difference-energy-identity(alpha=" + std::to_string(alpha) + ")",
                                       "support <= " + std::to_string(A.support_end()),
                                       relative_residual(lhs, rhs), ctx);
    if (!report.pass) report.witnesses.push_back({0, lhs, rhs});
    return report;
}

VerificationReport knopp_improvement_chain(unsigned alpha, const FiniteSequence& A,
                                           const PrecisionContext& ctx, KnoppChainSums* sums_out) {
    PrecisionScope scope(ctx);
    if (alpha == 0) throw InvalidOrderError("order must be >= 1");
    require_boundary_zeros(A, alpha);
    long a = static_cast<long>(alpha);

    KnoppChainSums sums;
    FiniteSequence diff = backward_difference(A, alpha);
    sums.energy = abs_sq_sum(diff, a);
    sums.improved = weighted_norm_sq(A, [alpha](long n) { return rellich_rho_alpha(alpha, n); }, a);
    sums.classical =
        weighted_norm_sq(A, [alpha](long n) { return knopp_classical_bound(alpha, n); }, a);
    Real inv_const = 1 / knopp_constant(alpha);
    sums.knopp_weighted = inv_const * weighted_norm_sq(
                                          A, [alpha](long n) { return knopp_row_weight(alpha, n); }, a);
    if (alpha == 2) {
        // Alternative normalization through the plain mean 1/(n(n+1)); equal to
        // the binomial-row form after the squared factor 2 on both sides.
        sums.knopp_weighted_mean_form =
            Real(9) / 16 *
            weighted_norm_sq(
                A, [](long n) { return 1 / (Real(n) * n * (n + 1) * (n + 1)); }, a);
    }

    VerificationReport report;
    report.name = "improvement-chain(alpha=" + std::to_string(alpha) + ")";
    report.range = "support <= " + std::to_string(A.support_end());
    report.precision_bits = ctx.mantissa_bits;
    if (alpha >= 3)
        report.flag = "order >= 3 links are conjecture-backed evidence";

    Real scale = max(max(abs(sums.energy), abs(sums.improved)), Real(1));
    Real slack = ctx.tolerance_rel * scale;
    bool ok = true;
    auto expect = [&](bool cond, long link, const Real& lhs, const Real& rhs) {
        if (!cond) {
            ok = false;
            report.witnesses.push_back({link, lhs, rhs});
        }
    };
    if (!A.is_zero()) {
        expect(sums.energy >= sums.improved - slack, 1, sums.energy, sums.improved);
        expect(sums.improved > sums.classical, 2, sums.improved, sums.classical);
        expect(sums.classical >= sums.knopp_weighted - slack, 3, sums.classical,
               sums.knopp_weighted);
        if (sums.knopp_weighted_mean_form)
            expect(relative_residual(sums.knopp_weighted, *sums.knopp_weighted_mean_form) <=
                       ctx.tolerance_rel,
                   4, sums.knopp_weighted, *sums.knopp_weighted_mean_form);
    }
    report.pass = ok;
    report.max_residual = ok ? Real(0) : Real(1);
    if (sums_out) *sums_out = sums;
    return report;
}

}  // namespace ineq
