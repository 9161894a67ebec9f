#include "ineq/weights.hpp"

#include "ineq/cli.hpp"

#include <algorithm>

namespace ineq {

Real sum_of_squares(long n) { return Real(n) * (n + 1) * (2 * n + 1) / 6; }

Rational sum_of_squares_rational(long n) {
    return Rational(Integer(n) * (n + 1) * (2 * n + 1), 6);
}

Real sum_of_cubes(long n) {
    Real h = Real(n) * (n + 1) / 2;
    return h * h;
}

Rational sum_of_cubes_rational(long n) {
    Integer h = Integer(n) * (n + 1);
    return Rational(h * h, 4);
}

Real hardy_weight_classical(long n) {
    if (n < 1) throw OutOfRangeError("weight defined for n >= 1");
    Real x = Real(1) / n;
    Real num = 2 * x * x;
    Real den = (1 + sqrt(1 - x * x)) * (2 + sqrt(1 - x) + sqrt(1 + x));
    return num / den;
}

Real hardy_weight_classical_naive(long n) {
    if (n < 1) throw OutOfRangeError("weight defined for n >= 1");
    Real x = Real(1) / n;
    return 2 - sqrt(1 - x) - sqrt(1 + x);
}

Real hardy_classical_bound(long n) { return Real(1) / (Real(4) * n * n); }

Real hardy_weight_mu(const PositiveSequence& mu, long n) {
    if (n < 1) throw OutOfRangeError("weight defined for n >= 1");
    Real mun = mu(n);
    Real prev = (n == 1) ? Real(0) : mu(n - 1);  // mu_0 = 0 convention
    return 2 - prev / mun - mu(n + 1) / mun;
}

Real eta_weight(const PositiveSequence& lambda, const PositiveSequence& lambda_partial,
                const Real& c, const PositiveSequence& mu, long n) {
    if (n < 1) throw OutOfRangeError("weight defined for n >= 1");
    if (!(c > 1 && c <= 2)) throw ValidationError("c must lie in (1, 2]");
    const bool flat = (c == 2);
    Real rn = flat ? 1 / lambda(n) : pow(lambda_partial(n), 2 - c) / lambda(n);
    Real rn1 = flat ? 1 / lambda(n + 1) : pow(lambda_partial(n + 1), 2 - c) / lambda(n + 1);
    Real mun = mu(n);
    Real prev = (n == 1) ? Real(0) : mu(n - 1);
    return rn + rn1 - prev * rn / mun - mu(n + 1) * rn1 / mun;
}

Real eta_weight(const PositiveSequence& lambda, const Real& c, const PositiveSequence& mu, long n) {
    PositiveSequence Lam = partial_sums(lambda, n + 1);
    return eta_weight(lambda, Lam, c, mu, n);
}

Real sigma_weight(const PositiveSequence& lambda, const PositiveSequence& mu, long n) {
    return eta_weight(lambda, lambda, Real(2), mu, n);
}

Real eta_linear_closed(long n) { return Real(1) / (Real(n) * n * (n + 1)); }

Real generalized_hardy_bound(long n) { return Real(1) / (Real(n) * (n + 1) * (n + 1)); }

bool gupta_alpha_valid(const Real& alpha) {
    return alpha == 0 || (alpha >= Real(1) / 3 && alpha < 1);
}

Real gupta_weight(const Real& alpha, long n) {
    if (n < 1) throw OutOfRangeError("weight defined for n >= 1");
    Real beta = (1 - alpha) / 2;
    if (n == 1) return 1 + pow(Real(2), alpha) - pow(Real(2), alpha + beta);
    Real x = Real(1) / n;
    Real val = 1 + pow(1 + x, alpha) - pow(1 - x, beta) - pow(1 + x, alpha + beta);
    return pow(Real(n), alpha) * val;
}

Real gupta_bound(const Real& alpha, long n) {
    Real c = (alpha - 1) * (alpha - 1) / 4;
    return c * pow(Real(n), alpha - 2);
}

namespace {

// 1 - (1 + s/n)^(3/4) without subtractive cancellation; s is +1 or -1.
Real one_minus_pow34(long n, int s) {
    if (s < 0 && n == 1) return Real(1);  // (1 - 1/1)^(3/4) = 0
    Real x = Real(s) / n;
    return -expm1(Real(3) / 4 * log1p(x));
}

}  // namespace

Real copson_tilde_weight(long n) {
    if (n < 1) throw OutOfRangeError("weight defined for n >= 1");
    Real t1 = sqrt(sum_of_squares(n)) / (Real(n) * n);
    Real t2 = sqrt(sum_of_squares(n + 1)) / (Real(n + 1) * (n + 1));
    return t1 * one_minus_pow34(n, -1) + t2 * one_minus_pow34(n, +1);
}

Real copson_tilde_weight_naive(long n) {
    if (n < 1) throw OutOfRangeError("weight defined for n >= 1");
    Real t1 = sqrt(sum_of_squares(n)) / (Real(n) * n);
    Real t2 = sqrt(sum_of_squares(n + 1)) / (Real(n + 1) * (n + 1));
    Real x = Real(1) / n;
    Real e = Real(3) / 4;
    return t1 + t2 - t1 * pow(1 - x, e) - t2 * pow(1 + x, e);
}

Real copson_tilde_bound(long n) {
    Real s = sum_of_squares(n);
    return Real(n) * n / (16 * s * sqrt(s));
}

Real copson_hat_weight(long n) {
    return Real(copson_hat_weight_rational(n));
}

Rational copson_hat_weight_rational(long n) {
    if (n < 1) throw OutOfRangeError("weight defined for n >= 1");
    Integer nn(n);
    return Rational(nn * nn + 3 * nn + 1, 2 * nn * nn * nn * (nn + 1) * (nn + 1));
}

Real copson_hat_weight_naive(long n) {
    if (n < 1) throw OutOfRangeError("weight defined for n >= 1");
    Real t1 = sqrt(sum_of_cubes(n)) / (Real(n) * n * n);
    Real t2 = sqrt(sum_of_cubes(n + 1)) / (Real(n + 1) * (n + 1) * (n + 1));
    Real x = Real(1) / n;
    return t1 + t2 - t1 * (1 - x) - t2 * (1 + x);
}

Real copson_hat_bound(long n) { return Real(copson_hat_bound_rational(n)); }

Rational copson_hat_bound_rational(long n) {
    Integer m(n + 1);
    return Rational(1, 2 * m * m * m);
}

Real rellich_rho2(long n) {
    if (n < 2) throw OutOfRangeError("second-order weight defined for n >= 2");
    Real x = Real(1) / n;
    auto p32 = [](const Real& t) { return t * sqrt(t); };
    return 6 - 4 * p32(1 + x) - 4 * p32(1 - x) + p32(1 + 2 * x) + p32(1 - 2 * x);
}

Real rellich_classical_bound(long n) {
    Real n2 = Real(n) * n;
    return Real(9) / (16 * n2 * n2);
}

Real rellich_rho_alpha(unsigned alpha, long n) {
    if (alpha == 0) throw InvalidOrderError("order must be >= 1");
    if (n < static_cast<long>(alpha))
        throw OutOfRangeError("order-" + std::to_string(alpha) + " weight defined for n >= " +
                              std::to_string(alpha));
    // mu(k) = k^(alpha - 1/2) = k^alpha / sqrt(k), zero at k <= 0.
    auto mu = [alpha](long k) {
        if (k <= 0) return Real(0);
        return pow(Real(k), static_cast<int>(alpha)) / sqrt(Real(k));
    };
    CompensatedSum acc;
    long a = static_cast<long>(alpha);
    for (long j = -a; j <= a; ++j) {
        Real coeff(binomial(2 * a, a + j));
        if ((j % 2 + 2) % 2 == 1) coeff = -coeff;
        Real m = mu(n + j);
        if (m != 0) acc.add(coeff * m);
    }
    return acc.value() / mu(n);
}

Real sigma2_weight(const PositiveSequence& delta, const PositiveSequence& mu, long n) {
    if (n < 2) throw OutOfRangeError("second-order weight defined for n >= 2");
    Real dn = delta(n), dn1 = delta(n + 1), dn2 = delta(n + 2), dnm = delta(n - 1);
    Real mun = mu(n);
    Real diag = (dn + dn1) * (dn + dn1) + dn * dn + dn1 * dn1;
    Real down1 = (mu(n - 1) / mun) * (2 * dn * dn + dn * dnm + dn * dn1);
    Real up1 = (mu(n + 1) / mun) * (2 * dn1 * dn1 + dn * dn1 + dn1 * dn2);
    Real down2 = (n == 2) ? Real(0) : (mu(n - 2) / mun) * dn * dnm;  // mu_0 = 0 convention
    Real up2 = (mu(n + 2) / mun) * dn1 * dn2;
    return diag - down1 - up1 + down2 + up2;
}

namespace {

Integer factorial(unsigned k) {
    Integer r;
    mpz_fac_ui(r.backend().data(), k);
    return r;
}

Integer pow_int(const Integer& base, unsigned e) {
    Integer r;
    mpz_pow_ui(r.backend().data(), base.backend().data(), e);
    return r;
}

}  // namespace

Rational knopp_constant_rational(unsigned alpha) {
    if (alpha == 0) throw InvalidOrderError("order must be >= 1");
    Integer fa = factorial(alpha);
    Integer num = pow_int(Integer(4), alpha) * fa * fa;
    Rational ratio(num, factorial(2 * alpha));
    return ratio * ratio;
}

Real knopp_constant(unsigned alpha) { return Real(knopp_constant_rational(alpha)); }

Real knopp_row_weight(unsigned alpha, long n) {
    if (alpha == 0) throw InvalidOrderError("order must be >= 1");
    Real c(binomial(n - 1 + static_cast<long>(alpha), n - 1));
    return 1 / (c * c);
}

Rational knopp_classical_constant_rational(unsigned alpha) {
    Integer f2a = factorial(2 * alpha);
    Integer fa = factorial(alpha);
    return Rational(f2a * f2a, pow_int(Integer(16), alpha) * fa * fa);
}

Real knopp_classical_bound(unsigned alpha, long n) {
    return Real(knopp_classical_constant_rational(alpha)) /
           pow(Real(n), 2 * static_cast<int>(alpha));
}

namespace {

std::string param_or(const std::map<std::string, std::string>& params, const std::string& key,
                     const std::string& fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

PositiveSequence param_sequence(const std::map<std::string, std::string>& params,
                                const std::string& key, const std::string& fallback) {
    Real zero(param_or(params, key + "0", "1").c_str());
    return cli::parse_sequence_spec(param_or(params, key, fallback), zero);
}

unsigned param_alpha_int(const std::map<std::string, std::string>& params) {
    long a = std::stol(param_or(params, "alpha", "2"));
    if (a < 1) throw ValidationError("alpha must be a positive integer");
    return static_cast<unsigned>(a);
}

}  // namespace

WeightFamily make_weight_family(const std::string& name,
                                const std::map<std::string, std::string>& params) {
    if (name == "hardy-classical")
        return {name, 1, [](long n) { return hardy_weight_classical(n); },
                [](long n) { return hardy_weight_classical_naive(n); }, std::nullopt};
    if (name == "hardy-classical-bound")
        return {name, 1, [](long n) { return hardy_classical_bound(n); }, nullptr, std::nullopt};
    if (name == "hardy-mu") {
        auto mu = std::make_shared<PositiveSequence>(param_sequence(params, "mu", "pow:0.5"));
        return {name, 1, [mu](long n) { return hardy_weight_mu(*mu, n); }, nullptr, std::nullopt};
    }
    if (name == "eta") {
        auto lambda = std::make_shared<PositiveSequence>(param_sequence(params, "lambda", "linear"));
        auto Lam = std::make_shared<PositiveSequence>(partial_sums(*lambda, 1));
        auto mu = std::make_shared<PositiveSequence>(param_sequence(params, "mu", "linear"));
        Real c(param_or(params, "c", "2").c_str());
        return {name, 1,
                [lambda, Lam, mu, c](long n) { return eta_weight(*lambda, *Lam, c, *mu, n); },
                nullptr, std::nullopt};
    }
    if (name == "sigma") {
        auto lambda = std::make_shared<PositiveSequence>(param_sequence(params, "lambda", "linear"));
        auto mu = std::make_shared<PositiveSequence>(param_sequence(params, "mu", "linear"));
        return {name, 1, [lambda, mu](long n) { return sigma_weight(*lambda, *mu, n); }, nullptr,
                std::nullopt};
    }
    if (name == "eta-corollary")
        return {name, 1, [](long n) { return eta_linear_closed(n); },
                [](long n) {
                    PositiveSequence lin = seq_linear();
                    return sigma_weight(lin, lin, n);
                },
                std::nullopt};
    if (name == "generalized-hardy-bound")
        return {name, 1, [](long n) { return generalized_hardy_bound(n); }, nullptr, std::nullopt};
    if (name == "copson-tilde")
        return {name, 1, [](long n) { return copson_tilde_weight(n); },
                [](long n) { return copson_tilde_weight_naive(n); }, std::nullopt};
    if (name == "copson-tilde-bound")
        return {name, 1, [](long n) { return copson_tilde_bound(n); }, nullptr, std::nullopt};
    if (name == "copson-hat")
        return {name, 1, [](long n) { return copson_hat_weight(n); },
                [](long n) { return copson_hat_weight_naive(n); }, std::nullopt};
    if (name == "copson-hat-bound")
        return {name, 1, [](long n) { return copson_hat_bound(n); }, nullptr, std::nullopt};
    if (name == "gupta") {
        Real alpha(param_or(params, "alpha", "0").c_str());
        std::optional<std::string> flag;
        if (!gupta_alpha_valid(alpha))
            flag = "alpha outside proven validity set {0} u [1/3, 1); values computed anyway";
        return {name, 1, [alpha](long n) { return gupta_weight(alpha, n); }, nullptr, flag};
    }
    if (name == "gupta-bound") {
        Real alpha(param_or(params, "alpha", "0").c_str());
        return {name, 1, [alpha](long n) { return gupta_bound(alpha, n); }, nullptr, std::nullopt};
    }
    if (name == "rellich-rho2")
        return {name, 2, [](long n) { return rellich_rho2(n); },
                [](long n) { return rellich_rho_alpha(2, n); }, std::nullopt};
    if (name == "rellich-classical-bound")
        return {name, 2, [](long n) { return rellich_classical_bound(n); }, nullptr, std::nullopt};
    if (name == "rellich-rho") {
        unsigned alpha = param_alpha_int(params);
        std::optional<std::string> flag;
        if (alpha >= 3) flag = "order >= 3 improvement is conjecture-backed evidence";
        return {name, static_cast<long>(alpha),
                [alpha](long n) { return rellich_rho_alpha(alpha, n); }, nullptr, flag};
    }
    if (name == "sigma2") {
        auto delta = std::make_shared<PositiveSequence>(param_sequence(params, "delta", "ones"));
        auto mu = std::make_shared<PositiveSequence>(param_sequence(params, "mu", "pow:1.5"));
        return {name, 2, [delta, mu](long n) { return sigma2_weight(*delta, *mu, n); }, nullptr,
                std::nullopt};
    }
    if (name == "knopp-classical") {
        unsigned alpha = param_alpha_int(params);
        return {name, static_cast<long>(alpha),
                [alpha](long n) { return knopp_classical_bound(alpha, n); }, nullptr, std::nullopt};
    }
    if (name == "knopp-final") {
        unsigned alpha = param_alpha_int(params);
        // exact rational constant so escalated re-evaluation stays faithful
        Rational inv_const = 1 / knopp_constant_rational(alpha);
        return {name, static_cast<long>(alpha),
                [alpha, inv_const](long n) { return Real(inv_const) * knopp_row_weight(alpha, n); },
                nullptr, std::nullopt};
    }
    throw ValidationError("unknown weight family: " + name);
}

std::optional<WeightFamily> paired_bound_family(const std::string& name,
                                                const std::map<std::string, std::string>& params) {
    static const std::map<std::string, std::string> pairing = {
        {"hardy-classical", "hardy-classical-bound"},
        {"hardy-mu", "hardy-classical-bound"},
        {"eta-corollary", "generalized-hardy-bound"},
        {"copson-tilde", "copson-tilde-bound"},
        {"copson-hat", "copson-hat-bound"},
        {"gupta", "gupta-bound"},
        {"rellich-rho2", "rellich-classical-bound"},
        {"rellich-rho", "knopp-classical"},
        {"knopp-final", "knopp-classical"},
    };
    auto it = pairing.find(name);
    if (it == pairing.end()) return std::nullopt;
    return make_weight_family(it->second, params);
}

std::vector<std::string> weight_family_names() {
    return {"hardy-classical", "hardy-classical-bound", "hardy-mu",       "eta",
            "sigma",           "eta-corollary",         "generalized-hardy-bound",
            "copson-tilde",    "copson-tilde-bound",    "copson-hat",     "copson-hat-bound",
            "gupta",           "gupta-bound",           "rellich-rho2",   "rellich-classical-bound",
            "rellich-rho",     "sigma2",                "knopp-classical", "knopp-final"};
}

}  // namespace ineq
