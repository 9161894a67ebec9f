#include "ineq/cli.hpp"

#include "ineq/factorization.hpp"
#include "ineq/verification.hpp"
#include "ineq/weights.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <ostream>
#include <sstream>
#include <variant>

namespace ineq::cli {

namespace {

using Cell = std::variant<long, std::string, Real>;
using Row = std::vector<std::pair<std::string, Cell>>;

struct UsageError : Error {
    using Error::Error;
};

std::string cell_dec(const Cell& c, unsigned bits) {
    if (std::holds_alternative<long>(c)) return std::to_string(std::get<long>(c));
    if (std::holds_alternative<std::string>(c)) return std::get<std::string>(c);
    return format_decimal(std::get<Real>(c), bits);
}

void emit_csv(std::ostream& out, const std::vector<Row>& rows, unsigned bits) {
    if (rows.empty()) return;
    for (std::size_t i = 0; i < rows[0].size(); ++i)
        out << (i ? "," : "") << rows[0][i].first;
    out << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << cell_dec(row[i].second, bits);
        out << "\n";
    }
}

nlohmann::json rows_json(const std::vector<Row>& rows, unsigned bits) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& row : rows) {
        nlohmann::json obj = nlohmann::json::object();
        for (const auto& [key, cell] : row) {
            if (std::holds_alternative<long>(cell)) {
                obj[key] = std::get<long>(cell);
            } else if (std::holds_alternative<std::string>(cell)) {
                obj[key] = std::get<std::string>(cell);
            } else {
                const Real& v = std::get<Real>(cell);
                obj[key] = format_decimal(v, bits);
                obj[key + "_hex"] = format_hex(v);
            }
        }
        arr.push_back(std::move(obj));
    }
    return arr;
}

void emit_output(const CliConfig& config, std::ostream& out, const std::vector<Row>& rows,
                 bool pass, const Real& max_residual) {
    if (config.format == OutputFormat::csv) {
        emit_csv(out, rows, config.precision_bits);
        out << "# verdict," << (pass ? "pass" : "fail") << "\n";
    } else {
        nlohmann::json doc;
        doc["command"] = config.command;
        doc["params"] = config.params;
        doc["rows"] = rows_json(rows, config.precision_bits);
        doc["verdict"] = pass ? "pass" : "fail";
        doc["max_residual"] = format_decimal(max_residual, config.precision_bits);
        doc["precision_bits"] = config.precision_bits;
        doc["seed"] = config.seed;
        out << doc.dump(2) << "\n";
    }
}

void emit_witnesses(std::ostream& err, const VerificationReport& report, unsigned bits) {
    for (const auto& w : report.witnesses)
        err << "witness," << report.name << "," << w.index << "," << format_decimal(w.lhs, bits)
            << "," << format_decimal(w.rhs, bits) << "\n";
    if (report.flag) err << "flag," << report.name << "," << *report.flag << "\n";
}

std::string param_or(const CliConfig& config, const std::string& key, const std::string& fallback) {
    auto it = config.params.find(key);
    return it == config.params.end() ? fallback : it->second;
}

PositiveSequence config_sequence(const CliConfig& config, const std::string& key,
                                 const std::string& fallback) {
    Real zero(param_or(config, key + "0", "1").c_str());
    return parse_sequence_spec(param_or(config, key, fallback), zero);
}

PrecisionContext make_context(const CliConfig& config) {
    return {config.precision_bits, config.tolerance, Real("1e-40")};
}

int run_weights(const CliConfig& config, std::ostream& out, std::ostream& err) {
    std::string family_name = param_or(config, "family", "");
    if (family_name.empty()) throw UsageError("weights requires family=<name>");
    PrecisionContext ctx = make_context(config);
    PrecisionScope scope(ctx);  // families capture constants at working width
    WeightFamily family = make_weight_family(family_name, config.params);
    auto bound = paired_bound_family(family_name, config.params);

    std::vector<Row> rows;
    bool pass = true;
    long lo = config.n_min > 0 ? std::max(config.n_min, family.n_min) : family.n_min;
    for (long n = lo; n <= config.n_max; ++n) {
        Row row;
        row.emplace_back("n", n);
        Real v = family.eval(n);
        row.emplace_back("value", v);
        if (bound) {
            Real b = bound->eval(n);
            Real excess = v - b;
            row.emplace_back("classical_bound", b);
            row.emplace_back("excess", excess);
            if (!(excess > 0)) pass = false;
        }
        rows.push_back(std::move(row));
    }
    if (family.flag) err << "flag," << family.name << "," << *family.flag << "\n";
    emit_output(config, out, rows, pass, Real(0));
    return pass ? exit_pass : exit_fail;
}

int run_scan(const CliConfig& config, std::ostream& out, std::ostream& err) {
    std::string a_name = param_or(config, "a", param_or(config, "family", ""));
    if (a_name.empty()) throw UsageError("scan requires a=<family> (and optionally b=<family>)");
    PrecisionContext ctx = make_context(config);
    PrecisionScope scope(ctx);
    WeightFamily a = make_weight_family(a_name, config.params);
    WeightFamily b;
    std::string b_name = param_or(config, "b", "");
    if (!b_name.empty()) {
        b = make_weight_family(b_name, config.params);
    } else {
        auto paired = paired_bound_family(a_name, config.params);
        if (!paired) throw UsageError("no default comparison family for " + a_name + "; pass b=");
        b = *paired;
    }
    long lo = config.n_min > 0 ? config.n_min : std::max(a.n_min, b.n_min);
    VerificationReport report = pointwise_scan(a, b, lo, config.n_max, ctx, config.threads);

    std::vector<Row> rows;
    Row row;
    row.emplace_back("family", a.name);
    row.emplace_back("comparison", b.name);
    row.emplace_back("n_min", lo);
    row.emplace_back("n_max", config.n_max);
    row.emplace_back("min_gap", report.min_gap.value_or(Real(0)));
    row.emplace_back("min_gap_at", report.min_gap_index);
    row.emplace_back("verdict", std::string(report.pass ? "pass" : "fail"));
    rows.push_back(std::move(row));
    emit_witnesses(err, report, config.precision_bits);
    emit_output(config, out, rows, report.pass, report.max_residual);
    return report.pass ? exit_pass : exit_fail;
}

FiniteSequence load_sequence_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open sequence file: " + path);
    std::vector<Complex> values(1);  // index 0 is the boundary slot, always zero
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        try {
            values.emplace_back(Real(line.c_str()));
        } catch (const std::exception&) {
            throw UsageError("malformed value in sequence file: " + line);
        }
    }
    return FiniteSequence::from_values(std::move(values));
}

int run_verify(const CliConfig& config, std::ostream& out, std::ostream& err) {
    std::string identity = param_or(config, "identity", "");
    if (identity.empty()) throw UsageError("verify requires identity=<name>");
    PrecisionContext ctx = make_context(config);
    PrecisionScope scope(ctx);

    long zeros = 1;
    unsigned alpha = static_cast<unsigned>(std::stol(param_or(config, "alpha", "2")));
    if (identity == "rellich") zeros = 2;
    if (identity == "knopp-rellich" || identity == "knopp-chain") zeros = static_cast<long>(alpha);

    std::string file = param_or(config, "sequence", "");
    std::vector<FiniteSequence> sequences;
    std::vector<std::uint64_t> seeds;
    if (!file.empty()) {
        // values are index-1 first; the identity's own precondition rejects
        // data violating its boundary zeros
        std::string path = file.rfind("file:", 0) == 0 ? file.substr(5) : file;
        sequences.push_back(load_sequence_file(path));
        seeds.push_back(0);
    } else {
        SplitMix64 seeder(config.seed);
        for (long k = 0; k < std::max<long>(config.count, 1); ++k) {
            std::uint64_t sk = seeder.next();
            seeds.push_back(sk);
            sequences.push_back(random_sequence(sk, config.support, zeros));
        }
    }

    std::vector<Row> rows;
    bool all_pass = true;
    Real worst = 0;
    for (std::size_t k = 0; k < sequences.size(); ++k) {
        VerificationReport report;
        const FiniteSequence& A = sequences[k];
        if (identity == "hardy") {
            PositiveSequence lambda = config_sequence(config, "lambda", "linear");
            PositiveSequence mu = config_sequence(config, "mu", "pow:0.5");
            Real c(param_or(config, "c", "2").c_str());
            report = verify_hardy_identity(lambda, c, mu, A, ctx);
        } else if (identity == "copson-tilde") {
            report = verify_copson_identity(CopsonVariant::tilde, A, ctx);
        } else if (identity == "copson-hat") {
            report = verify_copson_identity(CopsonVariant::hat, A, ctx);
        } else if (identity == "rellich") {
            PositiveSequence delta = config_sequence(config, "delta", "shifted");
            PositiveSequence mu = config_sequence(config, "mu", "pow:1.5");
            report = verify_rellich_identity(delta, mu, A, ctx);
        } else if (identity == "knopp-rellich") {
            report = knopp_rellich_identity(alpha, A, ctx);
        } else if (identity == "knopp-chain") {
            report = knopp_improvement_chain(alpha, A, ctx);
        } else {
            throw UsageError("unknown identity: " + identity);
        }
        all_pass = all_pass && report.pass;
        worst = max(worst, report.max_residual);
        emit_witnesses(err, report, config.precision_bits);
        Row row;
        row.emplace_back("k", static_cast<long>(k));
        row.emplace_back("seed", std::to_string(seeds[k]));
        row.emplace_back("name", report.name);
        row.emplace_back("residual", report.max_residual);
        row.emplace_back("verdict", std::string(report.pass ? "pass" : "fail"));
        rows.push_back(std::move(row));
    }
    emit_output(config, out, rows, all_pass, worst);
    return all_pass ? exit_pass : exit_fail;
}

int run_gamma(const CliConfig& config, std::ostream& out, std::ostream& err) {
    PositiveSequence delta = config_sequence(config, "delta", "shifted");
    PositiveSequence mu = config_sequence(config, "mu", "pow:1.5");
    PrecisionContext ctx = make_context(config);
    PrecisionScope scope(ctx);

    VerificationReport report = gamma_bounds_check(delta, mu, config.n_max, ctx);
    auto table = gamma_bounds_rows(delta, mu, config.n_max);
    std::vector<Row> rows;
    for (const auto& r : table) {
        Row row;
        row.emplace_back("n", r.n);
        row.emplace_back("lower", r.lower);
        row.emplace_back("gamma_sq", r.gamma_sq);
        row.emplace_back("upper", r.upper);
        row.emplace_back("strict", std::string(r.strict ? "true" : "false"));
        rows.push_back(std::move(row));
    }
    emit_witnesses(err, report, config.precision_bits);
    emit_output(config, out, rows, report.pass, report.max_residual);
    return report.pass ? exit_pass : exit_fail;
}

std::vector<long> parse_n_list(const std::string& text) {
    std::vector<long> Ns;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) Ns.push_back(std::stol(item));
    }
    if (Ns.empty()) throw UsageError("empty N list");
    return Ns;
}

int run_criticality(const CliConfig& config, std::ostream& out, std::ostream& err) {
    std::string variant_name = param_or(config, "variant", "tilde");
    CriticalityVariant variant;
    if (variant_name == "tilde")
        variant = CriticalityVariant::tilde;
    else if (variant_name == "hat")
        variant = CriticalityVariant::hat;
    else
        throw UsageError("variant must be tilde or hat");
    std::vector<long> Ns = parse_n_list(param_or(config, "N", "4,8,16,32,64,128"));
    PrecisionContext ctx = make_context(config);
    PrecisionScope scope(ctx);

    VerificationReport report = criticality_decay(variant, Ns, ctx);
    auto table = criticality_rows(variant, Ns);
    std::vector<Row> rows;
    for (const auto& r : table) {
        Row row;
        row.emplace_back("N", r.N);
        row.emplace_back("remainder_sum", r.remainder_sum);
        row.emplace_back("bound", r.bound);
        rows.push_back(std::move(row));
    }
    emit_witnesses(err, report, config.precision_bits);
    emit_output(config, out, rows, report.pass, report.max_residual);
    return report.pass ? exit_pass : exit_fail;
}

int run_knopp(const CliConfig& config, std::ostream& out, std::ostream& err) {
    unsigned alpha = static_cast<unsigned>(std::stol(param_or(config, "alpha", "2")));
    PrecisionContext ctx = make_context(config);
    PrecisionScope scope(ctx);

    SplitMix64 seeder(config.seed);
    std::vector<Row> rows;
    bool all_pass = true;
    Real worst = 0;
    for (long k = 0; k < std::max<long>(config.count, 1); ++k) {
        std::uint64_t sk = seeder.next();
        FiniteSequence A = random_sequence(sk, config.support, static_cast<long>(alpha));
        VerificationReport identity = knopp_rellich_identity(alpha, A, ctx);
        KnoppChainSums sums;
        VerificationReport chain = knopp_improvement_chain(alpha, A, ctx, &sums);
        bool pass = identity.pass && chain.pass;
        all_pass = all_pass && pass;
        worst = max(worst, identity.max_residual);
        emit_witnesses(err, identity, config.precision_bits);
        emit_witnesses(err, chain, config.precision_bits);
        Row row;
        row.emplace_back("k", k);
        row.emplace_back("seed", std::to_string(sk));
        row.emplace_back("identity_residual", identity.max_residual);
        row.emplace_back("energy", sums.energy);
        row.emplace_back("improved_sum", sums.improved);
        row.emplace_back("classical_sum", sums.classical);
        row.emplace_back("knopp_sum", sums.knopp_weighted);
        if (sums.knopp_weighted_mean_form)
            row.emplace_back("knopp_sum_mean_form", *sums.knopp_weighted_mean_form);
        row.emplace_back("verdict", std::string(pass ? "pass" : "fail"));
        rows.push_back(std::move(row));
    }
    emit_output(config, out, rows, all_pass, worst);
    return all_pass ? exit_pass : exit_fail;
}

}  // namespace

PositiveSequence parse_sequence_spec(const std::string& text, const Real& zero_value) {
    auto rewrap = [&zero_value](PositiveSequence base) {
        return PositiveSequence(base.name(), zero_value, [base](long n) { return base(n); });
    };
    if (text == "ones") return rewrap(seq_ones());
    if (text == "linear") return rewrap(seq_linear());
    if (text == "shifted") return rewrap(seq_shifted_ratio());
    if (text == "copson-tilde-lambda") return rewrap(seq_copson_tilde_lambda());
    if (text == "copson-hat-lambda") return rewrap(seq_copson_hat_lambda());
    if (text.rfind("pow:", 0) == 0) {
        std::string r = text.substr(4);
        try {
            return rewrap(seq_power(Real(r.c_str())));
        } catch (const std::exception&) {
            throw UsageError("malformed exponent in sequence spec: " + text);
        }
    }
    if (text.rfind("file:", 0) == 0) {
        std::string path = text.substr(5);
        std::ifstream in(path);
        if (!in) throw UsageError("cannot open sequence file: " + path);
        std::vector<Real> values;
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            try {
                values.emplace_back(line.c_str());
            } catch (const std::exception&) {
                throw UsageError("malformed value in sequence file: " + line);
            }
        }
        return seq_from_values("file:" + path, zero_value, std::move(values));
    }
    throw UsageError("unknown sequence spec: " + text);
}

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
    try {
        if (config.n_max < 1) throw UsageError("n_max must be >= 1");
        if (config.command == "weights") return run_weights(config, out, err);
        if (config.command == "scan") return run_scan(config, out, err);
        if (config.command == "verify") return run_verify(config, out, err);
        if (config.command == "gamma") return run_gamma(config, out, err);
        if (config.command == "criticality") return run_criticality(config, out, err);
        if (config.command == "knopp") return run_knopp(config, out, err);
        err << "error: unknown command " << config.command << "\n";
        return exit_usage;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const ValidationError& e) {
        err << "validation error: " << e.what() << "\n";
        return exit_usage;
    } catch (const PreconditionError& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_fail;
    } catch (const std::exception& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    }
}

}  // namespace ineq::cli
