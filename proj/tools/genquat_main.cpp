// genquat — arithmetic, exponential and principal logarithm in the
// generalized quaternion algebras H(alpha,beta), plus a self-verification
// battery driven by independent oracles.
//
// Exit codes: 0 success, 1 domain error, 2 parse error, 3 verification
// failure.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "genquat/closed_form.hpp"
#include "genquat/io.hpp"
#include "genquat/verify.hpp"

namespace {

using namespace genquat;

struct CliConfig {
    double alpha = 1.0;
    double beta = 1.0;
    std::string format = "text";
    double rel_tol = 1e-9;
    double abs_tol = 1e-12;
    std::uint64_t seed = 12345;
    int samples = 1000;
};

void add_common(CLI::App* sub, CliConfig& cfg) {
    sub->add_option("--alpha", cfg.alpha, "algebra parameter alpha")->capture_default_str();
    sub->add_option("--beta", cfg.beta, "algebra parameter beta")->capture_default_str();
    sub->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
}

AlgebraParams checked_params(const CliConfig& cfg) {
    if (!std::isfinite(cfg.alpha) || !std::isfinite(cfg.beta))
        throw CLI::ValidationError("--alpha/--beta must be finite");
    return AlgebraParams{cfg.alpha, cfg.beta};
}

GQuat parse_element(const AlgebraParams& p, const std::string& raw) {
    const auto q = parse_quad(raw);
    if (!q)
        throw CLI::ValidationError("bad element '" + raw +
                                   "': expected four comma-separated finite "
                                   "decimal literals a1,a2,a3,a4");
    return make(p, (*q)[0], (*q)[1], (*q)[2], (*q)[3]);
}

void print_element(const CliConfig& cfg, const GQuat& x, const char* branch) {
    if (cfg.format == "json") {
        std::printf("%s\n", to_json(x, branch).c_str());
    } else if (branch[0] != 'n') {
        std::printf("%s branch=%s\n", format_quad(x).c_str(), branch);
    } else {
        std::printf("%s\n", format_quad(x).c_str());
    }
}

void run_mul(const CliConfig& cfg, const std::vector<std::string>& operands) {
    const AlgebraParams p = checked_params(cfg);
    const GQuat r = mul(parse_element(p, operands[0]), parse_element(p, operands[1]));
    print_element(cfg, r, "n/a");
}

void run_exp(const CliConfig& cfg, const std::vector<std::string>& operands) {
    const AlgebraParams p = checked_params(cfg);
    const GQuat r = exp(parse_element(p, operands[0]));
    print_element(cfg, r, "n/a");
}

void run_log(const CliConfig& cfg, const std::vector<std::string>& operands) {
    const AlgebraParams p = checked_params(cfg);
    const GQuat x = parse_element(p, operands[0]);
    const GQuat r = log(x);
    print_element(cfg, r, branch_label(log_branch(x)));
}

// Basis products are at most one term c * e_k; render that term.
std::string table_entry_text(const GQuat& p) {
    const auto c = p.coeffs();
    for (int k = 0; k < 4; ++k) {
        if (c[k] == 0.0)
            continue;
        const std::string basis = "e" + std::to_string(k + 1);
        if (c[k] == 1.0)
            return basis;
        if (c[k] == -1.0)
            return "-" + basis;
        return format_double(c[k]) + basis;
    }
    return "0";
}

GQuat basis_element(const AlgebraParams& p, int k) {
    GQuat b = zero(p);
    switch (k) {
    case 0:
        b.a1 = 1.0;
        break;
    case 1:
        b.a2 = 1.0;
        break;
    case 2:
        b.a3 = 1.0;
        break;
    default:
        b.a4 = 1.0;
    }
    return b;
}

void run_table(const CliConfig& cfg) {
    const AlgebraParams p = checked_params(cfg);
    GQuat basis[4];
    for (int i = 0; i < 4; ++i)
        basis[i] = basis_element(p, i);
    if (cfg.format == "json") {
        std::string s = "{\"alpha\":" + format_double(p.alpha) +
                        ",\"beta\":" + format_double(p.beta) + ",\"table\":[";
        for (int i = 0; i < 4; ++i) {
            s += i ? ",[" : "[";
            for (int j = 0; j < 4; ++j) {
                const GQuat prod = mul(basis[i], basis[j]);
                const auto c = prod.coeffs();
                double coeff = 0.0;
                int target = 0; // 0 marks a vanished entry
                for (int k = 0; k < 4; ++k)
                    if (c[k] != 0.0) {
                        coeff = c[k];
                        target = k + 1;
                    }
                s += j ? "," : "";
                s += "{\"coeff\":" + format_double(coeff) +
                     ",\"basis\":" + std::to_string(target) + "}";
            }
            s += "]";
        }
        s += "]}";
        std::printf("%s\n", s.c_str());
        return;
    }
    std::printf("H(%s,%s) basis products, row times column\n",
                format_double(p.alpha).c_str(), format_double(p.beta).c_str());
    std::printf("     \te1\te2\te3\te4\n");
    for (int i = 0; i < 4; ++i) {
        std::printf("e%d   ", i + 1);
        for (int j = 0; j < 4; ++j)
            std::printf("\t%s", table_entry_text(mul(basis[i], basis[j])).c_str());
        std::printf("\n");
    }
}

int run_verify(const CliConfig& cfg) {
    if (cfg.rel_tol == 0.0 && cfg.abs_tol == 0.0)
        throw CLI::ValidationError("--rel-tol and --abs-tol must not both be zero");
    VerifyOptions opt;
    opt.samples = cfg.samples;
    opt.seed = cfg.seed;
    opt.round_trip = ToleranceConfig{cfg.rel_tol, cfg.abs_tol};
    const std::vector<CheckResult> results = run_battery(opt);
    const bool ok = all_passed(results);

    if (cfg.format == "json") {
        std::string s = "{\"seed\":" + std::to_string(cfg.seed) +
                        ",\"samples\":" + std::to_string(cfg.samples) + ",\"checks\":[";
        for (std::size_t i = 0; i < results.size(); ++i) {
            const CheckResult& r = results[i];
            s += i ? "," : "";
            s += "{\"name\":\"" + r.name + "\",\"samples\":" + std::to_string(r.samples) +
                 ",\"worst\":" + format_double(r.worst) +
                 ",\"bound\":" + format_double(r.tolerance) + ",\"direction\":\"" +
                 (r.exceed_bound ? ">" : "<=") + "\",\"passed\":" +
                 (r.passed ? "true" : "false") + "}";
        }
        s += "],\"passed\":";
        s += ok ? "true" : "false";
        s += "}";
        std::printf("%s\n", s.c_str());
    } else {
        std::printf("%-22s %8s %12s     %-12s %s\n", "check", "samples", "worst", "bound",
                    "result");
        for (const CheckResult& r : results)
            std::printf("%-22s %8d %12.3e %s %11.3e  %s\n", r.name.c_str(), r.samples,
                        r.worst, r.exceed_bound ? "> " : "<=", r.tolerance,
                        r.passed ? "PASS" : "FAIL");
        int passed = 0;
        for (const CheckResult& r : results)
            passed += r.passed ? 1 : 0;
        std::printf("verify: %d/%zu checks passed (samples=%d, seed=%llu)\n", passed,
                    results.size(), cfg.samples,
                    static_cast<unsigned long long>(cfg.seed));
    }
    return ok ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized quaternion calculator for H(alpha,beta)"};
    app.require_subcommand(1);

    CliConfig cfg;
    std::vector<std::string> operands;
    int rc = 0;

    CLI::App* mul_cmd = app.add_subcommand("mul", "multiply two elements");
    add_common(mul_cmd, cfg);
    mul_cmd->add_option("operands", operands, "two elements a1,a2,a3,a4")
        ->expected(2)
        ->required();
    mul_cmd->callback([&] { run_mul(cfg, operands); });

    CLI::App* exp_cmd = app.add_subcommand("exp", "closed-form exponential");
    add_common(exp_cmd, cfg);
    exp_cmd->add_option("operands", operands, "element a1,a2,a3,a4")
        ->expected(1)
        ->required();
    exp_cmd->callback([&] { run_exp(cfg, operands); });

    CLI::App* log_cmd = app.add_subcommand("log", "principal logarithm");
    add_common(log_cmd, cfg);
    log_cmd->add_option("operands", operands, "element a1,a2,a3,a4")
        ->expected(1)
        ->required();
    log_cmd->callback([&] { run_log(cfg, operands); });

    CLI::App* table_cmd = app.add_subcommand("table", "print the basis product table");
    add_common(table_cmd, cfg);
    table_cmd->callback([&] { run_table(cfg); });

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "run the property battery against the oracles");
    add_common(verify_cmd, cfg);
    verify_cmd->add_option("--rel-tol", cfg.rel_tol, "round-trip relative tolerance")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    verify_cmd->add_option("--abs-tol", cfg.abs_tol, "round-trip absolute tolerance")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    verify_cmd->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
    verify_cmd->add_option("--samples", cfg.samples, "cases per check")
        ->check(CLI::Range(1, 100000000))
        ->capture_default_str();
    verify_cmd->callback([&] { rc = run_verify(cfg); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::fprintf(stderr, "ParseError: %s\n", e.what());
        return 2;
    } catch (const genquat::Error& e) {
        std::fprintf(stderr, "%s: %s\n", e.name(), e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return rc;
}
