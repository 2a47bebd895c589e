#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "fracq/errors.hpp"
#include "fracq/montgomery.hpp"
#include "fracq/report.hpp"
#include "fracq/sweep.hpp"

namespace {

using namespace fracq;

std::optional<double> parse_real(const std::string& text) {
    if (text.empty()) return std::nullopt;
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size() || errno == ERANGE || !std::isfinite(v))
        return std::nullopt;
    return v;
}

Interval parse_interval(const std::string& text) {
    const auto comma = text.find(',');
    if (comma != std::string::npos) {
        const auto a = parse_real(text.substr(0, comma));
        const auto b = parse_real(text.substr(comma + 1));
        if (a && b) return Interval(*a, *b);
    }
    throw DomainError("interval must be given as \"a,b\", got \"" + text + "\"");
}

std::vector<double> parse_alpha_grid(const std::string& text) {
    std::vector<double> grid;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        const auto v = parse_real(text.substr(pos, comma - pos));
        if (!v || !(*v >= 0.0))
            throw DomainError("alpha grid entries must be reals >= 0, got \"" + text + "\"");
        grid.push_back(*v);
        pos = comma + 1;
    }
    return grid;
}

std::string theorem_list() {
    std::string s;
    for (TheoremId id : all_theorem_ids()) {
        if (!s.empty()) s += ", ";
        s += to_string(id);
    }
    return s;
}

bool needs_density(TheoremId th) {
    return th == TheoremId::T3_Eq16 || th == TheoremId::T4_Eq14_literal ||
           th == TheoremId::T4_Eq14_corrected || th == TheoremId::C3 ||
           th == TheoremId::C4;
}

struct VerifyArgs {
    std::string theorem;
    std::string function;
    std::string density;
    std::string interval_text = "0,1";
    double alpha = 0.0;
    double p = 2.0;
    std::optional<double> x;
    std::optional<double> tol;
};

int run_verify(const VerifyArgs& a, std::optional<double> env_tol) {
    const Interval iv = parse_interval(a.interval_text);
    const TestFunction f = lookup_function(a.function, iv);
    const TheoremId th = theorem_from_string(a.theorem);

    VerifyOptions vo;
    vo.tol = a.tol ? *a.tol : env_tol.value_or(kDefaultTol);

    std::optional<Density> d;
    if (!a.density.empty()) d = lookup_density(a.density, iv);
    if (needs_density(th) && !d)
        throw DomainError(to_string(th) + " needs --density");

    const HolderPair hp(a.p);
    auto corollary = [&](TheoremId which) {
        const Density* dp =
            (which == TheoremId::C3 || which == TheoremId::C4) ? &*d : nullptr;
        for (const auto& r : verify_corollaries(f, hp, dp, vo))
            if (r.theorem == which) return r;
        throw DomainError("corollary report missing");
    };

    const BoundReport r = [&]() -> BoundReport {
        switch (th) {
            case TheoremId::T1_Eq9:
                return verify_t1(f, a.alpha, hp, vo);
            case TheoremId::T2_Eq7:
                return verify_t2(f, a.alpha, vo);
            case TheoremId::T3_Eq16:
                return verify_t3(f, *d, a.alpha, hp, vo);
            case TheoremId::T4_Eq14_literal:
                return verify_t4(f, *d, a.alpha, T4Variant::Literal, vo);
            case TheoremId::T4_Eq14_corrected:
                return verify_t4(f, *d, a.alpha, T4Variant::Corrected, vo);
            case TheoremId::C1:
            case TheoremId::C2:
            case TheoremId::C3:
            case TheoremId::C4:
                return corollary(th);
            case TheoremId::OstrowskiClassical:
                return verify_ostrowski_classical(f, a.x.value_or(iv.b), vo);
        }
        throw DomainError("unknown theorem id");
    }();

    std::printf("%s\n", to_json(r).c_str());
    return r.holds ? 0 : 1;
}

struct SweepArgs {
    std::string config_path;
    std::string output;
    std::string format;
    int jobs = 0;
    bool include_literal = false;
    std::optional<double> tol;
};

int run_sweep_cmd(const SweepArgs& a, std::optional<double> env_tol) {
    SweepConfig config;
    if (!a.config_path.empty()) {
        std::ifstream in(a.config_path, std::ios::binary);
        if (!in) throw DomainError("cannot open config file: " + a.config_path);
        std::ostringstream ss;
        ss << in.rdbuf();
        config = parse_sweep_config(ss.str());
    } else {
        config = default_sweep_config();
    }

    if (a.include_literal) {
        bool present = false;
        for (TheoremId th : config.theorems)
            present = present || th == TheoremId::T4_Eq14_literal;
        if (!present) config.theorems.push_back(TheoremId::T4_Eq14_literal);
    }
    if (!a.output.empty()) config.output_path = a.output;
    if (!a.format.empty()) {
        if (a.format == "json")
            config.format = ReportFormat::Json;
        else if (a.format == "csv")
            config.format = ReportFormat::Csv;
        else
            throw DomainError("format must be \"json\" or \"csv\"");
    }
    if (a.tol)
        config.tol_override = *a.tol;
    else if (!config.tol_override && env_tol)
        config.tol_override = *env_tol;

    std::vector<BoundReport> reports;
    const SweepSummary summary = run_sweep(config, reports, a.jobs);
    // Render in memory first: a failed sweep never leaves a partial file.
    const std::string rendered = render_report_file(reports, config.format);

    std::ofstream out(config.output_path, std::ios::binary | std::ios::trunc);
    if (!out) throw DomainError("cannot open output file: " + config.output_path);
    out << rendered;
    out.flush();
    if (!out.good())
        throw DomainError("failed writing output file: " + config.output_path);

    std::printf("%zu checks, %zu violations, max |slack deficit| = %s\n",
                summary.checks, summary.violations,
                format_real(summary.max_deficit).c_str());
    return summary.violations == 0 ? 0 : 1;
}

struct IdentityRow {
    const char* name;
    double tol;
    double worst = 0.0;
};

int run_identities(const std::vector<double>& grid, std::optional<double> accept_tol,
                   double qtol) {
    if (grid.empty()) throw DomainError("alpha grid is empty");
    const Interval domain(0.0, 1.0);
    const auto funcs = catalog_functions(domain);
    const auto dens = catalog_densities(domain);

    enum { kMont, kWMont, kMean, kLower, kUpper, kWMean, kWKernel, kZ, kZ1, kRows };
    IdentityRow rows[kRows] = {
        {"montgomery", 1e-8},
        {"weighted_montgomery", 1e-8},
        {"interchange_mean", 1e-6},
        {"interchange_kernel_lower", 1e-6},
        {"interchange_kernel_upper", 1e-6},
        {"interchange_weighted_mean", 1e-6},
        {"interchange_weighted_kernel", 1e-6},
        {"identity_z", 1e-7},
        {"identity_z1", 1e-7},
    };
    auto record = [&](int row, double scaled) {
        rows[row].worst = std::max(rows[row].worst, scaled);
    };

    for (const auto& f : funcs) {
        for (int i = 1; i <= 9; ++i) {
            const double t = domain.a + (domain.b - domain.a) * (i / 10.0);
            const double scale = 1.0 + std::abs(f.f(t));
            record(kMont, std::abs(montgomery_residual(f, t, qtol)) / scale);
            for (const auto& d : dens)
                record(kWMont,
                       std::abs(weighted_montgomery_residual(f, d, t, qtol)) / scale);
        }
        for (double alpha : grid) {
            record(kZ, identity_z_sides(f, alpha, qtol).scaled_residual());
            for (const auto& d : dens)
                record(kZ1, identity_z1_sides(f, d, alpha, qtol).scaled_residual());
            if (alpha > 0.0) {
                const auto plain = interchange_lemma_sides(f, alpha, nullptr, qtol);
                record(kMean, plain[0].scaled_residual());
                record(kLower, plain[1].scaled_residual());
                record(kUpper, plain[2].scaled_residual());
                for (const auto& d : dens) {
                    const auto wsides = interchange_lemma_sides(f, alpha, &d, qtol);
                    record(kWMean, wsides[3].scaled_residual());
                    record(kWKernel, wsides[4].scaled_residual());
                }
            }
        }
    }

    int failures = 0;
    for (const auto& row : rows) {
        const double tol = accept_tol.value_or(row.tol);
        const bool ok = row.worst <= tol;
        if (!ok) ++failures;
        std::printf("%-28s max scaled residual = %.3e   tol = %.1e   %s\n",
                    row.name, row.worst, tol, ok ? "ok" : "FAIL");
    }
    if (failures == 0)
        std::printf("all identities within tolerance\n");
    else
        std::printf("%d identit%s exceeded tolerance\n", failures,
                    failures == 1 ? "y" : "ies");
    return failures == 0 ? 0 : 1;
}

struct SharpnessArgs {
    std::string theorem;
    std::string family;
    std::string density;
    double alpha = 1.0;
    double p = 2.0;
    std::optional<double> x;
    std::optional<double> tol;
    std::int64_t budget = 2000;
};

int run_sharpness(const SharpnessArgs& a, std::optional<double> env_tol) {
    const TheoremId th = theorem_from_string(a.theorem);
    const FamilySpec family = lookup_family(a.family);

    SharpnessOptions opts;
    opts.alpha = a.alpha;
    opts.hp = HolderPair(a.p);
    opts.x = a.x;
    opts.tol = a.tol ? *a.tol : env_tol.value_or(kDefaultTol);
    std::optional<Density> d;
    if (!a.density.empty()) {
        d = lookup_density(a.density, Interval(0.0, 1.0));
        opts.d = &*d;
    }

    const SharpnessResult result = maximize_ratio(th, family, opts, a.budget);
    std::printf("%s\n", to_json(result).c_str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    std::optional<double> env_tol;
    if (const char* env = std::getenv("FRACQ_DEFAULT_TOL")) {
        env_tol = parse_real(env);
        if (!env_tol || !(*env_tol > 0.0)) {
            std::fprintf(stderr,
                         "error: FRACQ_DEFAULT_TOL must be a positive real, got \"%s\"\n",
                         env);
            return 2;
        }
    }

    CLI::App app{"numerical verification of fractional-integral Ostrowski-type bounds"};
    app.require_subcommand(1);

    VerifyArgs va;
    CLI::App* verify =
        app.add_subcommand("verify", "check one bound instance and print its report");
    verify->add_option("--theorem", va.theorem, "one of: " + theorem_list())->required();
    verify->add_option("--function", va.function, "corpus function id")->required();
    verify->add_option("--density", va.density, "density id (weighted bounds)");
    verify->add_option("--alpha", va.alpha, "fractional order (default 0)");
    verify->add_option("--p", va.p, "Hoelder exponent p > 1 (default 2)");
    verify->add_option("--x", va.x, "evaluation point for OstrowskiClassical (default b)");
    verify->add_option("--interval", va.interval_text, "domain as \"a,b\" (default 0,1)");
    verify->add_option("--tol", va.tol, "quadrature tolerance");

    SweepArgs sa;
    CLI::App* sweep =
        app.add_subcommand("sweep", "verify a full grid and write a report file");
    sweep->add_option("--config", sa.config_path, "JSON sweep config path");
    sweep->add_option("--output", sa.output, "report path (overrides config)");
    sweep->add_option("--format", sa.format, "json or csv (overrides config)");
    sweep->add_option("--jobs", sa.jobs, "worker count (default: all processors)");
    sweep->add_flag("--include-literal", sa.include_literal,
                    "add T4_Eq14_literal to the theorem list");
    sweep->add_option("--tol", sa.tol, "quadrature tolerance override");

    std::string alpha_grid_text = "0,0.25,0.5,0.75,1,1.5,2,3";
    std::optional<double> id_tol;
    CLI::App* identities = app.add_subcommand(
        "identities", "run every identity residual suite over the corpus");
    identities->add_option("--alpha-grid", alpha_grid_text,
                           "comma-separated fractional orders");
    identities->add_option("--tol", id_tol,
                           "acceptance tolerance for every identity (default: per-identity)");

    SharpnessArgs ha;
    CLI::App* sharpness = app.add_subcommand(
        "sharpness", "maximize lhs/rhs of a bound over a function family");
    sharpness->add_option("--theorem", ha.theorem, "one of: " + theorem_list())->required();
    sharpness->add_option("--family", ha.family, "family id: linear, quadratic, cubic, exp")
        ->required();
    sharpness->add_option("--density", ha.density, "density id (weighted bounds)");
    sharpness->add_option("--alpha", ha.alpha, "fractional order (default 1)");
    sharpness->add_option("--p", ha.p, "Hoelder exponent p > 1 (default 2)");
    sharpness->add_option("--x", ha.x, "evaluation point for OstrowskiClassical");
    sharpness->add_option("--budget", ha.budget, "ratio evaluation budget (default 2000)");
    sharpness->add_option("--tol", ha.tol, "quadrature tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(verify)) return run_verify(va, env_tol);
        if (app.got_subcommand(sweep)) return run_sweep_cmd(sa, env_tol);
        if (app.got_subcommand(identities))
            return run_identities(parse_alpha_grid(alpha_grid_text), id_tol,
                                  env_tol.value_or(kDefaultTol));
        if (app.got_subcommand(sharpness)) return run_sharpness(ha, env_tol);
    } catch (const BoundViolation& e) {
        std::fprintf(stderr, "bound violation: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
