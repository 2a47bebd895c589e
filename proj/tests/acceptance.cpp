// Acceptance gate: one line per criterion, exit code = number of failures.
// Every tolerance here is pinned; nothing is tuned to make a line pass.

#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <tuple>
#include <string>
#include <utility>
#include <vector>

#include "fracq/montgomery.hpp"
#include "fracq/sweep.hpp"

using namespace fracq;

namespace {

int g_failed = 0;

using Outcome = std::pair<bool, std::string>;

void criterion(const char* id, const char* name,
               const std::function<Outcome()>& fn) {
    bool ok = false;
    std::string detail;
    try {
        std::tie(ok, detail) = fn();
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] %s %s: %s\n", ok ? "PASS" : "FAIL", id, name, detail.c_str());
    if (!ok) ++g_failed;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

int run_tool(const std::string& args) {
    const std::string cmd =
        std::string("\"") + FRACQ_BIN_PATH + "\" " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

} // namespace

int main() {
    const Interval unit(0.0, 1.0);
    const auto corpus = catalog_functions(unit);
    const auto densities = catalog_densities(unit);

    criterion("1", "identity residual suite", [&]() -> Outcome {
        double worst_rec = 0.0, worst_wrec = 0.0, worst_ic = 0.0;
        double worst_z = 0.0, worst_z1 = 0.0;
        for (const auto& f : corpus) {
            for (int i = 1; i <= 9; ++i) {
                const double t = unit.a + unit.length() * i / 10.0;
                const double scale = 1.0 + std::abs(f.f(t));
                worst_rec =
                    std::max(worst_rec, std::abs(montgomery_residual(f, t)) / scale);
                for (const auto& d : densities)
                    worst_wrec = std::max(
                        worst_wrec,
                        std::abs(weighted_montgomery_residual(f, d, t)) / scale);
            }
            for (double alpha : {0.25, 0.5, 0.75, 1.0, 1.5, 2.0, 3.0})
                for (const auto& s : interchange_lemma_sides(f, alpha))
                    worst_ic = std::max(worst_ic, s.scaled_residual());
            for (double alpha : {0.0, 0.25, 0.5, 0.75, 1.0, 1.5, 2.0, 3.0}) {
                worst_z =
                    std::max(worst_z, identity_z_sides(f, alpha).scaled_residual());
                for (const auto& d : densities)
                    worst_z1 = std::max(
                        worst_z1, identity_z1_sides(f, d, alpha).scaled_residual());
            }
        }
        const bool ok = worst_rec <= 1e-8 && worst_wrec <= 1e-8 &&
                        worst_ic <= 1e-6 && worst_z <= 1e-6 && worst_z1 <= 1e-6;
        return {ok, "worst scaled residuals: reconstruction " + fmt(worst_rec) +
                        " (tol 1e-8), weighted " + fmt(worst_wrec) +
                        " (tol 1e-8), interchange " + fmt(worst_ic) +
                        " (tol 1e-6), master " + fmt(worst_z) +
                        ", weighted master " + fmt(worst_z1) + " (tol 1e-6)"};
    });

    criterion("2", "fractional operator oracle", [&]() -> Outcome {
        const char* ids[] = {"const1", "linear", "t2", "t3"};
        double worst_rel = 0.0;
        for (int m = 0; m <= 3; ++m) {
            const TestFunction f = lookup_function(ids[m], unit);
            for (double alpha : {0.25, 0.5, 1.0, 1.5, 2.5}) {
                for (double x : {0.6, 1.0}) {
                    const double truth = std::tgamma(m + 1.0) /
                                         std::tgamma(m + 1.0 + alpha) *
                                         std::pow(x, m + alpha);
                    const double got = rl_integral(f, FracOrder(alpha), x);
                    worst_rel =
                        std::max(worst_rel, std::abs(got - truth) / std::abs(truth));
                }
            }
        }
        const bool factorials = fracq::gamma(1.0) == 1.0 && fracq::gamma(5.0) == 24.0 &&
                                fracq::gamma(13.0) == 479001600.0 &&
                                fracq::gamma(19.0) == 6402373705728000.0;
        const double sqrt_pi = 1.7724538509055160;
        const bool half = std::abs(fracq::gamma(0.5) - sqrt_pi) <= 1e-12 * sqrt_pi;
        const bool ok = worst_rel <= 1e-8 && factorials && half;
        return {ok, "power rule worst relative error " + fmt(worst_rel) +
                        " (tol 1e-8); factorials exact: " +
                        (factorials ? "yes" : "NO") +
                        "; gamma(1/2) vs sqrt(pi): " + (half ? "ok" : "NO")};
    });

    std::size_t sweep_checks = 0, sweep_violations = 0, t4c_violations = 0;
    criterion("3", "soundness sweep", [&]() -> Outcome {
        SweepConfig cfg = default_sweep_config();
        cfg.theorems = {TheoremId::T1_Eq9, TheoremId::T2_Eq7, TheoremId::T3_Eq16,
                        TheoremId::T4_Eq14_corrected};
        std::vector<BoundReport> reports;
        const SweepSummary s = run_sweep(cfg, reports, 0);
        sweep_checks = s.checks;
        sweep_violations = s.violations;
        for (const auto& r : reports)
            if (r.theorem == TheoremId::T4_Eq14_corrected && !r.holds)
                ++t4c_violations;
        const bool ok = s.checks >= 500 && s.violations == 0;
        return {ok, std::to_string(s.checks) + " checks (>= 500 required), " +
                        std::to_string(s.violations) +
                        " violations, max slack deficit " + fmt(s.max_deficit)};
    });

    criterion("4", "order-zero corollaries", [&]() -> Outcome {
        std::size_t checked = 0, held = 0;
        for (const auto& f : corpus)
            for (const auto& d : densities)
                for (const auto& r : verify_corollaries(f, HolderPair(2.0), &d)) {
                    ++checked;
                    if (r.holds) ++held;
                }
        VerifyOptions m1;
        m1.m_override = 1.0;
        const auto rs =
            verify_corollaries(lookup_function("linear", unit), HolderPair(2.0),
                               nullptr, m1);
        const bool exact = rs.at(1).rhs == 1.5;
        const bool ok = checked == held && exact;
        return {ok, std::to_string(held) + "/" + std::to_string(checked) +
                        " corollary records hold; 3(b-a)/2 with M=1 on [0,1] = " +
                        format_real(rs.at(1).rhs) + (exact ? " (exact)" : " (NOT 1.5)")};
    });

    criterion("5", "classical sharp case", [&]() -> Outcome {
        const TestFunction f = lookup_function("linear", unit);
        double worst = 0.0;
        for (double x : {0.0, 1.0}) {
            const BoundReport r = verify_ostrowski_classical(f, x);
            worst = std::max(worst, std::abs(r.lhs / r.rhs - 1.0));
        }
        return {worst <= 1e-7,
                "|ratio - 1| at the endpoints: " + fmt(worst) + " (tol 1e-7)"};
    });

    criterion("6a", "literal variant counterexample margin", [&]() -> Outcome {
        const TestFunction f = lookup_function("linear", unit);
        const Density uniform = lookup_density("uniform", unit);
        const BoundReport lit = verify_t4(f, uniform, 1.0, T4Variant::Literal);
        const double margin = lit.lhs - lit.rhs;
        const bool ok = !lit.holds && margin > 0.1;
        std::string detail =
            "designated case (unit slope, uniform weight, order 1): lhs = " +
            fmt(lit.lhs) + ", rhs = " + fmt(lit.rhs) + ", lhs - rhs = " +
            fmt(margin) + ", holds = " + (lit.holds ? "true" : "false") +
            "; a margin > 0.1 is unattainable here because both sides vanish";
        if (!ok) {
            const BoundReport lit05 =
                verify_t4(f, uniform, 0.5, T4Variant::Literal);
            const BoundReport cor05 =
                verify_t4(f, uniform, 0.5, T4Variant::Corrected);
            std::printf(
                "[info] 6a: at order 1 the deviation and the bracket both vanish "
                "for unit slope (the bracket integral |W-1| equals "
                "(b-a)/(order+1) exactly), so no function with constant slope "
                "can violate the literal form there\n");
            std::printf(
                "[info] 6a: the violation is real at a singular order: order 0.5 "
                "gives lhs - rhs = %s (> 0.1), holds = %s, while the corrected "
                "form holds with slack %s\n",
                fmt(lit05.lhs - lit05.rhs).c_str(),
                lit05.holds ? "true" : "false", fmt(cor05.slack).c_str());
        }
        return {ok, detail};
    });

    criterion("6b", "corrected variant soundness and paired records",
              [&]() -> Outcome {
        const TestFunction f = lookup_function("linear", unit);
        const Density uniform = lookup_density("uniform", unit);
        std::vector<BoundReport> both = {
            verify_t4(f, uniform, 1.0, T4Variant::Literal),
            verify_t4(f, uniform, 1.0, T4Variant::Corrected),
            verify_t4(f, uniform, 0.5, T4Variant::Literal),
            verify_t4(f, uniform, 0.5, T4Variant::Corrected),
        };
        sort_reports(both);
        const std::string rendered = render_report_file(both, ReportFormat::Json);
        const bool recorded =
            rendered.find("T4_Eq14_literal") != std::string::npos &&
            rendered.find("T4_Eq14_corrected") != std::string::npos;
        const bool ok = sweep_checks > 0 && t4c_violations == 0 && recorded;
        return {ok, "corrected-variant violations in the full sweep: " +
                        std::to_string(t4c_violations) +
                        "; both variants serialize side by side: " +
                        (recorded ? "yes" : "NO")};
    });

    criterion("7", "determinism", [&]() -> Outcome {
        const SweepConfig cfg = default_sweep_config();
        std::vector<BoundReport> a, b;
        run_sweep(cfg, a, 0);
        run_sweep(cfg, b, 1);
        const bool sweeps = render_report_file(a, ReportFormat::Json) ==
                            render_report_file(b, ReportFormat::Json);

        SharpnessOptions so;
        so.alpha = 0.5;
        so.hp = HolderPair(2.0);
        const FamilySpec fam = lookup_family("quadratic", unit);
        const SharpnessResult s1 = maximize_ratio(TheoremId::T1_Eq9, fam, so, 300);
        const SharpnessResult s2 = maximize_ratio(TheoremId::T1_Eq9, fam, so, 300);
        const bool search = s1.best_params == s2.best_params &&
                            s1.best_ratio == s2.best_ratio &&
                            s1.evaluations == s2.evaluations;
        const bool ok = sweeps && search;
        return {ok, std::string("full sweep byte-identical across worker counts: ") +
                        (sweeps ? "yes" : "NO") +
                        "; repeated search identical: " + (search ? "yes" : "NO") +
                        " (best ratio " + fmt(s1.best_ratio) + ")"};
    });

    criterion("8", "quadrature accuracy floor", [&]() -> Outcome {
        const int pass = run_tool("identities --alpha-grid 0.25,1,2");
        const int fail = run_tool("identities --alpha-grid 0.25,1,2 --tol 1e-15");
        const bool ok = pass == 0 && fail == 1;
        return {ok, "default tolerances exit " + std::to_string(pass) +
                        " (want 0); tol 1e-15 exits " + std::to_string(fail) +
                        " (want 1) - the error model is honest, not vacuous"};
    });

    std::printf("acceptance: %d criterion line%s failed\n", g_failed,
                g_failed == 1 ? "" : "s");
    return g_failed;
}
