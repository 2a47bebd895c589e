#include "fracq/bounds.hpp"

#include <cmath>

#include "fracq/errors.hpp"

namespace fracq {

namespace {

const char* kTheoremNames[] = {
    "T1_Eq9",      "T2_Eq7", "T3_Eq16", "T4_Eq14_literal", "T4_Eq14_corrected",
    "C1",          "C2",     "C3",      "C4",              "OstrowskiClassical",
};

void require_alpha(double alpha) {
    if (!(alpha >= 0.0) || !std::isfinite(alpha))
        throw DomainError("alpha must be a finite real >= 0");
}

void require_nondegenerate(const Interval& iv) {
    if (iv.length() <= 1e-6)
        throw DomainError("interval is degenerate (b - a <= 1e-6)");
}

void require_same_domain(const TestFunction& f, const Density& d) {
    if (!(f.domain == d.domain))
        throw DomainError("density domain must match the function domain");
}

BoundReport finish(BoundReport r) {
    r.slack = r.rhs - r.lhs;
    r.holds = r.slack >= -kSlackTol * (1.0 + std::abs(r.rhs));
    return r;
}

// |Gamma(alpha+1) J_a^alpha f(b) - (b-a)^(alpha-1) integral of f|, the
// quantity every plain bound controls. Accumulates scaled error estimates.
double scaled_deviation(const TestFunction& f, double alpha, double tol,
                        double* qerr) {
    const Interval& iv = f.domain;
    const QuadResult j = rl_integral_result(f.f, iv, FracOrder(alpha), iv.b, tol);
    const QuadResult int_f = integrate(f.f, iv, tol);
    const double g1 = gamma(alpha + 1.0);
    const double len_am1 = std::pow(iv.length(), alpha - 1.0);
    *qerr += g1 * j.error_estimate + len_am1 * int_f.error_estimate;
    return std::abs(g1 * j.value - len_am1 * int_f.value);
}

// |Gamma(alpha+1) J_a^alpha f(b) - (b-a)^alpha integral of w f|, the weighted
// counterpart.
double weighted_deviation(const TestFunction& f, const Density& d, double alpha,
                          double tol, double* qerr) {
    const Interval& iv = f.domain;
    const QuadResult j = rl_integral_result(f.f, iv, FracOrder(alpha), iv.b, tol);
    const QuadResult int_wf =
        integrate([&](double s) { return d.w(s) * f.f(s); }, iv, tol);
    const double g1 = gamma(alpha + 1.0);
    const double len_a = std::pow(iv.length(), alpha);
    *qerr += g1 * j.error_estimate + len_a * int_wf.error_estimate;
    return std::abs(g1 * j.value - len_a * int_wf.value);
}

// ||f'||_p with its raw integral error folded into *qerr.
double df_norm(const TestFunction& f, double p, double tol, double* qerr) {
    auto integrand = [&f, p](double s) { return std::pow(std::abs(f.df(s)), p); };
    const QuadResult r = integrate(integrand, f.domain, tol);
    *qerr += r.error_estimate;
    return std::pow(std::max(0.0, r.value), 1.0 / p);
}

double resolve_m(const TestFunction& f, const VerifyOptions& opt) {
    if (opt.m_override) return *opt.m_override;
    return sup_norm(f.df, f.domain);
}

} // namespace

std::string to_string(TheoremId id) { return kTheoremNames[static_cast<int>(id)]; }

TheoremId theorem_from_string(const std::string& name) {
    for (int i = 0; i < 10; ++i)
        if (name == kTheoremNames[i]) return static_cast<TheoremId>(i);
    throw DomainError("unknown theorem id: " + name);
}

std::vector<TheoremId> all_theorem_ids() {
    std::vector<TheoremId> out;
    for (int i = 0; i < 10; ++i) out.push_back(static_cast<TheoremId>(i));
    return out;
}

bool is_sound_variant(TheoremId id) { return id != TheoremId::T4_Eq14_literal; }

BoundReport verify_t1(const TestFunction& f, double alpha, const HolderPair& hp,
                      const VerifyOptions& opt) {
    require_alpha(alpha);
    require_nondegenerate(f.domain);
    double qerr = 0.0;
    const double lhs = scaled_deviation(f, alpha, opt.tol, &qerr);

    const double q = hp.q;
    const double norm = df_norm(f, hp.p, opt.tol, &qerr);
    const double len = f.domain.length();
    const double rhs = std::pow(len, alpha + 1.0 / q) *
                       (1.0 / std::pow(alpha * q + 1.0, 1.0 / q) +
                        1.0 / std::pow(q + 1.0, 1.0 / q)) *
                       norm;

    return finish({TheoremId::T1_Eq9, f.id, std::nullopt, f.domain, alpha, hp,
                   std::nullopt, lhs, rhs, 0.0, false, qerr});
}

BoundReport verify_t2(const TestFunction& f, double alpha,
                      const VerifyOptions& opt) {
    require_alpha(alpha);
    require_nondegenerate(f.domain);
    double qerr = 0.0;
    const double g1 = gamma(alpha + 1.0);
    const double lhs = scaled_deviation(f, alpha, opt.tol, &qerr) / g1;
    qerr /= g1;

    const double m = resolve_m(f, opt);
    const double len = f.domain.length();
    const double factor =
        (alpha + 3.0) * std::pow(len, alpha + 1.0) / (2.0 * gamma(alpha + 2.0));
    const double rhs = m * factor;

    return finish({TheoremId::T2_Eq7, f.id, std::nullopt, f.domain, alpha,
                   std::nullopt, m, lhs, rhs, 0.0, false, qerr});
}

BoundReport verify_t3(const TestFunction& f, const Density& d, double alpha,
                      const HolderPair& hp, const VerifyOptions& opt) {
    require_alpha(alpha);
    require_same_domain(f, d);
    double qerr = 0.0;
    const double lhs = weighted_deviation(f, d, alpha, opt.tol, &qerr);

    const double q = hp.q;
    const double norm = df_norm(f, hp.p, opt.tol, &qerr);
    const QuadResult wq = integrate(
        [&](double s) { return std::pow(std::abs(d.W(s) - 1.0), q); }, f.domain,
        opt.tol);
    qerr += wq.error_estimate;
    const double len = f.domain.length();
    const double rhs = norm * std::pow(len, alpha) *
                       (std::pow(std::max(0.0, wq.value), 1.0 / q) +
                        std::pow(len / (alpha * q + 1.0), 1.0 / q));

    return finish({TheoremId::T3_Eq16, f.id, d.id, f.domain, alpha, hp,
                   std::nullopt, lhs, rhs, 0.0, false, qerr});
}

BoundReport verify_t4(const TestFunction& f, const Density& d, double alpha,
                      T4Variant variant, const VerifyOptions& opt) {
    require_alpha(alpha);
    require_same_domain(f, d);
    double qerr = 0.0;
    const double lhs = weighted_deviation(f, d, alpha, opt.tol, &qerr);

    const double m = resolve_m(f, opt);
    const QuadResult w1 = integrate(
        [&](double s) { return std::abs(d.W(s) - 1.0); }, f.domain, opt.tol);
    qerr += w1.error_estimate;
    const double len = f.domain.length();
    const double tail = len / (alpha + 1.0);
    const double bracket =
        variant == T4Variant::Literal ? w1.value - tail : w1.value + tail;
    const double rhs = m * std::pow(len, alpha) * bracket;

    const TheoremId id = variant == T4Variant::Literal
                             ? TheoremId::T4_Eq14_literal
                             : TheoremId::T4_Eq14_corrected;
    return finish({id, f.id, d.id, f.domain, alpha, std::nullopt, m, lhs, rhs,
                   0.0, false, qerr});
}

std::vector<BoundReport> verify_corollaries(const TestFunction& f,
                                            const HolderPair& hp,
                                            const Density* d,
                                            const VerifyOptions& opt) {
    const Interval& iv = f.domain;
    const double len = iv.length();
    const double q = hp.q;
    const double fb = f.f(iv.b);

    std::vector<BoundReport> out;

    double mean_err = 0.0;
    const QuadResult int_f = integrate(f.f, iv, opt.tol);
    mean_err = int_f.error_estimate / len;
    const double plain_lhs = std::abs(fb - int_f.value / len);

    {
        double qerr = mean_err;
        const double norm = df_norm(f, hp.p, opt.tol, &qerr);
        const double rhs =
            std::pow(len, 1.0 / q) * (1.0 + 1.0 / std::pow(q + 1.0, 1.0 / q)) * norm;
        out.push_back(finish({TheoremId::C1, f.id, std::nullopt, iv, 0.0, hp,
                              std::nullopt, plain_lhs, rhs, 0.0, false, qerr}));
    }
    {
        const double m = resolve_m(f, opt);
        const double rhs = m * (1.5 * len);
        out.push_back(finish({TheoremId::C2, f.id, std::nullopt, iv, 0.0,
                              std::nullopt, m, plain_lhs, rhs, 0.0, false,
                              mean_err}));
    }

    if (!d) return out;
    require_same_domain(f, *d);

    const QuadResult int_wf =
        integrate([&](double s) { return d->w(s) * f.f(s); }, iv, opt.tol);
    const double weighted_lhs = std::abs(fb - int_wf.value);

    {
        double qerr = int_wf.error_estimate;
        const double norm = df_norm(f, hp.p, opt.tol, &qerr);
        const QuadResult wq = integrate(
            [&](double s) { return std::pow(std::abs(d->W(s) - 1.0), q); }, iv,
            opt.tol);
        qerr += wq.error_estimate;
        const double rhs = (std::pow(std::max(0.0, wq.value), 1.0 / q) +
                            std::pow(len, 1.0 / q)) *
                           norm;
        out.push_back(finish({TheoremId::C3, f.id, d->id, iv, 0.0, hp,
                              std::nullopt, weighted_lhs, rhs, 0.0, false, qerr}));
    }
    {
        double qerr = int_wf.error_estimate;
        const double m = resolve_m(f, opt);
        const QuadResult w1 = integrate(
            [&](double s) { return std::abs(d->W(s) - 1.0); }, iv, opt.tol);
        qerr += w1.error_estimate;
        const double rhs = m * (w1.value + len);
        out.push_back(finish({TheoremId::C4, f.id, d->id, iv, 0.0, std::nullopt,
                              m, weighted_lhs, rhs, 0.0, false, qerr}));
    }

    return out;
}

BoundReport verify_ostrowski_classical(const TestFunction& f, double x,
                                       const VerifyOptions& opt) {
    const Interval& iv = f.domain;
    if (!iv.contains(x))
        throw DomainError("verify_ostrowski_classical: x must lie in [a, b]");

    const double len = iv.length();
    const QuadResult int_f = integrate(f.f, iv, opt.tol);
    const double lhs = std::abs(f.f(x) - int_f.value / len);

    const double m = resolve_m(f, opt);
    const double centered = x - 0.5 * (iv.a + iv.b);
    const double bracket = 0.25 + centered * centered / (len * len);
    const double rhs = bracket * len * m;

    return finish({TheoremId::OstrowskiClassical, f.id, std::nullopt, iv, 0.0,
                   std::nullopt, m, lhs, rhs, 0.0, false,
                   int_f.error_estimate / len});
}

} // namespace fracq
