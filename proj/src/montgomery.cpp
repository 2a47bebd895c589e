#include "fracq/montgomery.hpp"

#include <algorithm>
#include <cmath>

#include "fracq/errors.hpp"

namespace fracq {

namespace {

void require_inside(const Interval& iv, double v, const char* what) {
    if (!iv.contains(v))
        throw DomainError(std::string(what) + " must lie in [a, b]");
}

void require_same_domain(const TestFunction& f, const Density& d) {
    if (!(f.domain == d.domain))
        throw DomainError("density domain must match the function domain");
}

// The factor (b-a)^(alpha-1) is evaluated as written even for alpha < 1,
// so intervals short enough to make it explode are rejected outright.
void require_nondegenerate(const Interval& iv) {
    if (iv.length() <= 1e-6)
        throw DomainError("interval is degenerate (b - a <= 1e-6)");
}

} // namespace

double IdentitySides::scaled_residual() const {
    return std::abs(lhs - rhs) / (1.0 + std::max(std::abs(lhs), std::abs(rhs)));
}

double peano_kernel(const Interval& iv, double t, double s) {
    require_inside(iv, t, "peano_kernel: t");
    require_inside(iv, s, "peano_kernel: s");
    // At s = t the second branch applies.
    if (s < t) return (s - iv.a) / iv.length();
    return (s - iv.b) / iv.length();
}

double weighted_kernel(const Density& d, double x, double t) {
    require_inside(d.domain, x, "weighted_kernel: x");
    require_inside(d.domain, t, "weighted_kernel: t");
    if (t < x) return d.W(t);
    return d.W(t) - 1.0;
}

double montgomery_residual(const TestFunction& f, double t, double tol) {
    const Interval& iv = f.domain;
    require_inside(iv, t, "montgomery_residual: t");
    const double len = iv.length();

    const double mean = integrate(f.f, iv, tol).value / len;

    double kernel_term = 0.0;
    if (t > iv.a) {
        auto g = [&f, &iv, len](double s) { return (s - iv.a) / len * f.df(s); };
        kernel_term += integrate(g, Interval(iv.a, t), tol).value;
    }
    if (t < iv.b) {
        auto g = [&f, &iv, len](double s) { return (s - iv.b) / len * f.df(s); };
        kernel_term += integrate(g, Interval(t, iv.b), tol).value;
    }
    return f.f(t) - (mean + kernel_term);
}

double weighted_montgomery_residual(const TestFunction& f, const Density& d,
                                    double x, double tol) {
    require_same_domain(f, d);
    const Interval& iv = f.domain;
    require_inside(iv, x, "weighted_montgomery_residual: x");

    auto wf = [&](double t) { return d.w(t) * f.f(t); };
    const double weighted_mean = integrate(wf, iv, tol).value;

    double kernel_term = 0.0;
    if (x > iv.a) {
        auto g = [&](double s) { return d.W(s) * f.df(s); };
        kernel_term += integrate(g, Interval(iv.a, x), tol).value;
    }
    if (x < iv.b) {
        auto g = [&](double s) { return (d.W(s) - 1.0) * f.df(s); };
        kernel_term += integrate(g, Interval(x, iv.b), tol).value;
    }
    return f.f(x) - (weighted_mean + kernel_term);
}

std::vector<IdentitySides> interchange_lemma_sides(const TestFunction& f,
                                                   double alpha,
                                                   const Density* d,
                                                   double tol) {
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw DomainError("interchange lemmas require alpha > 0");
    if (d) require_same_domain(f, *d);

    const Interval& iv = f.domain;
    const double a = iv.a;
    const double b = iv.b;
    const double len = iv.length();
    const double len_alpha = std::pow(len, alpha);
    const double inner_tol = tol / 10.0;

    std::vector<IdentitySides> out;

    // Outer weight against the plain mean term: the inner integral does not
    // depend on t, so it is evaluated once.
    const double int_f = integrate(f.f, iv, tol).value;
    {
        auto constant = [int_f](double) { return int_f; };
        const double lhs = integrate_weighted_right(constant, iv, alpha, tol).value;
        const double rhs = len_alpha / alpha * int_f;
        out.push_back({lhs, rhs});
    }

    // Single integrals shared by the right-hand sides. The weight exponent
    // alpha in (b-s)^alpha corresponds to order alpha+1 of the weighted rule.
    const double int_df_alpha =
        integrate_weighted_right(f.df, iv, alpha + 1.0, tol).value;
    const double int_df_alpha1 =
        integrate_weighted_right(f.df, iv, alpha + 2.0, tol).value;
    const double int_df_linear =
        integrate_weighted_right(f.df, iv, 2.0, tol).value;

    // Outer weight against the rising kernel branch.
    {
        auto inner = [&](double t) {
            if (!(t > a)) return 0.0;
            auto g = [&f, a](double s) { return (s - a) * f.df(s); };
            return integrate(g, Interval(a, std::min(t, b)), inner_tol).value;
        };
        const double lhs = integrate_weighted_right(inner, iv, alpha, tol).value;
        const double rhs = (len * int_df_alpha - int_df_alpha1) / alpha;
        out.push_back({lhs, rhs});
    }

    // Outer weight against the falling kernel branch.
    {
        auto inner = [&](double t) {
            if (!(t < b)) return 0.0;
            auto g = [&f, b](double s) { return (s - b) * f.df(s); };
            return integrate(g, Interval(std::max(t, a), b), inner_tol).value;
        };
        const double lhs = integrate_weighted_right(inner, iv, alpha, tol).value;
        const double rhs = (int_df_alpha1 - len_alpha * int_df_linear) / alpha;
        out.push_back({lhs, rhs});
    }

    if (d) {
        // Weighted mean term.
        const double int_wf =
            integrate([&](double s) { return d->w(s) * f.f(s); }, iv, tol).value;
        {
            auto constant = [int_wf](double) { return int_wf; };
            const double lhs =
                integrate_weighted_right(constant, iv, alpha, tol).value;
            const double rhs = len_alpha / alpha * int_wf;
            out.push_back({lhs, rhs});
        }

        // W f' term.
        {
            auto inner = [&](double t) {
                if (!(t > a)) return 0.0;
                auto g = [&](double s) { return d->W(s) * f.df(s); };
                return integrate(g, Interval(a, std::min(t, b)), inner_tol).value;
            };
            const double lhs =
                integrate_weighted_right(inner, iv, alpha, tol).value;
            auto g = [&](double s) { return d->W(s) * f.df(s); };
            const double rhs =
                integrate_weighted_right(g, iv, alpha + 1.0, tol).value / alpha;
            out.push_back({lhs, rhs});
        }
    }

    return out;
}

std::vector<double> interchange_lemma_residuals(const TestFunction& f,
                                                double alpha, const Density* d,
                                                double tol) {
    std::vector<double> out;
    for (const auto& sides : interchange_lemma_sides(f, alpha, d, tol))
        out.push_back(sides.residual());
    return out;
}

IdentitySides identity_z_sides(const TestFunction& f, double alpha, double tol) {
    if (!(alpha >= 0.0) || !std::isfinite(alpha))
        throw DomainError("identity_z_sides: alpha must be >= 0");
    const Interval& iv = f.domain;
    require_nondegenerate(iv);

    const double len_am1 = std::pow(iv.length(), alpha - 1.0);
    const double j = rl_integral_result(f.f, iv, FracOrder(alpha), iv.b, tol).value;
    const double int_f = integrate(f.f, iv, tol).value;
    const double lhs = gamma(alpha + 1.0) * j - len_am1 * int_f;

    const double int_df_alpha =
        integrate_weighted_right(f.df, iv, alpha + 1.0, tol).value;
    const double int_df_linear =
        integrate_weighted_right(f.df, iv, 2.0, tol).value;
    const double rhs = int_df_alpha - len_am1 * int_df_linear;

    return {lhs, rhs};
}

IdentitySides identity_z1_sides(const TestFunction& f, const Density& d,
                                double alpha, double tol) {
    if (!(alpha >= 0.0) || !std::isfinite(alpha))
        throw DomainError("identity_z1_sides: alpha must be >= 0");
    require_same_domain(f, d);
    const Interval& iv = f.domain;

    const double len_alpha = std::pow(iv.length(), alpha);
    const double j = rl_integral_result(f.f, iv, FracOrder(alpha), iv.b, tol).value;
    const double int_wf =
        integrate([&](double s) { return d.w(s) * f.f(s); }, iv, tol).value;
    const double lhs = gamma(alpha + 1.0) * j - len_alpha * int_wf;

    const double int_w1df =
        integrate([&](double s) { return (d.W(s) - 1.0) * f.df(s); }, iv, tol).value;
    const double int_df_alpha =
        integrate_weighted_right(f.df, iv, alpha + 1.0, tol).value;
    const double rhs = len_alpha * int_w1df + int_df_alpha;

    return {lhs, rhs};
}

} // namespace fracq
