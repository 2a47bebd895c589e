#include "fracq/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <queue>
#include <vector>

#include "fracq/errors.hpp"

namespace fracq {

namespace {

// 15-point Kronrod abscissae on [-1,1] (positive half) with the embedded
// 7-point Gauss rule at the odd indices.
constexpr double xgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};

constexpr double wgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};

constexpr double wg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Panel {
    double lo = 0.0;
    double hi = 0.0;
    double value = 0.0;
    double error = 0.0;
    double resabs = 0.0;
};

// One G7/K15 application. The error estimate follows the classic QUADPACK
// scaling: the raw Gauss/Kronrod difference is damped against the second
// central moment resasc and floored at 50 eps * resabs.
Panel eval_panel(const RealFn& g, double lo, double hi) {
    const double c = 0.5 * (lo + hi);
    const double h = 0.5 * (hi - lo);

    const double fc = g(c);
    double fv1[7];
    double fv2[7];
    double resg = wg[3] * fc;
    double resk = wgk[7] * fc;
    double resabs = wgk[7] * std::abs(fc);
    for (int j = 0; j < 7; ++j) {
        const double dx = h * xgk[j];
        fv1[j] = g(c - dx);
        fv2[j] = g(c + dx);
        const double sum = fv1[j] + fv2[j];
        resk += wgk[j] * sum;
        resabs += wgk[j] * (std::abs(fv1[j]) + std::abs(fv2[j]));
        if (j % 2 == 1) resg += wg[(j - 1) / 2] * sum;
    }

    const double mean = 0.5 * resk;
    double resasc = wgk[7] * std::abs(fc - mean);
    for (int j = 0; j < 7; ++j)
        resasc += wgk[j] * (std::abs(fv1[j] - mean) + std::abs(fv2[j] - mean));

    resk *= h;
    resg *= h;
    resabs *= h;
    resasc *= h;

    double err = std::abs(resk - resg);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    if (resabs > std::numeric_limits<double>::min() / (50.0 * kEps))
        err = std::max(50.0 * kEps * resabs, err);

    if (!std::isfinite(resk) || !std::isfinite(resabs))
        throw DomainError("integrate: integrand produced a non-finite value");

    return {lo, hi, resk, err, resabs};
}

struct WorsePanel {
    bool operator()(const Panel& x, const Panel& y) const { return x.error < y.error; }
};

} // namespace

QuadResult integrate(const RealFn& g, const Interval& iv, double tol,
                     std::int64_t max_evals) {
    if (!g) throw DomainError("integrate: empty integrand");
    if (!(tol > 0.0) || !std::isfinite(tol))
        throw DomainError("integrate: tol must be a positive real");

    std::priority_queue<Panel, std::vector<Panel>, WorsePanel> heap;
    Panel whole = eval_panel(g, iv.a, iv.b);
    std::int64_t evals = 15;
    double total_value = whole.value;
    double total_error = whole.error;
    double total_resabs = whole.resabs;
    heap.push(whole);

    while (total_error > std::max(tol, 50.0 * kEps * total_resabs)) {
        if (evals + 30 > max_evals)
            throw NonConvergence("integrate: evaluation budget exhausted at error " +
                                 std::to_string(total_error));
        Panel worst = heap.top();
        // The dominant panel is pinned at its roundoff floor: splitting keeps
        // the floor (resabs is additive), so the estimate cannot improve.
        if (worst.error <= 50.0 * kEps * worst.resabs) break;
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (!(worst.lo < mid && mid < worst.hi))
            throw NonConvergence("integrate: worst panel is too narrow to split");
        heap.pop();

        Panel left = eval_panel(g, worst.lo, mid);
        Panel right = eval_panel(g, mid, worst.hi);
        evals += 30;
        total_value += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        total_resabs += left.resabs + right.resabs - worst.resabs;
        heap.push(left);
        heap.push(right);
    }

    return {total_value, total_error, evals};
}

QuadResult integrate_weighted_right(const RealFn& g, const Interval& iv,
                                    double alpha, double tol, WeightRoute route,
                                    std::int64_t max_evals) {
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw DomainError("integrate_weighted_right: alpha must be > 0");
    if (!g) throw DomainError("integrate_weighted_right: empty integrand");

    const bool substitute =
        route == WeightRoute::Substitution || (route == WeightRoute::Auto && alpha < 1.0);

    if (!substitute) {
        const double b = iv.b;
        const double e = alpha - 1.0;
        // Rounding can land a panel node exactly on b where the weight blows
        // up; that single point carries no mass, so sample it as zero.
        auto h = [&g, b, e](double t) {
            const double d = b - t;
            if (d <= 0.0) return e == 0.0 ? g(b) : 0.0;
            return std::pow(d, e) * g(t);
        };
        return integrate(h, iv, tol, max_evals);
    }

    // u = (b-t)^alpha turns the weight into du/alpha; the mapped argument is
    // clamped back into [a,b] against rounding in u^(1/alpha) at the ends.
    const double a = iv.a;
    const double b = iv.b;
    const double upper = std::pow(b - a, alpha);
    const double inv_alpha = 1.0 / alpha;
    auto h = [&g, a, b, inv_alpha](double u) {
        double t = b - std::pow(u, inv_alpha);
        if (t < a) t = a;
        if (t > b) t = b;
        return g(t);
    };
    QuadResult inner = integrate(h, Interval(0.0, upper), tol * alpha, max_evals);
    return {inner.value * inv_alpha, inner.error_estimate * inv_alpha, inner.evaluations};
}

double lp_norm(const RealFn& df, const Interval& iv, double p, double tol) {
    if (!(p > 1.0) || !std::isfinite(p)) throw DomainError("lp_norm: requires p > 1");
    auto integrand = [&df, p](double s) { return std::pow(std::abs(df(s)), p); };
    QuadResult r = integrate(integrand, iv, tol);
    return std::pow(std::max(0.0, r.value), 1.0 / p);
}

double sup_norm(const RealFn& df, const Interval& iv) {
    if (!df) throw DomainError("sup_norm: empty integrand");
    constexpr int kScanPoints = 4097;
    const double len = iv.length();

    auto point = [&](int i) {
        if (i <= 0) return iv.a;
        if (i >= kScanPoints - 1) return iv.b;
        return iv.a + len * static_cast<double>(i) / (kScanPoints - 1);
    };
    auto magnitude = [&df](double t) { return std::abs(df(t)); };

    std::vector<double> vals(kScanPoints);
    for (int i = 0; i < kScanPoints; ++i) vals[i] = magnitude(point(i));

    double best = 0.0;
    for (double v : vals) best = std::max(best, v);

    std::vector<std::pair<double, int>> peaks;
    for (int i = 0; i < kScanPoints; ++i) {
        const bool left_ok = i == 0 || vals[i] >= vals[i - 1];
        const bool right_ok = i == kScanPoints - 1 || vals[i] >= vals[i + 1];
        if (left_ok && right_ok) peaks.push_back({vals[i], i});
    }
    std::sort(peaks.begin(), peaks.end(), [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first > y.first;
        return x.second < y.second;
    });
    if (peaks.size() > 5) peaks.resize(5);

    constexpr double kGolden = 0.6180339887498949;
    const double width_goal = 1e-10 * len;
    for (const auto& [val, idx] : peaks) {
        double lo = point(std::max(0, idx - 1));
        double hi = point(std::min(kScanPoints - 1, idx + 1));
        double c = hi - kGolden * (hi - lo);
        double d = lo + kGolden * (hi - lo);
        double fc = magnitude(c);
        double fd = magnitude(d);
        best = std::max({best, fc, fd});
        while (hi - lo > width_goal) {
            if (fc > fd) {
                hi = d;
                d = c;
                fd = fc;
                c = hi - kGolden * (hi - lo);
                fc = magnitude(c);
            } else {
                lo = c;
                c = d;
                fc = fd;
                d = lo + kGolden * (hi - lo);
                fd = magnitude(d);
            }
            best = std::max({best, fc, fd});
        }
    }
    return best;
}

HolderPair::HolderPair(double p_) : p(p_), q(p_ / (p_ - 1.0)) {
    if (!(p_ > 1.0) || !std::isfinite(p_))
        throw DomainError("HolderPair: requires p > 1");
}

HolderPair::HolderPair(double p_, double q_) : p(p_), q(q_) {
    if (!(p_ > 1.0) || !(q_ > 1.0) || !std::isfinite(p_) || !std::isfinite(q_))
        throw DomainError("HolderPair: requires p > 1 and q > 1");
    if (std::abs(1.0 / p_ + 1.0 / q_ - 1.0) > 1e-14)
        throw DomainError("HolderPair: 1/p + 1/q must equal 1");
}

} // namespace fracq
