#include "fracq/fraccore.hpp"

#include <cmath>

#include "fracq/errors.hpp"

namespace fracq {

FracOrder::FracOrder(double alpha_) : alpha(alpha_), cls(AlphaClass::Regular) {
    if (!(alpha_ >= 0.0) || !std::isfinite(alpha_))
        throw DomainError("FracOrder: alpha must be a finite real >= 0");
    if (alpha_ == 0.0)
        cls = AlphaClass::Zero;
    else if (alpha_ < 1.0)
        cls = AlphaClass::Singular;
}

double gamma(double x) {
    if (!(x > 0.0) || !std::isfinite(x))
        throw DomainError("gamma: requires x > 0");
    double ipart = 0.0;
    if (std::modf(x, &ipart) == 0.0 && x <= 171.0) {
        double acc = 1.0;
        for (double k = 2.0; k < x; k += 1.0) acc *= k;
        return acc;
    }
    return std::tgamma(x);
}

QuadResult rl_integral_result(const RealFn& f, const Interval& iv,
                              const FracOrder& order, double x, double tol) {
    if (!(x > iv.a) || !(x <= iv.b))
        throw DomainError("rl_integral: x must lie in (a, b]");
    if (order.cls == AlphaClass::Zero) return {f(x), 0.0, 1};

    const double g = gamma(order.alpha);
    QuadResult r =
        integrate_weighted_right(f, Interval(iv.a, x), order.alpha, tol * g);
    return {r.value / g, r.error_estimate / g, r.evaluations};
}

double rl_integral(const TestFunction& f, const FracOrder& order, double x,
                   double tol) {
    return rl_integral_result(f.f, f.domain, order, x, tol).value;
}

} // namespace fracq
