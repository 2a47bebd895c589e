#pragma once

#include "fracq/functions.hpp"

namespace fracq {

/// Regularity class of the fractional order.
enum class AlphaClass {
    Zero,      ///< alpha = 0: the operator is the identity, a hard branch.
    Singular,  ///< 0 < alpha < 1: the kernel (x-t)^(alpha-1) is singular.
    Regular,   ///< alpha >= 1: bounded kernel.
};

/// Fractional order alpha >= 0 together with its regularity class.
struct FracOrder {
    double alpha;
    AlphaClass cls;

    explicit FracOrder(double alpha_);
};

/// Gamma function for x > 0; relative error <= 1e-12 on (0, 50].
/// Integer arguments go through an exact factorial loop.
double gamma(double x);

/// Riemann-Liouville integral J_a^alpha f(x) for x in (a, b].
///
/// alpha = 0 returns f(x) exactly (the operator is defined as the identity
/// at order zero, not obtained as a limit). For alpha > 0 the value is
/// (1/Gamma(alpha)) * integral over [a,x] of (x-t)^(alpha-1) f(t) dt.
double rl_integral(const TestFunction& f, const FracOrder& order, double x,
                   double tol = kDefaultTol);

/// Same operator for a bare evaluator; iv.a is the base point and x must lie
/// in (iv.a, iv.b]. Returns the value with its quadrature error estimate
/// (both already divided by Gamma(alpha); zero error for the alpha = 0 branch).
QuadResult rl_integral_result(const RealFn& f, const Interval& iv,
                              const FracOrder& order, double x,
                              double tol = kDefaultTol);

} // namespace fracq
