#pragma once

#include <cstdint>
#include <functional>

#include "fracq/interval.hpp"

namespace fracq {

using RealFn = std::function<double(double)>;

/// Default absolute tolerance for every internal integral.
inline constexpr double kDefaultTol = 1e-10;

/// Default adaptive-subdivision budget, in integrand evaluations.
inline constexpr std::int64_t kDefaultMaxEvals = 1'000'000;

/// Result of an adaptive integration.
struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::int64_t evaluations = 0;
};

/// Conjugate exponents with 1/p + 1/q = 1, p > 1.
struct HolderPair {
    double p;
    double q;

    /// q is derived as p/(p-1).
    explicit HolderPair(double p_);
    HolderPair(double p_, double q_);
};

/// Adaptive Gauss-Kronrod (G7,K15) integration of g over iv.
///
/// Splits the worst panel first until the summed error estimate drops below
/// max(tol, 50*eps*resabs); throws NonConvergence if the evaluation budget
/// runs out before that. Exact to machine accuracy for polynomials of degree
/// <= 10 on a single panel.
QuadResult integrate(const RealFn& g, const Interval& iv, double tol,
                     std::int64_t max_evals = kDefaultMaxEvals);

/// How to handle the endpoint-singular weight in integrate_weighted_right.
enum class WeightRoute {
    Auto,          ///< Substitution for alpha < 1, direct otherwise.
    Substitution,  ///< u = (b-t)^alpha; the integrand becomes bounded.
    Direct,        ///< Integrate the weighted integrand as written.
};

/// Computes integral over [a,b] of (b-t)^(alpha-1) * g(t) dt, alpha > 0.
///
/// For 0 < alpha < 1 the weight blows up at t = b and the substitution
/// u = (b-t)^alpha is applied, giving
///   (1/alpha) * integral over [0,(b-a)^alpha] of g(b - u^(1/alpha)) du
/// with a bounded integrand. For alpha >= 1 direct integration is allowed;
/// both routes stay available for cross-checking.
QuadResult integrate_weighted_right(const RealFn& g, const Interval& iv,
                                    double alpha, double tol,
                                    WeightRoute route = WeightRoute::Auto,
                                    std::int64_t max_evals = kDefaultMaxEvals);

/// (integral of |df|^p over iv)^(1/p), p > 1, at internal tolerance tol.
double lp_norm(const RealFn& df, const Interval& iv, double p,
               double tol = kDefaultTol);

/// Estimate of sup |df| over iv: a 4097-point scan followed by golden-section
/// refinement around the top 5 local maxima down to width 1e-10*(b-a).
/// Always >= the sampled maximum; not a certified bound.
double sup_norm(const RealFn& df, const Interval& iv);

} // namespace fracq
