#pragma once

#include <vector>

#include "fracq/fraccore.hpp"

namespace fracq {

/// Both sides of a numerically verified identity.
struct IdentitySides {
    double lhs = 0.0;
    double rhs = 0.0;

    double residual() const { return lhs - rhs; }
    /// |lhs - rhs| / (1 + max(|lhs|, |rhs|)), the scale used by every
    /// residual tolerance in this module.
    double scaled_residual() const;
};

/// Peano kernel P(t,s): (s-a)/(b-a) for s < t, (s-b)/(b-a) for s >= t.
/// At s = t the second branch applies.
double peano_kernel(const Interval& iv, double t, double s);

/// Weighted kernel P_w(x,t): W(t) for t < x, W(t)-1 for t >= x.
double weighted_kernel(const Density& d, double x, double t);

/// f(t) - [mean of f + kernel term]; zero up to quadrature error.
double montgomery_residual(const TestFunction& f, double t,
                           double tol = kDefaultTol);

/// f(x) - [weighted mean + weighted kernel term]; zero up to quadrature error.
double weighted_montgomery_residual(const TestFunction& f, const Density& d,
                                    double x, double tol = kDefaultTol);

/// The interchange-of-order lemmas as lhs/rhs pairs, alpha > 0.
///
/// Without a density the list holds the three plain lemmas (outer weight
/// (b-t)^(alpha-1) against the mean term and the two split kernel terms).
/// With a density, two more entries follow: the weighted mean term and the
/// W f' term. Left sides are iterated double integrals (inner quadrature ran
/// 10x tighter than the outer); right sides are the single-integral closed
/// forms obtained by interchanging the order of integration.
std::vector<IdentitySides> interchange_lemma_sides(const TestFunction& f,
                                                   double alpha,
                                                   const Density* d = nullptr,
                                                   double tol = kDefaultTol);

/// Raw residuals lhs - rhs of interchange_lemma_sides.
std::vector<double> interchange_lemma_residuals(const TestFunction& f,
                                                double alpha,
                                                const Density* d = nullptr,
                                                double tol = kDefaultTol);

/// Master identity, alpha >= 0:
///   lhs = Gamma(alpha+1) J_a^alpha f(b) - (b-a)^(alpha-1) integral of f
///   rhs = integral of (b-s)^alpha f'(s)
///         - (b-a)^(alpha-1) integral of (b-s) f'(s).
IdentitySides identity_z_sides(const TestFunction& f, double alpha,
                               double tol = kDefaultTol);

/// Weighted master identity, alpha >= 0:
///   lhs = Gamma(alpha+1) J_a^alpha f(b) - (b-a)^alpha integral of w f
///   rhs = (b-a)^alpha integral of (W(s)-1) f'(s)
///         + integral of (b-s)^alpha f'(s).
IdentitySides identity_z1_sides(const TestFunction& f, const Density& d,
                                double alpha, double tol = kDefaultTol);

} // namespace fracq
