#pragma once

#include <string>
#include <vector>

#include "fracq/quadrature.hpp"

namespace fracq {

/// A differentiable function on [a,b] with evaluators for f and f'.
///
/// `antiderivative` is a closed-form primitive of f when one is available
/// (empty std::function otherwise); it exists purely so tests can cross-check
/// the evaluators against independent closed forms.
struct TestFunction {
    std::string id;
    Interval domain;
    RealFn f;
    RealFn df;
    RealFn antiderivative;
    std::string smoothness_note;
};

/// A probability density w on [a,b] with its CDF W.
/// W is defined on all of R: 0 below a, 1 above b.
struct Density {
    std::string id;
    Interval domain;
    RealFn w;
    RealFn W;
};

/// The compiled-in corpus on the given domain:
/// monomials t^k for k = 0..5 ("const1", "linear", "t2".."t5"), "exp",
/// "sinpi" (sin of pi*t), "pow32" ((t-a)^{3/2}, whose derivative lies in
/// every L_p), and "cubic" ((t-a)^3 - (b-a)^2 (t-a), interior extremum).
std::vector<TestFunction> catalog_functions(const Interval& domain = Interval(0.0, 1.0));

/// Densities on the given domain: "uniform", "linear" (2(t-a)/(b-a)^2),
/// "truncexp" (exponential with rate 2/(b-a), renormalized to [a,b]).
std::vector<Density> catalog_densities(const Interval& domain);

/// Catalog lookup by id; throws DomainError for unknown ids.
TestFunction lookup_function(const std::string& id, const Interval& domain = Interval(0.0, 1.0));
Density lookup_density(const std::string& id, const Interval& domain = Interval(0.0, 1.0));

/// Ids in catalog order, for CLI validation and report plumbing.
std::vector<std::string> function_ids();
std::vector<std::string> density_ids();

} // namespace fracq
