#pragma once

#include <cstdint>
#include <functional>
#include <utility>

#include "fracq/bounds.hpp"

namespace fracq {

/// Parametric family of test functions over a box of parameter vectors.
struct FamilySpec {
    std::string id;
    std::vector<std::pair<double, double>> parameter_box;
    std::function<TestFunction(const std::vector<double>&)> instantiate;
};

/// Families on the given domain, parameter boxes [-2,2] per coordinate:
/// "linear" (c t), "quadratic" (c1 t + c2 t^2), "cubic"
/// (c1 t + c2 t^2 + c3 t^3), "exp" (exp(c t)).
std::vector<FamilySpec> catalog_families(const Interval& domain = Interval(0.0, 1.0));
FamilySpec lookup_family(const std::string& id, const Interval& domain = Interval(0.0, 1.0));
std::vector<std::string> family_ids();

struct SharpnessResult {
    TheoremId theorem;
    std::string family;
    std::vector<double> best_params;
    double best_ratio = 0.0;
    std::int64_t evaluations = 0;
};

struct SharpnessOptions {
    double alpha = 1.0;
    std::optional<HolderPair> hp;
    const Density* d = nullptr;
    /// Evaluation point for the classical Ostrowski bound; defaults to b.
    std::optional<double> x;
    double tol = kDefaultTol;
};

/// lhs/rhs of the given bound for one concrete function; 0 when rhs = 0
/// (constant functions make both sides vanish).
double bound_ratio(TheoremId theorem, const TestFunction& f,
                   const SharpnessOptions& opts = {});

/// Maximizes bound_ratio over the family's parameter box: a fixed 48-point
/// Latin-grid scan, then compass pattern search (step halving, stop at step
/// < 1e-4 of the box width) around the top 3 scan points, within `budget`
/// ratio evaluations (budget >= 100). Deterministic; ties go to the
/// lexicographically smallest parameter vector. Throws BoundViolation if a
/// sound variant ever shows a ratio above 1 + 1e-7.
SharpnessResult maximize_ratio(TheoremId theorem, const FamilySpec& family,
                               const SharpnessOptions& opts,
                               std::int64_t budget);

} // namespace fracq
