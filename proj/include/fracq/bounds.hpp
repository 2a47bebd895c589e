#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fracq/montgomery.hpp"

namespace fracq {

enum class TheoremId {
    T1_Eq9,
    T2_Eq7,
    T3_Eq16,
    T4_Eq14_literal,
    T4_Eq14_corrected,
    C1,
    C2,
    C3,
    C4,
    OstrowskiClassical,
};

std::string to_string(TheoremId id);
/// Throws DomainError for unknown names.
TheoremId theorem_from_string(const std::string& name);
std::vector<TheoremId> all_theorem_ids();
/// Every id except T4_Eq14_literal, whose right side can go negative.
bool is_sound_variant(TheoremId id);

/// Slack tolerance: a bound "holds" when slack >= -kSlackTol*(1+|rhs|).
inline constexpr double kSlackTol = 1e-7;

/// One verification record: both sides of an inequality plus the context
/// needed to reproduce it.
struct BoundReport {
    TheoremId theorem;
    std::string function_id;
    std::optional<std::string> density_id;
    Interval interval;
    double alpha = 0.0;
    std::optional<HolderPair> holder;
    std::optional<double> M;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    bool holds = false;
    double quadrature_error = 0.0;
};

struct VerifyOptions {
    double tol = kDefaultTol;
    /// Exact sup-bound M to use instead of the sup_norm estimate.
    std::optional<double> m_override;
};

/// |Gamma(a+1) J^a f(b) - (b-a)^(a-1) integral f|
///   <= (b-a)^(a+1/q) (1/(aq+1)^(1/q) + 1/(q+1)^(1/q)) ||f'||_p.
BoundReport verify_t1(const TestFunction& f, double alpha, const HolderPair& hp,
                      const VerifyOptions& opt = {});

/// |J^a f(b) - (b-a)^(a-1)/Gamma(a+1) integral f|
///   <= M (a+3) (b-a)^(a+1) / (2 Gamma(a+2)).
BoundReport verify_t2(const TestFunction& f, double alpha,
                      const VerifyOptions& opt = {});

/// |Gamma(a+1) J^a f(b) - (b-a)^a integral w f|
///   <= ||f'||_p (b-a)^a [(integral |W-1|^q)^(1/q) + ((b-a)/(aq+1))^(1/q)].
BoundReport verify_t3(const TestFunction& f, const Density& d, double alpha,
                      const HolderPair& hp, const VerifyOptions& opt = {});

enum class T4Variant {
    Literal,    ///< rhs = M (b-a)^a (integral |W-1| - (b-a)/(a+1)), as printed.
    Corrected,  ///< rhs = M (b-a)^a (integral |W-1| + (b-a)/(a+1)).
};

/// Same left side as verify_t3; the two right-side variants differ in the
/// sign of the (b-a)/(alpha+1) term. The literal variant is not a sound
/// bound (its right side can be negative) and is reported as-is.
BoundReport verify_t4(const TestFunction& f, const Density& d, double alpha,
                      T4Variant variant, const VerifyOptions& opt = {});

/// The four alpha = 0 corollaries, evaluated with J^0 f(b) = f(b):
/// C1/C2 from the plain bounds, C3/C4 from the weighted ones (skipped when
/// no density is supplied). C4 is the corrected weighted sup-norm bound at
/// alpha = 0.
std::vector<BoundReport> verify_corollaries(const TestFunction& f,
                                            const HolderPair& hp,
                                            const Density* d = nullptr,
                                            const VerifyOptions& opt = {});

/// |f(x) - mean of f| <= [1/4 + (x-(a+b)/2)^2/(b-a)^2] (b-a) sup|f'|.
BoundReport verify_ostrowski_classical(const TestFunction& f, double x,
                                       const VerifyOptions& opt = {});

} // namespace fracq
