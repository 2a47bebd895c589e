#include "fracq/sharpness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fracq/errors.hpp"

namespace fracq {

namespace {

TestFunction polynomial_family_member(const std::string& id,
                                      const Interval& domain,
                                      const std::vector<double>& c) {
    // f(t) = sum c_k t^(k+1), so every member vanishes at 0 and the constant
    // direction is excluded (constants make both bound sides vanish).
    auto f = [c](double t) {
        double acc = 0.0;
        double power = t;
        for (double ck : c) {
            acc += ck * power;
            power *= t;
        }
        return acc;
    };
    auto df = [c](double t) {
        double acc = 0.0;
        double power = 1.0;
        for (std::size_t k = 0; k < c.size(); ++k) {
            acc += c[k] * (k + 1.0) * power;
            power *= t;
        }
        return acc;
    };
    auto anti = [c](double t) {
        double acc = 0.0;
        double power = t * t;
        for (std::size_t k = 0; k < c.size(); ++k) {
            acc += c[k] * power / (k + 2.0);
            power *= t;
        }
        return acc;
    };
    return {id, domain, f, df, anti, "polynomial family member"};
}

std::vector<std::pair<double, double>> box(int dims) {
    return std::vector<std::pair<double, double>>(dims, {-2.0, 2.0});
}

bool lex_less(const std::vector<double>& x, const std::vector<double>& y) {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

} // namespace

std::vector<FamilySpec> catalog_families(const Interval& domain) {
    std::vector<FamilySpec> out;

    out.push_back({"linear", box(1), [domain](const std::vector<double>& c) {
                       return polynomial_family_member("linear", domain, c);
                   }});
    out.push_back({"quadratic", box(2), [domain](const std::vector<double>& c) {
                       return polynomial_family_member("quadratic", domain, c);
                   }});
    out.push_back({"cubic", box(3), [domain](const std::vector<double>& c) {
                       return polynomial_family_member("cubic", domain, c);
                   }});
    out.push_back({"exp", box(1), [domain](const std::vector<double>& c) {
                       const double k = c.at(0);
                       RealFn f = [k](double t) { return std::exp(k * t); };
                       RealFn df = [k](double t) { return k * std::exp(k * t); };
                       RealFn anti = k != 0.0
                                         ? RealFn([k](double t) { return std::exp(k * t) / k; })
                                         : RealFn([](double t) { return t; });
                       return TestFunction{"exp", domain, f, df, anti,
                                           "exponential family member"};
                   }});

    return out;
}

FamilySpec lookup_family(const std::string& id, const Interval& domain) {
    for (auto& fam : catalog_families(domain))
        if (fam.id == id) return fam;
    throw DomainError("unknown family id: " + id);
}

std::vector<std::string> family_ids() {
    std::vector<std::string> ids;
    for (const auto& fam : catalog_families(Interval(0.0, 1.0))) ids.push_back(fam.id);
    return ids;
}

double bound_ratio(TheoremId theorem, const TestFunction& f,
                   const SharpnessOptions& opts) {
    VerifyOptions vo;
    vo.tol = opts.tol;

    auto need_hp = [&]() -> const HolderPair& {
        if (!opts.hp) throw DomainError("this bound needs a Hoelder exponent p");
        return *opts.hp;
    };
    auto need_d = [&]() -> const Density& {
        if (!opts.d) throw DomainError("this bound needs a density");
        return *opts.d;
    };
    auto corollary = [&](TheoremId which) {
        const Density* d =
            (which == TheoremId::C3 || which == TheoremId::C4) ? &need_d() : nullptr;
        const HolderPair hp = opts.hp ? *opts.hp : HolderPair(2.0);
        for (const auto& r : verify_corollaries(f, hp, d, vo))
            if (r.theorem == which) return r;
        throw DomainError("corollary report missing");
    };

    BoundReport r = [&]() -> BoundReport {
        switch (theorem) {
            case TheoremId::T1_Eq9:
                return verify_t1(f, opts.alpha, need_hp(), vo);
            case TheoremId::T2_Eq7:
                return verify_t2(f, opts.alpha, vo);
            case TheoremId::T3_Eq16:
                return verify_t3(f, need_d(), opts.alpha, need_hp(), vo);
            case TheoremId::T4_Eq14_literal:
                return verify_t4(f, need_d(), opts.alpha, T4Variant::Literal, vo);
            case TheoremId::T4_Eq14_corrected:
                return verify_t4(f, need_d(), opts.alpha, T4Variant::Corrected, vo);
            case TheoremId::C1:
            case TheoremId::C2:
            case TheoremId::C3:
            case TheoremId::C4:
                return corollary(theorem);
            case TheoremId::OstrowskiClassical:
                return verify_ostrowski_classical(f, opts.x.value_or(f.domain.b), vo);
        }
        throw DomainError("unknown theorem id");
    }();

    if (r.rhs == 0.0) return 0.0;
    const double ratio = r.lhs / r.rhs;
    if (is_sound_variant(theorem) && ratio > 1.0 + kSlackTol)
        throw BoundViolation(to_string(theorem) + ": ratio " +
                             std::to_string(ratio) + " exceeds 1 for " + f.id);
    return ratio;
}

SharpnessResult maximize_ratio(TheoremId theorem, const FamilySpec& family,
                               const SharpnessOptions& opts,
                               std::int64_t budget) {
    if (budget < 100) throw DomainError("maximize_ratio: budget must be >= 100");
    if (!family.instantiate || family.parameter_box.empty())
        throw DomainError("maximize_ratio: family has no parameters");

    const auto& pbox = family.parameter_box;
    const int dims = static_cast<int>(pbox.size());
    std::int64_t used = 0;

    auto eval = [&](const std::vector<double>& params) {
        ++used;
        return bound_ratio(theorem, family.instantiate(params), opts);
    };

    double best_ratio = -std::numeric_limits<double>::infinity();
    std::vector<double> best_params;
    auto consider = [&](const std::vector<double>& params, double ratio) {
        if (ratio > best_ratio ||
            (ratio == best_ratio && lex_less(params, best_params))) {
            best_ratio = ratio;
            best_params = params;
        }
    };

    // Fixed 48-point Latin grid: per dimension a stride coprime to 48
    // permutes the strata, so every axis is sampled evenly and the scan cost
    // never depends on the budget.
    constexpr int kScan = 48;
    constexpr int kStrides[6] = {1, 7, 11, 13, 5, 17};
    std::vector<std::pair<double, std::vector<double>>> scanned;
    for (int i = 0; i < kScan; ++i) {
        std::vector<double> params(dims);
        for (int j = 0; j < dims; ++j) {
            const int stratum = (i * kStrides[j % 6]) % kScan;
            const auto& [lo, hi] = pbox[j];
            params[j] = lo + (hi - lo) * ((stratum + 0.5) / kScan);
        }
        const double ratio = eval(params);
        consider(params, ratio);
        scanned.push_back({ratio, params});
    }

    std::sort(scanned.begin(), scanned.end(), [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first > y.first;
        return lex_less(x.second, y.second);
    });

    // Compass pattern search around the top scan points. The incumbent is
    // never discarded, and the evaluation sequence is a prefix of any
    // larger-budget run, so more budget can only improve the result.
    const int seeds = std::min<int>(3, static_cast<int>(scanned.size()));
    for (int s = 0; s < seeds && used < budget; ++s) {
        std::vector<double> cur = scanned[s].second;
        double cur_ratio = scanned[s].first;
        double step = 0.25;
        while (step >= 1e-4 && used < budget) {
            double cand_ratio = cur_ratio;
            std::vector<double> cand = cur;
            for (int j = 0; j < dims && used < budget; ++j) {
                for (double sign : {1.0, -1.0}) {
                    if (used >= budget) break;
                    const auto& [lo, hi] = pbox[j];
                    std::vector<double> probe = cur;
                    probe[j] = std::clamp(probe[j] + sign * step * (hi - lo), lo, hi);
                    if (probe[j] == cur[j]) continue;
                    const double ratio = eval(probe);
                    consider(probe, ratio);
                    if (ratio > cand_ratio ||
                        (ratio == cand_ratio && lex_less(probe, cand))) {
                        cand_ratio = ratio;
                        cand = probe;
                    }
                }
            }
            if (cand_ratio > cur_ratio) {
                cur = cand;
                cur_ratio = cand_ratio;
            } else {
                step *= 0.5;
            }
        }
    }

    return {theorem, family.id, best_params, best_ratio, used};
}

} // namespace fracq
