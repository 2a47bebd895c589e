#include "fracq/functions.hpp"

#include <cmath>

#include "fracq/errors.hpp"

namespace fracq {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

TestFunction monomial(int k, const Interval& domain) {
    if (k == 0)
        return {"const1", domain,
                [](double) { return 1.0; },
                [](double) { return 0.0; },
                [](double t) { return t; },
                "constant; f' vanishes identically"};
    if (k == 1)
        return {"linear", domain,
                [](double t) { return t; },
                [](double) { return 1.0; },
                [](double t) { return 0.5 * t * t; },
                "f' is the unit constant"};
    const double kd = k;
    return {"t" + std::to_string(k), domain,
            [kd](double t) { return std::pow(t, kd); },
            [kd](double t) { return kd * std::pow(t, kd - 1.0); },
            [kd](double t) { return std::pow(t, kd + 1.0) / (kd + 1.0); },
            "monomial of degree " + std::to_string(k)};
}

} // namespace

std::vector<TestFunction> catalog_functions(const Interval& domain) {
    const double a = domain.a;
    const double len = domain.length();

    std::vector<TestFunction> out;
    for (int k = 0; k <= 5; ++k) out.push_back(monomial(k, domain));

    out.push_back({"exp", domain,
                   [](double t) { return std::exp(t); },
                   [](double t) { return std::exp(t); },
                   [](double t) { return std::exp(t); },
                   "entire; f' = f"});

    out.push_back({"sinpi", domain,
                   [](double t) { return std::sin(kPi * t); },
                   [](double t) { return kPi * std::cos(kPi * t); },
                   [](double t) { return -std::cos(kPi * t) / kPi; },
                   "smooth and oscillatory"});

    // (t-a)^{3/2}: f' = 1.5 sqrt(t-a) is bounded but only Hoelder-1/2 at the
    // left endpoint, so f' sits in every L_p without being Lipschitz there.
    out.push_back({"pow32", domain,
                   [a](double t) { return std::pow(std::max(0.0, t - a), 1.5); },
                   [a](double t) { return 1.5 * std::sqrt(std::max(0.0, t - a)); },
                   [a](double t) { return 0.4 * std::pow(std::max(0.0, t - a), 2.5); },
                   "f' ~ sqrt(t-a); lies in every L_p"});

    out.push_back({"cubic", domain,
                   [a, len](double t) {
                       const double u = t - a;
                       return u * u * u - len * len * u;
                   },
                   [a, len](double t) {
                       const double u = t - a;
                       return 3.0 * u * u - len * len;
                   },
                   [a, len](double t) {
                       const double u = t - a;
                       return 0.25 * u * u * u * u - 0.5 * len * len * u * u;
                   },
                   "f' changes sign at a + (b-a)/sqrt(3)"});

    return out;
}

std::vector<Density> catalog_densities(const Interval& domain) {
    const double a = domain.a;
    const double b = domain.b;
    const double len = domain.length();

    std::vector<Density> out;

    out.push_back({"uniform", domain,
                   [len](double) { return 1.0 / len; },
                   [a, b, len](double t) {
                       if (t < a) return 0.0;
                       if (t > b) return 1.0;
                       return (t - a) / len;
                   }});

    out.push_back({"linear", domain,
                   [a, len](double t) { return 2.0 * (t - a) / (len * len); },
                   [a, b, len](double t) {
                       if (t < a) return 0.0;
                       if (t > b) return 1.0;
                       const double u = (t - a) / len;
                       return u * u;
                   }});

    // Exponential with rate 2/(b-a), renormalized over the truncated range.
    const double rate = 2.0 / len;
    const double mass = 1.0 - std::exp(-rate * len);
    out.push_back({"truncexp", domain,
                   [a, rate, mass](double t) {
                       return rate * std::exp(-rate * (t - a)) / mass;
                   },
                   [a, b, rate, mass](double t) {
                       if (t < a) return 0.0;
                       if (t >= b) return 1.0;
                       return (1.0 - std::exp(-rate * (t - a))) / mass;
                   }});

    return out;
}

TestFunction lookup_function(const std::string& id, const Interval& domain) {
    for (auto& f : catalog_functions(domain))
        if (f.id == id) return f;
    throw DomainError("unknown function id: " + id);
}

Density lookup_density(const std::string& id, const Interval& domain) {
    for (auto& d : catalog_densities(domain))
        if (d.id == id) return d;
    throw DomainError("unknown density id: " + id);
}

std::vector<std::string> function_ids() {
    std::vector<std::string> ids;
    for (const auto& f : catalog_functions(Interval(0.0, 1.0))) ids.push_back(f.id);
    return ids;
}

std::vector<std::string> density_ids() {
    std::vector<std::string> ids;
    for (const auto& d : catalog_densities(Interval(0.0, 1.0))) ids.push_back(d.id);
    return ids;
}

} // namespace fracq
