#pragma once

#include <cmath>

#include "fracq/errors.hpp"

namespace fracq {

/// Closed interval [a,b] with a < b, both finite.
struct Interval {
    double a;
    double b;

    Interval(double a_, double b_) : a(a_), b(b_) {
        if (!std::isfinite(a) || !std::isfinite(b))
            throw DomainError("Interval: endpoints must be finite");
        if (!(a < b))
            throw DomainError("Interval: requires a < b");
    }

    double length() const { return b - a; }
    double midpoint() const { return 0.5 * (a + b); }
    bool contains(double t) const { return t >= a && t <= b; }
};

inline bool operator==(const Interval& x, const Interval& y) {
    return x.a == y.a && x.b == y.b;
}

} // namespace fracq
