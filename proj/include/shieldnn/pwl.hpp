#pragma once

#include <utility>
#include <vector>

namespace shieldnn {

struct Line {
    double slope = 0.0;
    double intercept = 0.0;
    double at(double x) const { return intercept + slope * x; }
};

// Continuous piecewise-linear function over [domain_lo, domain_hi]. The
// explicit breakpoint polyline is always populated; for Min/MaxOfLines the
// generating lines are kept as well. Evaluation extends the end segments
// linearly outside the domain.
struct PwlFunction {
    enum class Combiner { MinOfLines, MaxOfLines, Explicit };

    Combiner combiner = Combiner::Explicit;
    std::vector<Line> lines;
    std::vector<std::pair<double, double>> breakpoints;  // strictly increasing x
    double domain_lo = 0.0;
    double domain_hi = 0.0;

    double operator()(double x) const;
};

// Lower envelope min_i lines[i](x) over [lo, hi]; concave by construction.
PwlFunction min_of_lines(std::vector<Line> lines, double lo, double hi);

// max{floor, f} as an explicit polyline (crossings become breakpoints).
PwlFunction clip_below(const PwlFunction& f, double floor);

// g(x) = -f(-x); the reflection used to obtain the upper bound from the lower.
PwlFunction reflect(const PwlFunction& f);

// Exact minimum of (a - b) over the common domain: the difference of two PWL
// functions is PWL, so its minimum is attained at a breakpoint of either.
// Returns {min value, argmin}.
std::pair<double, double> min_difference(const PwlFunction& a, const PwlFunction& b);

}  // namespace shieldnn
