#include "shieldnn/pwl.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace shieldnn {

double PwlFunction::operator()(double x) const {
    const auto& bp = breakpoints;
    if (bp.empty()) throw std::logic_error("PwlFunction: no breakpoints");
    if (bp.size() == 1) return bp.front().second;
    // Find the segment whose left endpoint is the last breakpoint <= x.
    auto it = std::upper_bound(bp.begin(), bp.end(), x,
                               [](double v, const auto& p) { return v < p.first; });
    size_t i = it == bp.begin() ? 0 : (size_t)(it - bp.begin()) - 1;
    if (i >= bp.size() - 1) i = bp.size() - 2;
    const auto& [x0, y0] = bp[i];
    const auto& [x1, y1] = bp[i + 1];
    const double m = (y1 - y0) / (x1 - x0);
    return y0 + m * (x - x0);
}

PwlFunction min_of_lines(std::vector<Line> lines, double lo, double hi) {
    if (lines.size() < 2) throw std::invalid_argument("min_of_lines: need at least 2 lines");
    if (!(lo < hi)) throw std::invalid_argument("min_of_lines: empty domain");

    // Sort by slope descending; for equal slopes only the lowest intercept can
    // be active in a min.
    std::sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) {
        return a.slope != b.slope ? a.slope > b.slope : a.intercept < b.intercept;
    });
    std::vector<Line> uniq;
    for (const auto& l : lines) {
        if (!uniq.empty() && uniq.back().slope == l.slope) continue;
        uniq.push_back(l);
    }

    // Build the lower envelope left to right: active slope decreases with x.
    struct Active {
        Line line;
        double start;  // x where this line becomes active
    };
    std::vector<Active> env;
    for (const auto& l : uniq) {
        double start = -std::numeric_limits<double>::infinity();
        while (!env.empty()) {
            const Line& top = env.back().line;
            // Intersection with the currently last active line.
            start = (l.intercept - top.intercept) / (top.slope - l.slope);
            if (start <= env.back().start) {
                env.pop_back();  // top is never active
                continue;
            }
            break;
        }
        if (env.empty()) start = -std::numeric_limits<double>::infinity();
        env.push_back({l, start});
    }

    PwlFunction f;
    f.combiner = PwlFunction::Combiner::MinOfLines;
    f.lines = std::move(lines);
    f.domain_lo = lo;
    f.domain_hi = hi;
    f.breakpoints.emplace_back(lo, env.front().line.at(lo));
    for (size_t i = 1; i < env.size(); ++i) {
        const double x = env[i].start;
        if (x <= lo || x >= hi) {
            if (x >= hi) break;
            // Segment change left of the domain: restart the polyline there.
            f.breakpoints.clear();
            f.breakpoints.emplace_back(lo, env[i].line.at(lo));
            continue;
        }
        f.breakpoints.emplace_back(x, env[i].line.at(x));
    }
    // Closing breakpoint at the right domain edge via the active line there.
    size_t last = env.size() - 1;
    while (last > 0 && env[last].start >= hi) --last;
    f.breakpoints.emplace_back(hi, env[last].line.at(hi));
    return f;
}

PwlFunction clip_below(const PwlFunction& f, double floor) {
    PwlFunction g;
    g.combiner = PwlFunction::Combiner::Explicit;
    g.domain_lo = f.domain_lo;
    g.domain_hi = f.domain_hi;
    const auto& bp = f.breakpoints;
    for (size_t i = 0; i < bp.size(); ++i) {
        if (i > 0) {
            // Insert the crossing with the floor, if the segment straddles it.
            const auto& [x0, y0] = bp[i - 1];
            const auto& [x1, y1] = bp[i];
            if ((y0 - floor) * (y1 - floor) < 0.0) {
                const double t = (floor - y0) / (y1 - y0);
                g.breakpoints.emplace_back(x0 + t * (x1 - x0), floor);
            }
        }
        g.breakpoints.emplace_back(bp[i].first, std::max(bp[i].second, floor));
    }
    return g;
}

PwlFunction reflect(const PwlFunction& f) {
    PwlFunction g;
    g.combiner = PwlFunction::Combiner::Explicit;
    g.domain_lo = -f.domain_hi;
    g.domain_hi = -f.domain_lo;
    g.breakpoints.reserve(f.breakpoints.size());
    for (auto it = f.breakpoints.rbegin(); it != f.breakpoints.rend(); ++it)
        g.breakpoints.emplace_back(-it->first, -it->second);
    return g;
}

std::pair<double, double> min_difference(const PwlFunction& a, const PwlFunction& b) {
    std::vector<double> xs;
    xs.reserve(a.breakpoints.size() + b.breakpoints.size());
    for (const auto& p : a.breakpoints) xs.push_back(p.first);
    for (const auto& p : b.breakpoints) xs.push_back(p.first);
    std::sort(xs.begin(), xs.end());
    double best = std::numeric_limits<double>::infinity();
    double arg = xs.empty() ? 0.0 : xs.front();
    for (double x : xs) {
        const double d = a(x) - b(x);
        if (d < best) {
            best = d;
            arg = x;
        }
    }
    return {best, arg};
}

}  // namespace shieldnn
