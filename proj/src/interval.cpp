#include "shieldnn/interval.hpp"

namespace shieldnn {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;

double widen_down(double x, int ulps) {
    for (int i = 0; i < ulps; ++i) x = detail_iv::down(x);
    return x;
}

double widen_up(double x, int ulps) {
    for (int i = 0; i < ulps; ++i) x = detail_iv::up(x);
    return x;
}

// True if some point c + 2*pi*k lies in [lo, hi]. A half-ulp slack on the
// quotients keeps the test conservative near the boundary.
bool contains_critical(double lo, double hi, double c) {
    const double klo = std::ceil((lo - c) / kTwoPi - 1e-9);
    const double khi = std::floor((hi - c) / kTwoPi + 1e-9);
    return klo <= khi;
}

constexpr double kPiHalf = 1.57079632679489661923;
constexpr double kPi = 3.14159265358979323846;

}  // namespace

Interval sin(const Interval& x) {
    if (!x.finite() || x.width() >= kTwoPi) return {-1.0, 1.0};
    const double slo = std::sin(x.lo), shi = std::sin(x.hi);
    double lo = std::min(slo, shi), hi = std::max(slo, shi);
    lo = std::max(widen_down(lo, 4), -1.0);
    hi = std::min(widen_up(hi, 4), 1.0);
    if (contains_critical(x.lo, x.hi, kPiHalf)) hi = 1.0;
    if (contains_critical(x.lo, x.hi, -kPiHalf)) lo = -1.0;
    return {lo, hi};
}

Interval cos(const Interval& x) {
    if (!x.finite() || x.width() >= kTwoPi) return {-1.0, 1.0};
    const double clo = std::cos(x.lo), chi = std::cos(x.hi);
    double lo = std::min(clo, chi), hi = std::max(clo, chi);
    lo = std::max(widen_down(lo, 4), -1.0);
    hi = std::min(widen_up(hi, 4), 1.0);
    if (contains_critical(x.lo, x.hi, 0.0)) hi = 1.0;
    if (contains_critical(x.lo, x.hi, kPi)) lo = -1.0;
    return {lo, hi};
}

Interval sqrt(const Interval& x) {
    if (!(x.lo >= 0.0)) return Interval::whole();
    return {detail_iv::down(std::sqrt(x.lo)), detail_iv::up(std::sqrt(x.hi))};
}

double norm_bound(const Interval& gx, const Interval& gy) {
    const double mx = gx.mag(), my = gy.mag();
    if (!std::isfinite(mx) || !std::isfinite(my))
        return std::numeric_limits<double>::infinity();
    return widen_up(std::sqrt(widen_up(mx * mx + my * my, 2)), 1);
}

}  // namespace shieldnn
