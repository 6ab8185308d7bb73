#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

namespace shieldnn {

// Closed-interval arithmetic with outward rounding via nextafter. Each double
// operation is widened by one ulp per bound (IEEE ops round to within 0.5 ulp);
// libm sin/cos endpoint values are widened by four ulps. Division by an
// interval containing zero yields the whole line, which certification treats
// as "no usable bound".
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    Interval() = default;
    Interval(double v) : lo(v), hi(v) {}
    Interval(double l, double u) : lo(l), hi(u) {}

    static Interval whole() {
        return {-std::numeric_limits<double>::infinity(),
                std::numeric_limits<double>::infinity()};
    }

    bool finite() const { return std::isfinite(lo) && std::isfinite(hi); }
    bool contains_zero() const { return lo <= 0.0 && hi >= 0.0; }
    double width() const { return hi - lo; }
    double mid() const { return 0.5 * (lo + hi); }
    // Largest absolute value attained over the interval.
    double mag() const { return std::max(std::abs(lo), std::abs(hi)); }
};

namespace detail_iv {
inline double down(double x) {
    return std::nextafter(x, -std::numeric_limits<double>::infinity());
}
inline double up(double x) {
    return std::nextafter(x, std::numeric_limits<double>::infinity());
}
}  // namespace detail_iv

inline Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }

inline Interval operator+(const Interval& a, const Interval& b) {
    return {detail_iv::down(a.lo + b.lo), detail_iv::up(a.hi + b.hi)};
}

inline Interval operator-(const Interval& a, const Interval& b) {
    return {detail_iv::down(a.lo - b.hi), detail_iv::up(a.hi - b.lo)};
}

inline Interval operator*(const Interval& a, const Interval& b) {
    const double p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {detail_iv::down(std::min({p1, p2, p3, p4})),
            detail_iv::up(std::max({p1, p2, p3, p4}))};
}

inline Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains_zero()) return Interval::whole();
    const double q1 = a.lo / b.lo, q2 = a.lo / b.hi, q3 = a.hi / b.lo, q4 = a.hi / b.hi;
    return {detail_iv::down(std::min({q1, q2, q3, q4})),
            detail_iv::up(std::max({q1, q2, q3, q4}))};
}

inline Interval operator+(const Interval& a, double b) { return a + Interval(b); }
inline Interval operator+(double a, const Interval& b) { return Interval(a) + b; }
inline Interval operator-(const Interval& a, double b) { return a - Interval(b); }
inline Interval operator-(double a, const Interval& b) { return Interval(a) - b; }
inline Interval operator*(const Interval& a, double b) { return a * Interval(b); }
inline Interval operator*(double a, const Interval& b) { return Interval(a) * b; }
inline Interval operator/(const Interval& a, double b) { return a / Interval(b); }
inline Interval operator/(double a, const Interval& b) { return Interval(a) / b; }

// Sound enclosures of sin/cos over an interval: endpoint values widened by a
// few ulps, with +/-1 forced in whenever the interval contains a critical
// point of the respective function.
Interval sin(const Interval& x);
Interval cos(const Interval& x);

// Monotone, correctly-rounded per IEEE; one-ulp outward widening.
Interval sqrt(const Interval& x);

// Upper bound on sqrt(sum of squares of the interval magnitudes).
double norm_bound(const Interval& gx, const Interval& gy);

}  // namespace shieldnn
