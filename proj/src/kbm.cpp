#include "shieldnn/kbm.hpp"

#include <algorithm>
#include <cmath>

namespace shieldnn {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

VehicleParams VehicleParams::make(double l_f, double l_r, double delta_f_max, double v_max) {
    VehicleParams p;
    p.l_f = l_f;
    p.l_r = l_r;
    p.delta_f_max = delta_f_max;
    p.v_max = v_max;
    p.beta_max = std::atan(l_r / (l_f + l_r) * std::tan(delta_f_max));
    validate(p);
    return p;
}

double wrap_angle(double a) {
    double w = std::remainder(a, 2.0 * kPi);  // result in [-pi, pi]
    if (w >= kPi) w = -kPi;
    return w;
}

void validate(const VehicleParams& p) {
    if (!(p.l_f > 0.0) || p.l_f != p.l_r)
        throw std::domain_error("VehicleParams: requires l_f = l_r > 0");
    if (!(p.delta_f_max > 0.0 && p.delta_f_max < kPi / 2.0))
        throw std::domain_error("VehicleParams: requires 0 < delta_f_max < pi/2");
    if (!(p.v_max > 0.0)) throw std::domain_error("VehicleParams: requires v_max > 0");
    if (!(p.beta_max > 0.0 && p.beta_max <= kPi / 2.0))
        throw std::domain_error("VehicleParams: derived beta_max out of (0, pi/2]");
}

void validate(const RelState& s, const VehicleParams& p) {
    if (!(s.r > 0.0)) throw singularity_error("RelState: r must be positive");
    if (!(s.xi >= -kPi && s.xi <= kPi)) throw std::domain_error("RelState: xi outside [-pi, pi]");
    if (!(s.v >= 0.0 && s.v <= p.v_max)) throw std::domain_error("RelState: v outside [0, v_max]");
}

void validate(const Control& c, const VehicleParams& p) {
    if (!(std::abs(c.beta) <= p.beta_max))
        throw std::domain_error("Control: |beta| exceeds beta_max");
    (void)c.a;  // acceleration is unconstrained
}

double beta_from_delta(double delta_f, const VehicleParams& p) {
    if (!(std::abs(delta_f) <= p.delta_f_max))
        throw std::domain_error("beta_from_delta: |delta_f| exceeds delta_f_max");
    return std::atan(p.l_r / (p.l_f + p.l_r) * std::tan(delta_f));
}

double delta_from_beta(double beta, const VehicleParams& p) {
    if (!(std::abs(beta) <= p.beta_max))
        throw std::domain_error("delta_from_beta: |beta| exceeds beta_max");
    return std::atan((p.l_f + p.l_r) / p.l_r * std::tan(beta));
}

RelStateDerivative dynamics(const RelState& s, const Control& c, const VehicleParams& p) {
    if (!(s.r > 0.0)) throw singularity_error("dynamics: r <= 0");
    const double rel = s.xi - c.beta;
    return {
        s.v * std::cos(rel),
        -(s.v / s.r) * std::sin(rel) - (s.v / p.l_r) * std::sin(c.beta),
        c.a,
    };
}

RelState integrate_step(const RelState& s, const Control& c, const VehicleParams& p, double dt) {
    if (!(dt > 0.0)) throw std::domain_error("integrate_step: dt must be positive");

    auto rhs = [&](const RelState& x) { return dynamics(x, c, p); };
    auto advance = [](const RelState& x, const RelStateDerivative& k, double h) {
        return RelState{x.r + h * k.dr, x.xi + h * k.dxi, x.v + h * k.dv};
    };

    const RelStateDerivative k1 = rhs(s);
    const RelStateDerivative k2 = rhs(advance(s, k1, dt / 2.0));
    const RelStateDerivative k3 = rhs(advance(s, k2, dt / 2.0));
    const RelStateDerivative k4 = rhs(advance(s, k3, dt));

    RelState out;
    out.r = s.r + dt / 6.0 * (k1.dr + 2.0 * k2.dr + 2.0 * k3.dr + k4.dr);
    out.xi = wrap_angle(s.xi + dt / 6.0 * (k1.dxi + 2.0 * k2.dxi + 2.0 * k3.dxi + k4.dxi));
    out.v = std::clamp(s.v + dt / 6.0 * (k1.dv + 2.0 * k2.dv + 2.0 * k3.dv + k4.dv), 0.0, p.v_max);
    if (!(out.r > 0.0)) throw singularity_error("integrate_step: trajectory reached r <= 0");
    return out;
}

}  // namespace shieldnn
