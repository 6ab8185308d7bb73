#pragma once

#include <stdexcept>

namespace shieldnn {

// Thrown when a trajectory reaches the obstacle center (r <= 0), where the
// relative-coordinate dynamics are singular.
struct singularity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Physical constants of the kinematic bicycle in relative coordinates.
// l_f = l_r is required; beta_max is derived from delta_f_max at construction.
struct VehicleParams {
    double l_f = 2.0;          // front axle to CoG [m]
    double l_r = 2.0;          // rear axle to CoG [m]
    double delta_f_max = 0.0;  // steering-angle limit [rad], in (0, pi/2)
    double v_max = 0.0;        // speed limit [m/s]
    double beta_max = 0.0;     // derived slip-angle limit [rad]

    static VehicleParams make(double l_f, double l_r, double delta_f_max, double v_max);
};

// Relative state: distance to obstacle center, orientation relative to the
// obstacle ray (wrapped to [-pi, pi)), and speed.
struct RelState {
    double r = 0.0;
    double xi = 0.0;
    double v = 0.0;
};

struct RelStateDerivative {
    double dr = 0.0;
    double dxi = 0.0;
    double dv = 0.0;
};

// Control input: acceleration and steering-slip angle.
struct Control {
    double a = 0.0;
    double beta = 0.0;
};

// Wraps an angle to [-pi, pi). +pi maps to -pi.
double wrap_angle(double a);

void validate(const VehicleParams& p);
void validate(const RelState& s, const VehicleParams& p);
void validate(const Control& c, const VehicleParams& p);

// beta = atan(l_r/(l_f+l_r) * tan(delta_f)); strictly increasing and odd.
double beta_from_delta(double delta_f, const VehicleParams& p);
// Inverse of beta_from_delta.
double delta_from_beta(double beta, const VehicleParams& p);

// Right-hand side of the relative-coordinate bicycle ODE.
RelStateDerivative dynamics(const RelState& s, const Control& c, const VehicleParams& p);

// One classical RK4 step with the control held constant (zero-order hold).
// xi is re-wrapped and v clamped to [0, v_max] after the step.
RelState integrate_step(const RelState& s, const Control& c, const VehicleParams& p, double dt);

}  // namespace shieldnn
