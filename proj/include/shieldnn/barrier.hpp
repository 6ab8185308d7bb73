#pragma once

#include "shieldnn/detail/barrier_forms.hpp"
#include "shieldnn/kbm.hpp"

namespace shieldnn {

// One candidate barrier h_{r_bar,sigma} and the gain of the linear class-K
// function alpha(x) = k * v_max * x. k defaults to the Theorem-1 minimum.
struct BarrierParams {
    double r_bar = 0.0;
    double sigma = 0.0;
    double k = 0.0;

    // k_opt < 0 means "use the minimal admissible gain".
    static BarrierParams make(double r_bar, double sigma, double k_opt = -1.0);
};

// Bundle of all constants entering the Lie derivative.
struct LieContext {
    VehicleParams vehicle;
    BarrierParams barrier;

    detail::LieConstants lie_constants() const {
        return {barrier.r_bar, barrier.sigma, vehicle.l_r};
    }
};

void validate(const BarrierParams& b);
void validate(const LieContext& ctx);

// Minimal class-K gain from Theorem 1: max{1, 1/r_bar} * (sigma/(2 r_bar) + 2).
double k_min(const LieContext& ctx);
double k_min(double r_bar, double sigma);

// Barrier value h(r, xi) = (sigma cos(xi/2) + 1 - sigma)/r_bar - 1/r.
double h(const RelState& s, const LieContext& ctx);

// Zero contour radius r_min(xi) = r_bar / (sigma cos(xi/2) + 1 - sigma).
double r_min(double xi, const LieContext& ctx);

// alpha(x) = k * v_max * x.
double alpha(double x, const LieContext& ctx);

// Lie derivative of h along the KBM vector field at an arbitrary state.
double lie_general(const RelState& s, double beta, const LieContext& ctx);

// On-barrier Lie derivative, Eq.-(9) form; the sign does not depend on v > 0,
// so all boundary computations use v = 1 (the v-normalized value times v).
double lie_on_barrier(double xi, double beta, double v, const LieContext& ctx);

// lie_general + alpha(h): membership beta in R_{h,alpha}(state) <=> result >= 0.
double lie_plus_alpha(const RelState& s, double beta, const LieContext& ctx);

// Analytic partials of the v-normalized on-barrier Lie derivative. The
// r_min(xi) dependence is differentiated through; closed forms live in
// detail/barrier_forms.hpp.
double lie_d_xi(double xi, double beta, const LieContext& ctx);
double lie_d_beta(double xi, double beta, const LieContext& ctx);
double lie_d2_xi(double xi, double beta, const LieContext& ctx);
double lie_d2_beta(double xi, double beta, const LieContext& ctx);
double lie_d2_xibeta(double xi, double beta, const LieContext& ctx);

// Implicit-boundary slope gamma' = -L_xi / L_beta; equals l'(xi) on the contour.
// Throws std::domain_error when |L_beta| is below tol (degenerate slope).
double gamma_prime(double xi, double beta, const LieContext& ctx, double tol = 1e-12);

// Total second derivative of the implicit boundary:
// gamma'' = -(L_xixi Q^2 - 2 P Q L_xibeta + P^2 L_betabeta) / Q^3 with
// P = L_xi, Q = L_beta; equals l''(xi) on the contour.
double gamma_second(double xi, double beta, const LieContext& ctx, double tol = 1e-12);

}  // namespace shieldnn
