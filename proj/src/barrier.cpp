#include "shieldnn/barrier.hpp"

#include <algorithm>
#include <cmath>

namespace shieldnn {

BarrierParams BarrierParams::make(double r_bar, double sigma, double k_opt) {
    BarrierParams b;
    b.r_bar = r_bar;
    b.sigma = sigma;
    b.k = k_opt < 0.0 ? k_min(r_bar, sigma) : k_opt;
    validate(b);
    return b;
}

void validate(const BarrierParams& b) {
    if (!(b.r_bar > 0.0)) throw std::domain_error("BarrierParams: requires r_bar > 0");
    if (!(b.sigma > 0.0 && b.sigma < 1.0))
        throw std::domain_error("BarrierParams: requires sigma in (0, 1)");
    if (!(b.k >= k_min(b.r_bar, b.sigma)))
        throw std::domain_error("BarrierParams: k below the Theorem-1 minimum");
}

void validate(const LieContext& ctx) {
    validate(ctx.vehicle);
    validate(ctx.barrier);
}

double k_min(double r_bar, double sigma) {
    return std::max(1.0, 1.0 / r_bar) * (sigma / (2.0 * r_bar) + 2.0);
}

double k_min(const LieContext& ctx) { return k_min(ctx.barrier.r_bar, ctx.barrier.sigma); }

double h(const RelState& s, const LieContext& ctx) {
    if (!(s.r > 0.0)) throw singularity_error("h: r <= 0");
    const auto& b = ctx.barrier;
    return (b.sigma * std::cos(s.xi / 2.0) + 1.0 - b.sigma) / b.r_bar - 1.0 / s.r;
}

double r_min(double xi, const LieContext& ctx) {
    const auto& b = ctx.barrier;
    return b.r_bar / (b.sigma * std::cos(xi / 2.0) + 1.0 - b.sigma);
}

double alpha(double x, const LieContext& ctx) {
    return ctx.barrier.k * ctx.vehicle.v_max * x;
}

double lie_general(const RelState& s, double beta, const LieContext& ctx) {
    if (!(s.r > 0.0)) throw singularity_error("lie_general: r <= 0");
    const auto& b = ctx.barrier;
    const double sh = std::sin(s.xi / 2.0);
    const double rel = s.xi - beta;
    return s.v * (b.sigma / (2.0 * b.r_bar * s.r) * sh * std::sin(rel) +
                  b.sigma / (2.0 * b.r_bar * ctx.vehicle.l_r) * sh * std::sin(beta) +
                  std::cos(rel) / (s.r * s.r));
}

double lie_on_barrier(double xi, double beta, double v, const LieContext& ctx) {
    return v * detail::lie_value(xi, beta, ctx.lie_constants());
}

double lie_plus_alpha(const RelState& s, double beta, const LieContext& ctx) {
    return lie_general(s, beta, ctx) + alpha(h(s, ctx), ctx);
}

double lie_d_xi(double xi, double beta, const LieContext& ctx) {
    return detail::lie_dxi(xi, beta, ctx.lie_constants());
}

double lie_d_beta(double xi, double beta, const LieContext& ctx) {
    return detail::lie_dbeta(xi, beta, ctx.lie_constants());
}

double lie_d2_xi(double xi, double beta, const LieContext& ctx) {
    return detail::lie_dxi2(xi, beta, ctx.lie_constants());
}

double lie_d2_beta(double xi, double beta, const LieContext& ctx) {
    return detail::lie_dbeta2(xi, beta, ctx.lie_constants());
}

double lie_d2_xibeta(double xi, double beta, const LieContext& ctx) {
    return detail::lie_dxidbeta(xi, beta, ctx.lie_constants());
}

double gamma_prime(double xi, double beta, const LieContext& ctx, double tol) {
    const auto k = ctx.lie_constants();
    const double q = detail::lie_dbeta(xi, beta, k);
    if (std::abs(q) < tol) throw std::domain_error("gamma_prime: degenerate slope (dL/dbeta ~ 0)");
    return -detail::lie_dxi(xi, beta, k) / q;
}

double gamma_second(double xi, double beta, const LieContext& ctx, double tol) {
    const auto k = ctx.lie_constants();
    if (std::abs(detail::lie_dbeta(xi, beta, k)) < tol)
        throw std::domain_error("gamma_second: degenerate slope (dL/dbeta ~ 0)");
    return detail::gamma2_form(xi, beta, k);
}

}  // namespace shieldnn
