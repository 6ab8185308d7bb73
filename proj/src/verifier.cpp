#include "shieldnn/verifier.hpp"

#include <cmath>
#include <vector>

namespace shieldnn {

namespace {

constexpr double kPi = 3.14159265358979323846;

CertResult vacuous_certified() {
    CertResult r;
    r.verdict = Verdict::Certified;
    r.cells_checked = 0;
    r.finest_grid = 0.0;
    return r;
}

CertResult not_run() {
    CertResult r;
    r.verdict = Verdict::Inconclusive;
    r.cells_checked = 0;
    return r;
}

// Combines two point checks into one result (both must certify).
CertResult combine(const CertResult& a, const CertResult& b) {
    CertResult r;
    r.cells_checked = a.cells_checked + b.cells_checked;
    if (a.verdict == Verdict::Refuted) {
        r.verdict = Verdict::Refuted;
        r.witness = a.witness;
    } else if (b.verdict == Verdict::Refuted) {
        r.verdict = Verdict::Refuted;
        r.witness = b.witness;
    } else if (a.verdict == Verdict::Certified && b.verdict == Verdict::Certified) {
        r.verdict = Verdict::Certified;
    } else {
        r.verdict = Verdict::Inconclusive;
    }
    return r;
}

}  // namespace

CertTarget target_lie(const LieContext& ctx, const Rect& dom, int sign, std::string name) {
    const auto k = ctx.lie_constants();
    return {std::move(name),
            [k](const Interval& x, const Interval& b) { return detail::lie_value(x, b, k); },
            [k](const Interval& x, const Interval& b) {
                return std::array<Interval, 2>{detail::lie_dxi(x, b, k),
                                               detail::lie_dbeta(x, b, k)};
            },
            dom, sign};
}

CertTarget target_lie_dxi(const LieContext& ctx, const Rect& dom, int sign, std::string name) {
    const auto k = ctx.lie_constants();
    return {std::move(name),
            [k](const Interval& x, const Interval& b) { return detail::lie_dxi(x, b, k); },
            [k](const Interval& x, const Interval& b) {
                return std::array<Interval, 2>{detail::lie_dxi2(x, b, k),
                                               detail::lie_dxidbeta(x, b, k)};
            },
            dom, sign};
}

CertTarget target_lie_dbeta(const LieContext& ctx, const Rect& dom, int sign, std::string name) {
    const auto k = ctx.lie_constants();
    return {std::move(name),
            [k](const Interval& x, const Interval& b) { return detail::lie_dbeta(x, b, k); },
            [k](const Interval& x, const Interval& b) {
                return std::array<Interval, 2>{detail::lie_dxidbeta(x, b, k),
                                               detail::lie_dbeta2(x, b, k)};
            },
            dom, sign};
}

CertTarget target_lie_dxi2(const LieContext& ctx, const Rect& dom, int sign, std::string name) {
    const auto k = ctx.lie_constants();
    return {std::move(name),
            [k](const Interval& x, const Interval& b) { return detail::lie_dxi2(x, b, k); },
            [k](const Interval& x, const Interval& b) {
                return std::array<Interval, 2>{detail::lie_dxi3(x, b, k),
                                               detail::lie_dxi2dbeta(x, b, k)};
            },
            dom, sign};
}

CertTarget target_gamma2(const LieContext& ctx, const Rect& dom, int sign, std::string name) {
    const auto k = ctx.lie_constants();
    return {std::move(name),
            [k](const Interval& x, const Interval& b) { return detail::gamma2_form(x, b, k); },
            [k](const Interval& x, const Interval& b) { return detail::gamma2_grad_form(x, b, k); },
            dom, sign};
}

PrecheckResult existence_precheck(const LieContext& ctx) {
    PrecheckResult out;
    const double b = ctx.vehicle.beta_max;
    const double lr = ctx.vehicle.l_r;
    const double rbar = ctx.barrier.r_bar;
    const double sg = ctx.barrier.sigma;

    out.condition_i = b <= kPi / 2.0;
    const double s = std::sin(kPi / 4.0 + b / 2.0) * std::sin(b);
    out.condition_ii_lhs = (1.0 / lr) * (sg * (1.0 - sg) * lr + sg * rbar) * s;
    out.condition_ii = out.condition_ii_lhs >= 2.0;
    out.analytic_guarantee = out.condition_i && out.condition_ii;

    out.sigma_bound_value = 2.0 * (lr / rbar) / s;
    if (out.sigma_bound_value > 0.0 && out.sigma_bound_value < 1.0)
        out.sigma_lower_bound = out.sigma_bound_value;
    return out;
}

Property1Outcome verify_property1(const LieContext& ctx, const VerifyConfig& cfg) {
    const auto k = ctx.lie_constants();
    const double bmax = ctx.vehicle.beta_max;
    auto edge = [&](double xi) { return detail::lie_value(xi, -bmax, k); };

    // Scan the lower edge for the first sign change, then bisect it down.
    Property1Outcome out;
    const int n = 4096;
    double prev_x = -kPi;
    double prev_f = edge(prev_x);
    double bracket_lo = 0.0, bracket_hi = 0.0;
    bool all_positive = prev_f > 0.0;
    for (int i = 1; i <= n; ++i) {
        const double x = -kPi + 2.0 * kPi * i / n;
        const double f = edge(x);
        all_positive = all_positive && f > 0.0;
        if (!out.crossing_found && ((prev_f > 0.0 && f <= 0.0) || (prev_f < 0.0 && f >= 0.0))) {
            out.crossing_found = true;
            bracket_lo = prev_x;
            bracket_hi = x;
        }
        prev_x = x;
        prev_f = f;
    }

    const double eps = cfg.epsilon;
    if (!out.crossing_found) {
        // No crossing: the whole lower edge is one sign. All-positive means an
        // empty unsafe region (xi0 = pi convention); otherwise P1b records the
        // failure.
        out.xi0 = kPi;
        out.results["P1a"] = certify_min(
            target_lie(ctx, {-kPi, kPi, -bmax, -bmax}, +1, "P1a"), cfg.certify);
        out.results["P1b"] =
            certify_point(target_lie(ctx, {}, +1, "P1b"), kPi, -bmax, cfg.certify.margin);
        out.results["P1c"] = vacuous_certified();
        (void)all_positive;
        return out;
    }

    out.xi0 = bisect_root(edge, bracket_lo, bracket_hi, cfg.root_tol);

    out.results["P1a"] = certify_min(
        target_lie(ctx, {-kPi, out.xi0 - eps, -bmax, -bmax}, +1, "P1a"), cfg.certify);

    const auto sign_left =
        certify_point(target_lie(ctx, {}, +1, "P1b"), out.xi0 - eps, -bmax, cfg.certify.margin);
    const auto sign_right =
        certify_point(target_lie(ctx, {}, -1, "P1b"), kPi, -bmax, cfg.certify.margin);
    out.results["P1b"] = combine(sign_left, sign_right);

    out.results["P1c"] = certify_min(
        target_lie_dxi2(ctx, {out.xi0 - eps, kPi, -bmax, -bmax}, +1, "P1c"), cfg.certify);
    return out;
}

Property2Outcome verify_property2(const LieContext& ctx, double xi0, const VerifyConfig& cfg) {
    const auto k = ctx.lie_constants();
    const double bmax = ctx.vehicle.beta_max;
    const double eps = cfg.epsilon;
    Property2Outcome out;

    if (xi0 >= kPi) {
        // Empty unsafe region: nothing to characterize on [xi0, pi]; the band
        // check degenerates to the full rectangle.
        out.beta0_pi = -bmax;
        out.results["P2i"] = vacuous_certified();
        out.results["P2ii"] = vacuous_certified();
        out.results["P2iii"] = vacuous_certified();
        out.results["P2iv"] = certify_min(
            target_lie(ctx, {-kPi + eps, kPi - eps, -bmax, bmax}, +1, "P2iv"), cfg.certify);
        return out;
    }

    // Transversality of the edge crossing: L decreases through zero at xi0.
    out.results["P2i"] =
        certify_point(target_lie_dxi(ctx, {}, -1, "P2i"), xi0, -bmax, cfg.certify.margin);

    // Strict monotonicity in beta over the rectangle; this is what makes the
    // boundary the graph of a function and the edge root unique.
    out.results["P2ii"] = certify_min(
        target_lie_dbeta(ctx, {xi0, kPi, -bmax, bmax}, +1, "P2ii"), cfg.certify);

    // Locate the single root on the xi = pi edge.
    auto edge_pi = [&](double b) { return detail::lie_value(kPi, b, k); };
    const double f_lo = edge_pi(-bmax);
    const double f_hi = edge_pi(bmax);
    if (f_lo < 0.0 && f_hi > 0.0) {
        out.beta0_pi = bisect_root(edge_pi, -bmax, bmax, cfg.root_tol);
        if (out.beta0_pi - eps > -bmax) {
            out.results["P2iii"] = certify_min(
                target_lie(ctx, {kPi, kPi, -bmax, out.beta0_pi - eps}, -1, "P2iii"),
                cfg.certify);
        } else {
            out.results["P2iii"] = vacuous_certified();
        }
    } else {
        // No admissible safe steering at xi = pi (or no sign change): record a
        // refutation at the edge endpoint that breaks the interval picture.
        out.beta0_pi = bmax;
        CertResult r;
        r.verdict = Verdict::Refuted;
        r.cells_checked = 2;
        r.witness = Witness{kPi, f_hi <= 0.0 ? bmax : -bmax, f_hi <= 0.0 ? f_hi : f_lo};
        out.results["P2iii"] = r;
    }

    // All-safe band around xi = 0.
    if (xi0 > eps) {
        out.results["P2iv"] = certify_min(
            target_lie(ctx, {-xi0 + eps, xi0 - eps, -bmax, bmax}, +1, "P2iv"), cfg.certify);
    } else {
        out.results["P2iv"] = vacuous_certified();
    }
    return out;
}

CertResult verify_property3(const LieContext& ctx, double xi0, const VerifyConfig& cfg) {
    const double bmax = ctx.vehicle.beta_max;
    if (xi0 >= kPi) return vacuous_certified();
    return certify_min(target_gamma2(ctx, {xi0, kPi, -bmax, bmax}, -1, "P3"), cfg.certify);
}

VerificationCertificate verify(const LieContext& ctx, const VerifyConfig& cfg) {
    validate(ctx);
    VerificationCertificate cert;
    cert.ctx = ctx;
    cert.epsilon = cfg.epsilon;
    cert.precheck = existence_precheck(ctx);

    const auto p1 = verify_property1(ctx, cfg);
    cert.xi0 = p1.xi0;
    for (const auto& [name, res] : p1.results) cert.property_results[name] = res;

    const auto p2 = verify_property2(ctx, p1.xi0, cfg);
    cert.beta0_pi = p2.beta0_pi;
    for (const auto& [name, res] : p2.results) cert.property_results[name] = res;

    cert.property_results["P3"] = verify_property3(ctx, p1.xi0, cfg);

    cert.status = VerifyStatus::Verified;
    static const char* order[] = {"P1a", "P1b", "P1c", "P2i", "P2ii", "P2iii", "P2iv", "P3"};
    for (const char* name : order) {
        auto it = cert.property_results.find(name);
        if (it == cert.property_results.end()) {
            cert.property_results[name] = not_run();
            it = cert.property_results.find(name);
        }
        if (it->second.verdict != Verdict::Certified) {
            cert.status = it->second.verdict == Verdict::Refuted ? VerifyStatus::Failed
                                                                 : VerifyStatus::Inconclusive;
            cert.failed_property = name;
            break;
        }
    }
    return cert;
}

const char* to_string(VerifyStatus s) {
    switch (s) {
        case VerifyStatus::Verified: return "verified";
        case VerifyStatus::Failed: return "failed";
        case VerifyStatus::Inconclusive: return "inconclusive";
    }
    return "unknown";
}

}  // namespace shieldnn
