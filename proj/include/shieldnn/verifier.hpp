#pragma once

#include <map>
#include <optional>
#include <string>

#include "shieldnn/barrier.hpp"
#include "shieldnn/certify.hpp"

namespace shieldnn {

// Theorem-2 analytic existence pre-check. Informational: the analytic bound is
// far more conservative than sound verification.
struct PrecheckResult {
    bool condition_i = false;   // beta_max <= pi/2
    bool condition_ii = false;  // (1/l_r)(sigma(1-sigma)l_r + sigma r_bar) sin(pi/4+b/2) sin(b) >= 2
    double condition_ii_lhs = 0.0;
    bool analytic_guarantee = false;
    // Remark bound 2(l_r/r_bar)/(sin b sin(pi/4+b/2)) when it lies in (0, 1).
    std::optional<double> sigma_lower_bound;
    double sigma_bound_value = 0.0;  // the raw bound, even when outside (0, 1)
};

struct VerifyConfig {
    CertifyConfig certify;
    double epsilon = 1e-3;    // root-exclusion collar [rad]
    double root_tol = 1e-10;  // bisection tolerance [rad]
};

enum class VerifyStatus { Verified, Failed, Inconclusive };

// Machine-checkable verifier output. property_results holds the seven named
// checks P1a, P1b, P1c, P2i, P2ii, P2iii, P3 plus P2iv (the all-safe band
// between -xi0 and xi0); status is Verified only if every entry certified.
struct VerificationCertificate {
    LieContext ctx;
    double xi0 = 0.0;
    double beta0_pi = 0.0;
    double epsilon = 0.0;
    std::map<std::string, CertResult> property_results;
    VerifyStatus status = VerifyStatus::Inconclusive;
    std::string failed_property;  // first non-certified check when not Verified
    PrecheckResult precheck;
};

struct Property1Outcome {
    double xi0 = 0.0;
    bool crossing_found = false;
    std::map<std::string, CertResult> results;  // P1a, P1b, P1c
};

struct Property2Outcome {
    double beta0_pi = 0.0;
    std::map<std::string, CertResult> results;  // P2i, P2ii, P2iii, P2iv
};

PrecheckResult existence_precheck(const LieContext& ctx);

// Locates the unique lower-edge root of L(., -beta_max) and certifies:
// (P1a) L > 0 on [-pi, xi0-eps], (P1b) endpoint signs at xi0-eps and pi,
// (P1c) d2L/dxi2 > 0 on [xi0-eps, pi]. When no crossing exists the convention
// xi0 = pi applies and P1a covers the whole edge.
Property1Outcome verify_property1(const LieContext& ctx, const VerifyConfig& cfg);

// Certifies the boundary-graph property on [xi0, pi] x [-beta_max, beta_max]:
// (P2i) the edge crossing at xi0 is transversal (dL/dxi < 0 there),
// (P2ii) dL/dbeta > 0 on the rectangle (strict monotonicity in beta),
// (P2iii) single root beta0 on the xi = pi edge with L < 0 below it,
// (P2iv) L > 0 on the all-safe band [-xi0+eps, xi0-eps] x [-b, b].
Property2Outcome verify_property2(const LieContext& ctx, double xi0, const VerifyConfig& cfg);

// (P3) gamma'' < 0 on [xi0, pi] x [-beta_max, beta_max]; cells where the
// dL/dbeta enclosure spans zero can never be accepted.
CertResult verify_property3(const LieContext& ctx, double xi0, const VerifyConfig& cfg);

// Full pipeline: precheck (informational), then Properties 1 -> 2 -> 3.
VerificationCertificate verify(const LieContext& ctx, const VerifyConfig& cfg);

const char* to_string(VerifyStatus s);

// CertTarget builders over the closed forms (shared with tests).
CertTarget target_lie(const LieContext& ctx, const Rect& dom, int sign, std::string name);
CertTarget target_lie_dxi(const LieContext& ctx, const Rect& dom, int sign, std::string name);
CertTarget target_lie_dbeta(const LieContext& ctx, const Rect& dom, int sign, std::string name);
CertTarget target_lie_dxi2(const LieContext& ctx, const Rect& dom, int sign, std::string name);
CertTarget target_gamma2(const LieContext& ctx, const Rect& dom, int sign, std::string name);

}  // namespace shieldnn
