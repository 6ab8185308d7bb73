#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>

#include "shieldnn/interval.hpp"

namespace shieldnn {

// Rectangle [xi_lo, xi_hi] x [beta_lo, beta_hi]; one edge (not both) may be
// degenerate, giving a 1-D segment target.
struct Rect {
    double xi_lo = 0.0, xi_hi = 0.0;
    double beta_lo = 0.0, beta_hi = 0.0;
};

// A positivity/negativity target: closed-form expression and closed-form
// gradient, both interval-evaluable. sign = +1 certifies f > margin on the
// whole domain, sign = -1 certifies f < -margin.
struct CertTarget {
    std::string name;
    std::function<Interval(const Interval& xi, const Interval& beta)> value;
    std::function<std::array<Interval, 2>(const Interval& xi, const Interval& beta)> gradient;
    Rect domain;
    int sign = +1;
};

enum class Verdict { Certified, Refuted, Inconclusive };

struct Witness {
    double xi = 0.0;
    double beta = 0.0;
    double value = 0.0;  // direct evaluation at the witness
};

struct CertResult {
    Verdict verdict = Verdict::Inconclusive;
    std::optional<Witness> witness;  // present on Refuted
    long cells_checked = 0;
    double finest_grid = 0.0;  // smallest cell extent examined
    int refinement_depth = 0;
};

struct CertifyConfig {
    double initial_grid = 0.05;  // rad
    int max_depth = 12;
    double margin = 0.0;        // certify sign*f > margin
    bool global_shrink = false; // fidelity mode: full-grid rescans at 10x finer steps
    int threads = 1;
};

// Grid certification of sign*f > margin over target.domain. A cell is
// accepted only when sign*f(center), evaluated as a sound enclosure, exceeds
// margin by more than B_cell * halfdiag, where B_cell is an interval bound on
// the gradient norm over the closed cell (mean value theorem). Cells whose
// center soundly evaluates to sign*f < 0 refute the target; undecided cells
// subdivide locally (or trigger a global 10x rescan in fidelity mode) until
// max_depth. Deterministic for any thread count.
CertResult certify_min(const CertTarget& target, const CertifyConfig& config);

// Sound sign check at one point (cells_checked = 1).
CertResult certify_point(const CertTarget& target, double xi, double beta, double margin = 0.0);

// Plain bisection; requires a sign change f(lo)*f(hi) < 0. Returns the
// midpoint of the final bracket of width <= tol.
double bisect_root(const std::function<double(double)>& f, double lo, double hi, double tol);

const char* to_string(Verdict v);

}  // namespace shieldnn
