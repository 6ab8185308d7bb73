#include "shieldnn/certify.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <future>
#include <stdexcept>
#include <vector>

namespace shieldnn {

namespace {

struct Cell {
    double xi_lo, xi_hi, beta_lo, beta_hi;
    int depth;

    double xi_mid() const { return 0.5 * (xi_lo + xi_hi); }
    double beta_mid() const { return 0.5 * (beta_lo + beta_hi); }
    double extent() const { return std::max(xi_hi - xi_lo, beta_hi - beta_lo); }
};

enum class CellOutcome { Accepted, Refuted, Undecided };

// Lower bound on sign*f(center) via a sound point enclosure.
double signed_floor(const Interval& v, int sign) { return sign > 0 ? v.lo : -v.hi; }
// Upper bound on sign*f(center); negative means a sound refutation.
double signed_ceil(const Interval& v, int sign) { return sign > 0 ? v.hi : -v.lo; }

struct CellCheck {
    CellOutcome outcome;
    double center_value;  // midpoint of the enclosure, for witnesses
};

CellCheck check_cell(const CertTarget& t, const Cell& c, double margin, bool vary_xi,
                     bool vary_beta) {
    const double cx = c.xi_mid();
    const double cb = c.beta_mid();
    const Interval fc = t.value(Interval(cx), Interval(cb));

    if (signed_ceil(fc, t.sign) < 0.0) return {CellOutcome::Refuted, fc.mid()};

    const auto grad = t.gradient(Interval(c.xi_lo, c.xi_hi), Interval(c.beta_lo, c.beta_hi));
    double bound;
    if (vary_xi && vary_beta) {
        bound = norm_bound(grad[0], grad[1]);
    } else if (vary_xi) {
        bound = grad[0].mag();
    } else {
        bound = grad[1].mag();
    }
    const double hw_xi = 0.5 * (c.xi_hi - c.xi_lo);
    const double hw_beta = 0.5 * (c.beta_hi - c.beta_lo);
    const double halfdiag = std::sqrt(hw_xi * hw_xi + hw_beta * hw_beta);
    const double slack = detail_iv::up(detail_iv::up(bound * halfdiag));

    if (std::isfinite(slack) && signed_floor(fc, t.sign) - slack > margin)
        return {CellOutcome::Accepted, fc.mid()};
    return {CellOutcome::Undecided, fc.mid()};
}

void subdivide(const Cell& c, bool vary_xi, bool vary_beta, std::vector<Cell>& out) {
    const double mx = c.xi_mid();
    const double mb = c.beta_mid();
    if (vary_xi && vary_beta) {
        out.push_back({c.xi_lo, mx, c.beta_lo, mb, c.depth + 1});
        out.push_back({c.xi_lo, mx, mb, c.beta_hi, c.depth + 1});
        out.push_back({mx, c.xi_hi, c.beta_lo, mb, c.depth + 1});
        out.push_back({mx, c.xi_hi, mb, c.beta_hi, c.depth + 1});
    } else if (vary_xi) {
        out.push_back({c.xi_lo, mx, c.beta_lo, c.beta_hi, c.depth + 1});
        out.push_back({mx, c.xi_hi, c.beta_lo, c.beta_hi, c.depth + 1});
    } else {
        out.push_back({c.xi_lo, c.xi_hi, c.beta_lo, mb, c.depth + 1});
        out.push_back({c.xi_lo, c.xi_hi, mb, c.beta_hi, c.depth + 1});
    }
}

std::vector<Cell> initial_cells(const Rect& d, double grid, bool vary_xi, bool vary_beta) {
    const int nx = vary_xi ? std::max(1, (int)std::ceil((d.xi_hi - d.xi_lo) / grid)) : 1;
    const int nb = vary_beta ? std::max(1, (int)std::ceil((d.beta_hi - d.beta_lo) / grid)) : 1;
    std::vector<Cell> cells;
    cells.reserve((size_t)nx * nb);
    for (int i = 0; i < nx; ++i) {
        const double x0 = d.xi_lo + (d.xi_hi - d.xi_lo) * i / nx;
        const double x1 = d.xi_lo + (d.xi_hi - d.xi_lo) * (i + 1) / nx;
        for (int j = 0; j < nb; ++j) {
            const double b0 = d.beta_lo + (d.beta_hi - d.beta_lo) * j / nb;
            const double b1 = d.beta_lo + (d.beta_hi - d.beta_lo) * (j + 1) / nb;
            cells.push_back({x0, x1, b0, b1, 0});
        }
    }
    return cells;
}

// Evaluate one wave of cells, possibly in parallel; outcomes keep wave order.
std::vector<CellCheck> run_wave(const CertTarget& t, const std::vector<Cell>& wave,
                                double margin, bool vary_xi, bool vary_beta, int threads) {
    std::vector<CellCheck> out(wave.size());
    if (threads <= 1 || wave.size() < 64) {
        for (size_t i = 0; i < wave.size(); ++i)
            out[i] = check_cell(t, wave[i], margin, vary_xi, vary_beta);
        return out;
    }
    const size_t chunk = (wave.size() + threads - 1) / threads;
    std::vector<std::future<void>> futs;
    for (int w = 0; w < threads; ++w) {
        const size_t lo = std::min(wave.size(), w * chunk);
        const size_t hi = std::min(wave.size(), (w + 1) * chunk);
        if (lo >= hi) break;
        futs.push_back(std::async(std::launch::async, [&, lo, hi] {
            for (size_t i = lo; i < hi; ++i)
                out[i] = check_cell(t, wave[i], margin, vary_xi, vary_beta);
        }));
    }
    for (auto& f : futs) f.get();
    return out;
}

void validate_domain(const Rect& d, bool vary_xi, bool vary_beta) {
    if (d.xi_lo > d.xi_hi || d.beta_lo > d.beta_hi)
        throw std::invalid_argument("certify_min: empty domain");
    if (!vary_xi && !vary_beta)
        throw std::invalid_argument("certify_min: both domain edges degenerate");
}

}  // namespace

CertResult certify_min(const CertTarget& target, const CertifyConfig& config) {
    if (!target.value || !target.gradient)
        throw std::invalid_argument("certify_min: target expression not evaluable");
    const Rect& d = target.domain;
    const bool vary_xi = d.xi_lo < d.xi_hi;
    const bool vary_beta = d.beta_lo < d.beta_hi;
    validate_domain(d, vary_xi, vary_beta);

    CertResult res;
    res.finest_grid = std::max(d.xi_hi - d.xi_lo, d.beta_hi - d.beta_lo);

    if (config.global_shrink) {
        // Fidelity mode: rescan the whole domain on a 10x finer grid whenever
        // any cell stays undecided.
        double grid = config.initial_grid;
        for (int depth = 0; depth <= config.max_depth; ++depth) {
            auto cells = initial_cells(d, grid, vary_xi, vary_beta);
            auto checks = run_wave(target, cells, config.margin, vary_xi, vary_beta,
                                   config.threads);
            res.cells_checked += (long)cells.size();
            res.refinement_depth = depth;
            res.finest_grid = grid;
            bool undecided = false;
            for (size_t i = 0; i < cells.size(); ++i) {
                if (checks[i].outcome == CellOutcome::Refuted) {
                    res.verdict = Verdict::Refuted;
                    res.witness = Witness{cells[i].xi_mid(), cells[i].beta_mid(),
                                          checks[i].center_value};
                    return res;
                }
                undecided |= checks[i].outcome == CellOutcome::Undecided;
            }
            if (!undecided) {
                res.verdict = Verdict::Certified;
                return res;
            }
            grid /= 10.0;
        }
        res.verdict = Verdict::Inconclusive;
        return res;
    }

    std::vector<Cell> wave = initial_cells(d, config.initial_grid, vary_xi, vary_beta);
    bool any_unresolved = false;
    while (!wave.empty()) {
        auto checks = run_wave(target, wave, config.margin, vary_xi, vary_beta, config.threads);
        res.cells_checked += (long)wave.size();
        std::vector<Cell> next;
        for (size_t i = 0; i < wave.size(); ++i) {
            const Cell& c = wave[i];
            res.finest_grid = std::min(res.finest_grid, c.extent());
            res.refinement_depth = std::max(res.refinement_depth, c.depth);
            switch (checks[i].outcome) {
                case CellOutcome::Refuted:
                    res.verdict = Verdict::Refuted;
                    res.witness = Witness{c.xi_mid(), c.beta_mid(), checks[i].center_value};
                    return res;
                case CellOutcome::Accepted:
                    break;
                case CellOutcome::Undecided:
                    if (c.depth < config.max_depth)
                        subdivide(c, vary_xi, vary_beta, next);
                    else
                        any_unresolved = true;
                    break;
            }
        }
        wave = std::move(next);
    }
    res.verdict = any_unresolved ? Verdict::Inconclusive : Verdict::Certified;
    return res;
}

CertResult certify_point(const CertTarget& target, double xi, double beta, double margin) {
    if (!target.value) throw std::invalid_argument("certify_point: target not evaluable");
    const Interval v = target.value(Interval(xi), Interval(beta));
    CertResult res;
    res.cells_checked = 1;
    res.finest_grid = 0.0;
    if (signed_floor(v, target.sign) > margin) {
        res.verdict = Verdict::Certified;
    } else if (signed_ceil(v, target.sign) < 0.0) {
        res.verdict = Verdict::Refuted;
        res.witness = Witness{xi, beta, v.mid()};
    } else {
        res.verdict = Verdict::Inconclusive;
    }
    return res;
}

double bisect_root(const std::function<double(double)>& f, double lo, double hi, double tol) {
    if (!(lo < hi)) throw std::invalid_argument("bisect_root: requires lo < hi");
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (!(flo * fhi < 0.0)) throw std::domain_error("bisect_root: no sign change on [lo, hi]");
    for (int it = 0; it < 400 && (hi - lo) > tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Certified: return "certified";
        case Verdict::Refuted: return "refuted";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "unknown";
}

}  // namespace shieldnn
