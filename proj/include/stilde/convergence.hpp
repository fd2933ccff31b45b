#pragma once

#include "stilde/boundary.hpp"
#include "stilde/metrics.hpp"

#include <vector>

namespace stilde {

struct StabilityCheck {
    double lhs;  // |d(x, G2) - d(x, G1)|
    double rhs;  // d_H(G1, G2)
};

/// Both sides of the Hausdorff stability estimate for d(x, .).
StabilityCheck stability_check(const Point& x, const BoundarySet& g1, const BoundarySet& g2);

/// Moves every member of G away from its centroid by `delta` (spheres grow
/// their radius by `delta`). Members at the centroid stay put.
BoundarySet perturb_outward(const BoundarySet& g, double delta);

struct ConvergenceRow {
    int n;
    double eps_n;    // d_H(G_n, G)
    double s_n;      // S~_{G_n,c}(x, y)
    double s_limit;  // S~_{G,c}(x, y)
    double gap;      // |s_n - s_limit|
    double stability_slack;  // min over x, y of d_H - |d(., G_n) - d(., G)|
};

/// Trace of S~_{G_n,c}(x,y) along G_n = perturb_outward(G, delta_n).
///
/// The rate bound is this library's own construction (the limit statement
/// carries no rate): with a = d(x), b = d(y) and s~ maximal over the
/// perturbation window,
///   |dS~/da| <= s~ / ((1 + c s~) 2 (1 + a)),
/// so gap_n <= c * eps_n * K with
///   K = s~_max (1/(2(1 + a_lo)) + 1/(2(1 + b_lo))) / (1 + c s~_max).
struct ConvergenceTrace {
    std::vector<ConvergenceRow> rows;
    double rate_constant_K = 0.0;
    bool rate_bound_holds = true;
    bool stability_holds = true;
};

/// `schedule` must be nonnegative and nonincreasing; otherwise throws.
ConvergenceTrace convergence_run(const Point& x, const Point& y, const BoundarySet& g,
                                 const std::vector<double>& schedule, const MetricParams& p);

}  // namespace stilde
