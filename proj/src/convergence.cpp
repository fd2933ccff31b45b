#include "stilde/convergence.hpp"

#include <algorithm>
#include <cmath>

namespace stilde {

namespace {

constexpr double kSlack = 1e-12;

Point centroid(const std::vector<Point>& pts) {
    Point sum = Point::zero(pts.front().dim());
    for (const Point& p : pts) sum = sum + p;
    return sum / static_cast<double>(pts.size());
}

std::vector<Point> push_out(const std::vector<Point>& pts, double delta) {
    Point c = centroid(pts);
    std::vector<Point> out;
    out.reserve(pts.size());
    for (const Point& p : pts) {
        Point dir = p - c;
        double n = dir.norm();
        out.push_back(n > 0.0 ? p + dir * (delta / n) : p);
    }
    return out;
}

}  // namespace

StabilityCheck stability_check(const Point& x, const BoundarySet& g1, const BoundarySet& g2) {
    double rhs = hausdorff_dist(g1, g2);
    return {std::abs(dist_to_set(x, g2) - dist_to_set(x, g1)), rhs};
}

BoundarySet perturb_outward(const BoundarySet& g, double delta) {
    if (delta == 0.0) return g;
    if (const auto* s = g.get_if<Sphere>()) return BoundarySet::sphere(s->center, s->radius + delta);
    if (const auto* ps = g.get_if<FinitePointSet>()) return BoundarySet::points(push_out(ps->points, delta));
    if (const auto* ch = g.get_if<PolygonalChain>()) {
        return BoundarySet::chain(push_out(ch->vertices, delta), ch->closed);
    }
    throw std::invalid_argument("cannot perturb an unbounded half-space boundary");
}

ConvergenceTrace convergence_run(const Point& x, const Point& y, const BoundarySet& g,
                                 const std::vector<double>& schedule, const MetricParams& p) {
    for (std::size_t i = 0; i < schedule.size(); ++i) {
        if (!(schedule[i] >= 0.0) || !std::isfinite(schedule[i])) {
            throw std::invalid_argument("schedule entries must be finite and nonnegative");
        }
        if (i > 0 && schedule[i] > schedule[i - 1]) throw std::invalid_argument("schedule not decreasing");
    }
    require_same_dim(x, y);

    const double dxy = euclid_dist(x, y);
    const double dx = dist_to_set(x, g);
    const double dy = dist_to_set(y, g);
    const double s_limit = stilde_metric_from_distances(dxy, dx, dy, p.c());

    ConvergenceTrace trace;
    double eps_max = 0.0;
    for (std::size_t i = 0; i < schedule.size(); ++i) {
        BoundarySet gn = perturb_outward(g, schedule[i]);
        double eps = schedule[i] == 0.0 ? 0.0 : hausdorff_dist(gn, g);
        double dxn = dist_to_set(x, gn);
        double dyn = dist_to_set(y, gn);
        double s_n = stilde_metric_from_distances(dxy, dxn, dyn, p.c());
        double stability_slack = std::min(eps - std::abs(dxn - dx), eps - std::abs(dyn - dy));
        trace.rows.push_back({static_cast<int>(i + 1), eps, s_n, s_limit, std::abs(s_n - s_limit), stability_slack});
        eps_max = std::max(eps_max, eps);
        if (stability_slack < -kSlack) trace.stability_holds = false;
    }

    const double a_lo = std::max(0.0, dx - eps_max);
    const double b_lo = std::max(0.0, dy - eps_max);
    const double s_max = stilde_from_distances(dxy, a_lo, b_lo);
    trace.rate_constant_K =
        s_max * (0.5 / (1.0 + a_lo) + 0.5 / (1.0 + b_lo)) / (1.0 + p.c() * s_max);
    for (const ConvergenceRow& row : trace.rows) {
        if (row.gap > p.c() * row.eps_n * trace.rate_constant_K + kSlack) trace.rate_bound_holds = false;
    }
    return trace;
}

}  // namespace stilde
