#include "stilde/metrics.hpp"

#include "golden.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace stilde {

namespace {

constexpr int kCircleGrid = 1024;
constexpr double kAngleTol = 1e-10;
constexpr double kSegmentTol = 1e-12;

// Minimizes |x - a| + |y - a| over the circle of radius r about the origin of
// the plane; x, y given in plane coordinates.
double circle_sum_inf(double x0, double x1, double y0, double y1, double r) {
    auto f = [&](double theta) {
        double a0 = r * std::cos(theta);
        double a1 = r * std::sin(theta);
        return std::hypot(x0 - a0, x1 - a1) + std::hypot(y0 - a0, y1 - a1);
    };
    const double step = 2.0 * std::numbers::pi / kCircleGrid;
    std::vector<double> grid(kCircleGrid);
    for (int k = 0; k < kCircleGrid; ++k) grid[k] = f(step * k);

    double best = *std::min_element(grid.begin(), grid.end());
    for (int k = 0; k < kCircleGrid; ++k) {
        double prev = grid[(k + kCircleGrid - 1) % kCircleGrid];
        double next = grid[(k + 1) % kCircleGrid];
        if (grid[k] <= prev && grid[k] <= next) {
            double theta = step * k;
            auto m = detail::golden_section_min(f, theta - step, theta + step, kAngleTol);
            best = std::min(best, m.value);
        }
    }
    return best;
}

double sphere_sum_inf(const Point& x, const Point& y, const Sphere& s) {
    if (x.dim() == 1) {
        Point lo = s.center - Point{s.radius};
        Point hi = s.center + Point{s.radius};
        return std::min(euclid_dist(x, lo) + euclid_dist(y, lo), euclid_dist(x, hi) + euclid_dist(y, hi));
    }
    // The sum is concave in the out-of-plane angle, so its minimum over the
    // sphere lies on the great circle in span{x - c, y - c}.
    Point u = x - s.center;
    Point v = y - s.center;
    const std::size_t n = x.dim();
    Point e1 = u.norm() > 0.0 ? u / u.norm() : v / v.norm();
    Point w = v - e1 * v.dot(e1);
    if (w.norm() <= 1e-14 * std::max(1.0, v.norm())) {
        // collinear with the centre: any unit vector orthogonal to e1 spans the plane
        std::size_t k = 0;
        for (std::size_t i = 1; i < n; ++i)
            if (std::abs(e1[i]) < std::abs(e1[k])) k = i;
        Point ek = Point::axis(n, k);
        w = ek - e1 * ek.dot(e1);
    }
    Point e2 = w / w.norm();
    return circle_sum_inf(u.dot(e1), u.dot(e2), v.dot(e1), v.dot(e2), s.radius);
}

double chain_sum_inf(const Point& x, const Point& y, const PolygonalChain& chain) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t s = 0; s < chain.segment_count(); ++s) {
        const Point& a = chain.segment_start(s);
        Point ab = chain.segment_end(s) - a;
        auto f = [&](double u) {
            Point p = a + ab * u;
            return euclid_dist(x, p) + euclid_dist(y, p);
        };
        best = std::min(best, detail::golden_section_min(f, 0.0, 1.0, kSegmentTol).value);
    }
    return best;
}

}  // namespace

MetricParams::MetricParams(double c) : c_(c) {
    if (!(c > 0.0) || !std::isfinite(c)) throw std::invalid_argument("metric constant c must be positive");
}

double stilde_from_distances(double dxy, double dx, double dy) {
    return dxy / (std::sqrt(1.0 + dx) * std::sqrt(1.0 + dy));
}

double stilde_metric_from_distances(double dxy, double dx, double dy, double c) {
    return std::log1p(c * stilde_from_distances(dxy, dx, dy));
}

double stilde(const Point& x, const Point& y, const BoundarySet& g) {
    return stilde_from_distances(euclid_dist(x, y), dist_to_set(x, g), dist_to_set(y, g));
}

double stilde_metric(const Point& x, const Point& y, const BoundarySet& g, const MetricParams& p) {
    return std::log1p(p.c() * stilde(x, y, g));
}

double triangle_deficiency(const Point& x, const Point& y, const Point& z, const BoundarySet& g) {
    double axy = stilde(x, y, g);
    double axz = stilde(x, z, g);
    double ayz = stilde(y, z, g);
    return (axy - axz - ayz) / (axz * ayz);
}

double sharpness_closed_form(double M, double t) {
    double s = std::sqrt(1.0 + M);
    return 2.0 * s / (s + std::sqrt(1.0 + M - t));
}

double boundary_sum_inf(const Point& x, const Point& y, const BoundarySet& boundary) {
    require_same_dim(x, y);
    require_same_dim(x, Point::zero(boundary.dim()));
    if (const auto* h = boundary.get_if<HalfSpaceBoundary>()) {
        double sx = h->normal.dot(x) - h->offset;
        double sy = h->normal.dot(y) - h->offset;
        if ((sx > 0.0) != (sy > 0.0)) return euclid_dist(x, y);
        Point reflected = y - h->normal * (2.0 * sy);
        return euclid_dist(x, reflected);
    }
    if (const auto* ps = boundary.get_if<FinitePointSet>()) {
        double best = std::numeric_limits<double>::infinity();
        for (const Point& a : ps->points) best = std::min(best, euclid_dist(x, a) + euclid_dist(y, a));
        return best;
    }
    if (const auto* s = boundary.get_if<Sphere>()) return sphere_sum_inf(x, y, *s);
    return chain_sum_inf(x, y, *boundary.get_if<PolygonalChain>());
}

double tri_ratio(const Point& x, const Point& y, const DomainSpec& domain) {
    require_same_dim(x, y);
    domain.require_inside(x);
    domain.require_inside(y);
    if (x == y) return 0.0;
    double t = euclid_dist(x, y) / boundary_sum_inf(x, y, domain.boundary);
    return std::min(t, 1.0);
}

double hyperbolic_th_half(const Point& x, const Point& y) {
    require_same_dim(x, y);
    double nx = x.norm();
    double ny = y.norm();
    if (nx >= 1.0 || ny >= 1.0) throw DomainError("point not in unit ball");
    double d = euclid_dist(x, y);
    if (d == 0.0) return 0.0;
    double gx = (1.0 - nx) * (1.0 + nx);
    double gy = (1.0 - ny) * (1.0 + ny);
    return d / std::sqrt(d * d + gx * gy);
}

double hyperbolic_rho(const Point& x, const Point& y) {
    return 2.0 * std::atanh(hyperbolic_th_half(x, y));
}

double hyperbolic_upper_bound(const Point& x, const Point& y, const MetricParams& p) {
    if (x.norm() == 0.0 || y.norm() == 0.0) {
        throw DomainError("hyperbolic comparison excludes the origin");
    }
    return std::log1p(2.0 * p.c() * hyperbolic_th_half(x, y));
}

TBounds t_comparison_bounds(const Point& x, const Point& y, const DomainSpec& domain,
                            const MetricParams& p) {
    double t = tri_ratio(x, y, domain);
    double dxy = std::min(dist_to_set(x, domain.boundary), dist_to_set(y, domain.boundary));
    double k = 2.0 * p.c() * dxy * t / (1.0 + dxy);
    double upper = t >= 1.0 ? std::numeric_limits<double>::infinity() : std::log1p(k / (1.0 - t));
    return {std::log1p(k), upper, t, dxy};
}

BallInclusionRadii ball_inclusion_radii(double dx, double r, const MetricParams& p) {
    if (!(dx > 0.0)) throw DomainError("ball radii undefined on the boundary");
    if (!(r > 0.0)) throw std::invalid_argument("ball radius r must be positive");
    double k = std::expm1(r) * (1.0 + dx);
    return {k / (k + 2.0 * p.c() * dx), k / (p.c() * dx), r, dx};
}

DistanceSandwich distance_sandwich(const Point& x, const Point& y, const BoundarySet& g,
                                   const MetricParams& p) {
    double dx = dist_to_set(x, g);
    double dy = dist_to_set(y, g);
    // e^S~ - 1 is exactly c s~; no round trip through exp/log
    double growth = p.c() * stilde_from_distances(euclid_dist(x, y), dx, dy);
    return {std::min(1.0 + dx, 1.0 + dy) * growth / p.c(), (2.0 + dx + dy) * growth / (2.0 * p.c())};
}

}  // namespace stilde
