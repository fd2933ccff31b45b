#include "stilde/dilatation.hpp"

#include "stilde/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace stilde {

namespace {

std::vector<Point> probe_directions(std::size_t dim, std::size_t probes) {
    std::vector<Point> dirs;
    if (dim == 1) {
        dirs = {Point{1.0}, Point{-1.0}};
    } else if (dim == 2) {
        for (std::size_t k = 0; k < probes; ++k) {
            double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(probes);
            dirs.push_back(Point{std::cos(theta), std::sin(theta)});
        }
    } else if (dim == 3) {
        const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
        for (std::size_t k = 0; k < probes; ++k) {
            double z = 1.0 - 2.0 * (static_cast<double>(k) + 0.5) / static_cast<double>(probes);
            double rho = std::sqrt(1.0 - z * z);
            double phi = golden_angle * static_cast<double>(k);
            dirs.push_back(Point{rho * std::cos(phi), rho * std::sin(phi), z});
        }
    } else {
        throw DimensionError("dilatation probes are implemented for n <= 3");
    }
    return dirs;
}

}  // namespace

BoundarySet map_boundary(const BoundarySet& g, const std::function<Point(const Point&)>& f) {
    BoundarySet discrete = discretize(g);
    std::vector<Point> image;
    for (const Point& p : discrete.members()) image.push_back(f(p));
    if (const auto* ch = discrete.get_if<PolygonalChain>()) return BoundarySet::chain(std::move(image), ch->closed);
    return BoundarySet::points(std::move(image));
}

MapUnderTest linear_map_under_test(std::string name, const Matrix& m, const BoundarySet& g, Point probe_center,
                                   double probe_radius) {
    auto apply = [m](const Point& x) { return m.apply(x); };
    // source and target must use the same discretization, otherwise an isometry
    // shows the polygon-vs-sphere gap as distortion
    MapUnderTest out{std::move(name),
                     [m](const Point& x) -> std::optional<Point> { return m.apply(x); },
                     discretize(g),
                     map_boundary(g, apply),
                     std::move(probe_center),
                     probe_radius};
    return out;
}

double estimate_bilipschitz_L(const MapUnderTest& f, std::size_t samples, const MetricParams& p,
                              std::uint64_t seed) {
    if (samples < 1000) throw std::invalid_argument("estimate_bilipschitz_L needs at least 1000 samples");
    Rng rng(seed);
    double worst = 0.0;
    std::size_t used = 0;
    for (std::size_t i = 0; i < samples; ++i) {
        Point x = random_in_ball(rng, f.probe_center, f.probe_radius);
        Point y = i % 2 == 0 ? random_in_ball(rng, f.probe_center, f.probe_radius)
                             : x + random_in_ball(rng, Point::zero(x.dim()), 1e-3 * f.probe_radius);
        if (x == y) continue;
        auto fx = f.forward(x);
        auto fy = f.forward(y);
        if (!fx || !fy) continue;
        double s_src = stilde_metric(x, y, f.source, p);
        double s_dst = stilde_metric(*fx, *fy, f.target, p);
        if (s_src == 0.0 || s_dst == 0.0) continue;
        worst = std::max({worst, s_dst / s_src, s_src / s_dst});
        ++used;
    }
    if (used == 0) throw std::runtime_error("estimate_bilipschitz_L: every sampled pair was coincident");
    return worst;
}

DilatationEstimate linear_dilatation(const MapUnderTest& f, const Point& x, const std::vector<double>& radii,
                                     std::size_t probes) {
    if (radii.empty()) throw std::invalid_argument("linear_dilatation needs at least one radius");
    for (std::size_t i = 1; i < radii.size(); ++i) {
        if (!(radii[i] < radii[i - 1])) throw std::invalid_argument("radii must be strictly decreasing");
    }
    if (!(radii.back() >= 1e-6)) throw std::invalid_argument("smallest radius must be >= 1e-6");
    if (probes < 64) throw std::invalid_argument("linear_dilatation needs at least 64 probes");
    auto fx = f.forward(x);
    if (!fx) throw DomainError("map undefined at the centre point");

    const auto dirs = probe_directions(x.dim(), probes);
    DilatationEstimate est{x, radii, {}, {}, {}, 1.0, f.L, true, 0};
    for (double r : radii) {
        double hi = 0.0;
        double lo = std::numeric_limits<double>::infinity();
        std::size_t skipped = 0;
        for (const Point& d : dirs) {
            auto fy = f.forward(x + d * r);
            if (!fy) {
                ++skipped;
                continue;
            }
            double disp = euclid_dist(*fx, *fy);
            hi = std::max(hi, disp);
            lo = std::min(lo, disp);
        }
        if (2 * skipped > dirs.size()) {
            throw std::runtime_error("more than half of the probes at r = " + std::to_string(r) +
                                     " fall outside the map's domain");
        }
        est.skipped += skipped;
        est.max_displacement.push_back(hi);
        est.min_displacement.push_back(lo);
        est.ratios.push_back(hi / lo);
    }
    est.H = est.ratios.back();
    est.bound_holds = est.H <= f.L * f.L + kDilatationTol;
    return est;
}

std::vector<double> geometric_radii(double r0, std::size_t count) {
    std::vector<double> radii;
    for (std::size_t k = 0; k < count; ++k) radii.push_back(r0 * std::pow(10.0, -static_cast<double>(k)));
    return radii;
}

}  // namespace stilde
