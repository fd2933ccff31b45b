#pragma once

#include "stilde/boundary.hpp"
#include "stilde/geometry.hpp"
#include "stilde/metrics.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace stilde {

/// A homeomorphism f together with the reference sets G and f(G) that define
/// the S~ metrics on its source and target. `forward` returns nullopt where f
/// is undefined; such probes are skipped.
struct MapUnderTest {
    std::string name;
    std::function<std::optional<Point>(const Point&)> forward;
    BoundarySet source;
    BoundarySet target;
    /// Sample pairs are drawn from the ball B(probe_center, probe_radius).
    Point probe_center;
    double probe_radius;
    /// Declared or estimated bilipschitz constant, L >= 1.
    double L = 1.0;
};

/// Image of G under a map acting pointwise on members. Spheres are replaced by
/// their inscribed 512-gon first; half-spaces are rejected.
BoundarySet map_boundary(const BoundarySet& g, const std::function<Point(const Point&)>& f);

/// x -> M x, with f(G) computed by map_boundary and G replaced by the same
/// discretization.
MapUnderTest linear_map_under_test(std::string name, const Matrix& m, const BoundarySet& g,
                                   Point probe_center, double probe_radius);

/// Max over sampled pairs of max(S~_fG(fx,fy) / S~_G(x,y), S~_G(x,y) / S~_fG(fx,fy)).
/// Half the pairs are local (|x - y| <= 1e-3 probe_radius) since the extremal
/// ratio is typically approached at short range. This is a lower bound for the
/// true bilipschitz constant.
double estimate_bilipschitz_L(const MapUnderTest& f, std::size_t samples, const MetricParams& p,
                              std::uint64_t seed = 0);

struct DilatationEstimate {
    Point x;
    std::vector<double> radii;
    std::vector<double> max_displacement;  // L_f(x, r)
    std::vector<double> min_displacement;  // l_f(x, r)
    std::vector<double> ratios;
    double H = 1.0;       // ratio at the smallest radius
    double L = 1.0;       // bilipschitz constant the bound was checked against
    bool bound_holds = true;  // H <= L^2 + kDilatationTol
    std::size_t skipped = 0;
};

inline constexpr double kDilatationTol = 1e-3;

/// Probes f on spheres |y - x| = r (two points for n = 1, equally spaced
/// angles for n = 2, a Fibonacci lattice for n = 3) and reports the ratio of
/// the largest to the smallest image displacement per radius.
DilatationEstimate linear_dilatation(const MapUnderTest& f, const Point& x, const std::vector<double>& radii,
                                     std::size_t probes);

/// Radii r_k = r0 * 10^{-k}, k = 0..count-1.
std::vector<double> geometric_radii(double r0, std::size_t count);

}  // namespace stilde
