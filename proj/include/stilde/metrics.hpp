#pragma once

#include "stilde/boundary.hpp"
#include "stilde/geometry.hpp"

namespace stilde {

/// The constant c > 0 of S~_{G,c}.
class MetricParams {
public:
    explicit MetricParams(double c);

    double c() const { return c_; }
    /// S~_{G,c} satisfies the triangle inequality exactly when c >= 2.
    bool is_metric_regime() const { return c_ >= 2.0; }

private:
    double c_;
};

/// Radii of the t-balls sandwiching the S~-ball of radius r around x:
/// B_t(x, l) is contained in B_S~(x, r), which is contained in B_t(x, L).
struct BallInclusionRadii {
    double l;
    double L;
    double r;
    double dx;
};

/// Two-sided bound on |x - y| recovered from an S~ value.
struct DistanceSandwich {
    double lower;
    double upper;
};

/// Envelope of S~_{dD,c}(x, y) in terms of the triangular ratio metric t_D.
struct TBounds {
    double lower;
    double upper;  // +infinity when t == 1
    double t;
    double d_xy;   // min{d(x), d(y)}
};

// Scalar kernels on precomputed distances. `dxy` is |x - y|, `dx`, `dy` the
// distances of x and y to the reference set.
double stilde_from_distances(double dxy, double dx, double dy);
double stilde_metric_from_distances(double dxy, double dx, double dy, double c);

/// s~_G(x,y) = |x-y| / (sqrt(1+d(x)) sqrt(1+d(y))). Not a metric in general.
double stilde(const Point& x, const Point& y, const BoundarySet& g);

/// S~_{G,c}(x,y) = log(1 + c s~_G(x,y)), evaluated with log1p.
double stilde_metric(const Point& x, const Point& y, const BoundarySet& g, const MetricParams& p);

/// Triangle-inequality deficiency h(x,y,z) = (A(x,y) - A(x,z) - A(y,z)) / (A(x,z) A(y,z))
/// with A = s~_G. S~_{G,c} satisfies the triangle inequality at (x,y,z) iff c >= h.
double triangle_deficiency(const Point& x, const Point& y, const Point& z, const BoundarySet& g);

/// Closed form of the deficiency on R with G = {-M, M}, x = t, y = -t, z = 0.
double sharpness_closed_form(double M, double t);

/// inf over a in dD of |x - a| + |y - a|. Analytic for half-spaces and finite
/// sets; spheres are reduced to the circle in the plane through the centre
/// spanned by x and y and searched on a 1024-point grid refined by golden
/// section; chain segments are convex in their parameter and minimized by
/// golden section directly.
double boundary_sum_inf(const Point& x, const Point& y, const BoundarySet& boundary);

/// Triangular ratio metric t_D(x,y) = |x-y| / inf_{a in dD}(|x-a| + |y-a|).
/// Both points must lie in the open domain.
double tri_ratio(const Point& x, const Point& y, const DomainSpec& domain);

/// th(rho/2) for the hyperbolic metric of the unit ball.
double hyperbolic_th_half(const Point& x, const Point& y);
/// rho_{B^n}(x, y) = 2 artanh(th(rho/2)).
double hyperbolic_rho(const Point& x, const Point& y);

/// log(2c th(rho/2) + 1), an upper bound for S~_{S^{n-1},c} on B^n \ {0}.
double hyperbolic_upper_bound(const Point& x, const Point& y, const MetricParams& p);

TBounds t_comparison_bounds(const Point& x, const Point& y, const DomainSpec& domain,
                            const MetricParams& p);

BallInclusionRadii ball_inclusion_radii(double dx, double r, const MetricParams& p);

DistanceSandwich distance_sandwich(const Point& x, const Point& y, const BoundarySet& g,
                                   const MetricParams& p);

}  // namespace stilde
