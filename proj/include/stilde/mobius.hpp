#pragma once

#include "stilde/geometry.hpp"

#include <optional>

namespace stilde {

/// Reflection (inversion) in the sphere S(center, radius):
/// psi(x) = center + radius^2 (x - center) / |x - center|^2.
struct SphereReflection {
    Point center;
    double radius;

    SphereReflection(Point center, double radius);

    /// Throws DomainError at the pole x == center.
    Point reflect(const Point& x) const;
    /// r^2 |x - y| / (|x - a| |y - a|), the closed form of |psi(x) - psi(y)|.
    double image_distance(const Point& x, const Point& y) const;
};

Point reflect(const SphereReflection& psi, const Point& x);

/// x* = x / |x|^2, inversion in the unit sphere.
Point unit_inversion(const Point& x);

/// A Moebius self-map of the unit ball, phi(x) = A sigma(x), where sigma is the
/// reflection in the sphere orthogonal to S^{n-1} centred at a* = a/|a|^2 with
/// radius sqrt(|a*|^2 - 1) (so sigma(a) = 0), and A is orthogonal. For a == 0
/// sigma is the identity and phi is the pure rotation A.
class MobiusMap {
public:
    /// Identity on R^n.
    static MobiusMap identity(std::size_t dim);

    std::size_t dim() const { return orthogonal_.size(); }
    const Point& moved_point() const { return a_; }
    const Matrix& orthogonal() const { return orthogonal_; }
    bool is_rotation() const { return !reflection_; }
    /// The sphere reflection sigma; empty for the a == 0 case.
    const std::optional<SphereReflection>& reflection() const { return reflection_; }

    /// Returns a copy with the orthogonal factor replaced by `rotation`.
    MobiusMap with_orthogonal(const Matrix& rotation) const;

    /// A sigma(x). sigma is evaluated in the cancellation-free form
    /// ((1 + |x|^2) a - 2 <x, a> a / |a|^2 + (1 - |a|^2) x) / (1 - 2 <x, a> + |a|^2 |x|^2).
    Point apply(const Point& x) const;
    Point operator()(const Point& x) const { return apply(x); }

private:
    friend MobiusMap mobius_to_origin(const Point& a);
    MobiusMap(Point a, std::optional<SphereReflection> reflection, Matrix orthogonal);

    Point a_;
    std::optional<SphereReflection> reflection_;
    Matrix orthogonal_;
};

/// sigma_a with sigma_a(a) = 0 and sigma_a(B^n) = B^n. Requires |a| < 1.
MobiusMap mobius_to_origin(const Point& a);

Point apply(const MobiusMap& m, const Point& x);

struct DistortionEnvelope {
    double lo;
    double hi;
};

/// ((1 - |a|) / (1 + |a|), (1 + |a|) / (1 - |a|)): the factors bounding how much
/// a ball automorphism sending a to 0 can change S~_{S^{n-1},c}.
DistortionEnvelope distortion_envelope(const Point& a);

struct SigmaNormBounds {
    double lo;   // ||b| - |a|| / (1 - |a||b|)
    double mid;  // |b - a| / (|a| |b - a*|)
    double hi;   // (|b| + |a|) / (1 + |a||b|)
};

/// The three quantities of the two-sided estimate lo <= mid <= hi for a, b in B^n, a != 0.
SigmaNormBounds sigma_norm_bounds(const Point& a, const Point& b);

struct LogRatioCheck {
    bool holds;
    double lhs;    // log(1+x) / log(1+y)
    double rhs;    // x / y
    double slack;  // rhs - lhs
};

/// log(1+x)/log(1+y) <= x/y for x >= y > 0.
LogRatioCheck log_ratio_bound(double x, double y);

}  // namespace stilde
