#include "stilde/mobius.hpp"

#include <cmath>
#include <limits>
#include <utility>

namespace stilde {

SphereReflection::SphereReflection(Point c, double r) : center(std::move(c)), radius(r) {
    if (!(r > 0.0) || !std::isfinite(r)) throw std::invalid_argument("reflection radius must be positive");
}

Point SphereReflection::reflect(const Point& x) const {
    Point diff = x - center;
    double d2 = diff.norm_squared();
    if (d2 == 0.0) throw DomainError("reflection pole");
    return center + diff * (radius * radius / d2);
}

double SphereReflection::image_distance(const Point& x, const Point& y) const {
    double dx = euclid_dist(x, center);
    double dy = euclid_dist(y, center);
    if (dx == 0.0 || dy == 0.0) throw DomainError("reflection pole");
    return radius * radius * euclid_dist(x, y) / (dx * dy);
}

Point reflect(const SphereReflection& psi, const Point& x) {
    return psi.reflect(x);
}

Point unit_inversion(const Point& x) {
    double n2 = x.norm_squared();
    if (n2 == 0.0) throw DomainError("reflection pole");
    return x / n2;
}

MobiusMap::MobiusMap(Point a, std::optional<SphereReflection> reflection, Matrix orthogonal)
    : a_(std::move(a)), reflection_(std::move(reflection)), orthogonal_(std::move(orthogonal)) {}

MobiusMap MobiusMap::identity(std::size_t dim) {
    return MobiusMap(Point::zero(dim), std::nullopt, Matrix::identity(dim));
}

MobiusMap MobiusMap::with_orthogonal(const Matrix& rotation) const {
    if (rotation.size() != dim()) throw DimensionError("rotation size does not match map dimension");
    if (rotation.orthogonality_defect() > 1e-12) throw std::invalid_argument("matrix is not orthogonal");
    return MobiusMap(a_, reflection_, rotation);
}

Point MobiusMap::apply(const Point& x) const {
    require_same_dim(x, a_);
    if (!reflection_) return orthogonal_.apply(x);
    double s = a_.norm_squared();
    double xa = x.dot(a_);
    double x2 = x.norm_squared();
    double q = 1.0 - 2.0 * xa + s * x2;
    if (q <= 0.0) throw DomainError("reflection pole");
    Point num = a_ * (1.0 + x2 - 2.0 * xa / s) + x * (1.0 - s);
    return orthogonal_.apply(num / q);
}

MobiusMap mobius_to_origin(const Point& a) {
    double na = a.norm();
    if (na >= 1.0) throw DomainError("mobius_to_origin requires |a| < 1");
    if (na == 0.0) return MobiusMap::identity(a.dim());
    Point a_star = unit_inversion(a);
    double r = std::sqrt((1.0 - na) * (1.0 + na)) / na;  // sqrt(|a*|^2 - 1)
    return MobiusMap(a, SphereReflection(std::move(a_star), r), Matrix::identity(a.dim()));
}

Point apply(const MobiusMap& m, const Point& x) {
    return m.apply(x);
}

DistortionEnvelope distortion_envelope(const Point& a) {
    double na = a.norm();
    if (na >= 1.0) throw DomainError("distortion envelope requires |a| < 1");
    return {(1.0 - na) / (1.0 + na), (1.0 + na) / (1.0 - na)};
}

SigmaNormBounds sigma_norm_bounds(const Point& a, const Point& b) {
    require_same_dim(a, b);
    double na = a.norm();
    double nb = b.norm();
    if (na == 0.0) throw DomainError("sigma_norm_bounds requires a != 0");
    if (na >= 1.0 || nb >= 1.0) throw DomainError("sigma_norm_bounds requires a, b in the unit ball");
    // |a| |b - a*| = sqrt(1 - 2<a,b> + |a|^2 |b|^2), without forming a*
    double bracket = std::sqrt(std::max(0.0, 1.0 - 2.0 * a.dot(b) + na * na * nb * nb));
    return {std::abs(nb - na) / (1.0 - na * nb), euclid_dist(b, a) / bracket, (nb + na) / (1.0 + na * nb)};
}

LogRatioCheck log_ratio_bound(double x, double y) {
    if (!(y > 0.0) || !(x >= y) || !std::isfinite(x)) {
        throw std::invalid_argument("log_ratio_bound requires x >= y > 0");
    }
    double lhs = std::log1p(x) / std::log1p(y);
    double rhs = x / y;
    // both sides are within a few ulps of each other near x == y
    constexpr double kRelTol = 4.0 * std::numeric_limits<double>::epsilon();
    return {lhs <= rhs * (1.0 + kRelTol), lhs, rhs, rhs - lhs};
}

}  // namespace stilde
