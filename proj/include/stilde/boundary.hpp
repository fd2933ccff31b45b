#pragma once

#include "stilde/geometry.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace stilde {

struct Sphere {
    Point center;
    double radius;
};

/// The hyperplane {x : <normal, x> = offset}; normal has unit length.
struct HalfSpaceBoundary {
    Point normal;
    double offset;
};

struct FinitePointSet {
    std::vector<Point> points;
};

/// Planar polyline through `vertices`; when `closed` the last vertex joins the first.
struct PolygonalChain {
    std::vector<Point> vertices;
    bool closed = false;

    std::size_t segment_count() const { return closed ? vertices.size() : vertices.size() - 1; }
    const Point& segment_start(std::size_t i) const { return vertices[i]; }
    const Point& segment_end(std::size_t i) const { return vertices[(i + 1) % vertices.size()]; }
};

/// The reference set G that d(x) = d(x, G) is measured against.
/// Construct through the named factories, which enforce the invariants.
class BoundarySet {
public:
    using Variant = std::variant<Sphere, HalfSpaceBoundary, FinitePointSet, PolygonalChain>;

    static BoundarySet sphere(Point center, double radius);
    static BoundarySet halfspace(Point normal, double offset);
    static BoundarySet points(std::vector<Point> points);
    static BoundarySet chain(std::vector<Point> vertices, bool closed);

    std::size_t dim() const { return dim_; }
    const Variant& variant() const { return value_; }
    std::string kind() const;

    template <class T>
    const T* get_if() const {
        return std::get_if<T>(&value_);
    }

    /// True for the variants whose sup/inf can be computed by enumeration or
    /// sampling (FinitePointSet, PolygonalChain).
    bool is_discrete() const;

    /// Every member point (FinitePointSet) or vertex (PolygonalChain).
    /// Throws for analytic variants.
    const std::vector<Point>& members() const;

private:
    BoundarySet(Variant v, std::size_t dim) : value_(std::move(v)), dim_(dim) {}

    Variant value_;
    std::size_t dim_;
};

/// Which side of the boundary counts as the domain D.
enum class Interior {
    Inside,      // bounded side of a sphere or closed chain
    Outside,     // unbounded side of a sphere or closed chain
    Positive,    // {<n,x> > offset} for a half-space boundary
    Negative,    // {<n,x> < offset}
    Complement,  // R^n minus the boundary (finite sets, open chains, or any variant)
};

std::string to_string(Interior side);
std::optional<Interior> interior_from_string(const std::string& name);

/// A domain D described by its boundary and the side that counts as interior.
struct DomainSpec {
    BoundarySet boundary;
    std::optional<Interior> interior;

    std::size_t dim() const { return boundary.dim(); }
    /// Strict membership in the open domain; throws if no interior tag is set.
    bool contains(const Point& x) const;
    /// Throws DomainError("point not in domain") unless contains(x).
    void require_inside(const Point& x) const;
};

/// Rejects interior tags that make no sense for the boundary variant.
void validate_interior(const BoundarySet& boundary, Interior side);

double point_segment_dist(const Point& p, const Point& a, const Point& b);

/// d(x, G) = inf over g in G of |x - g|.
double dist_to_set(const Point& x, const BoundarySet& g);

/// Symmetric Hausdorff distance. Supports FinitePointSet / PolygonalChain pairs
/// and concentric spheres; other analytic pairs throw.
double hausdorff_dist(const BoundarySet& a, const BoundarySet& b);

/// Replaces an analytic sphere by its inscribed regular polygon (2D) or its
/// two points (1D). Discrete sets are returned unchanged.
BoundarySet discretize(const BoundarySet& g, std::size_t segments = 512);

/// Closed regular `sides`-gon inscribed in the circle (center, radius), first vertex on the +x axis.
BoundarySet regular_polygon(const Point& center, double radius, std::size_t sides);

/// Crossing-number test; `vertices` describe a closed planar polygon.
bool point_in_polygon(const Point& p, const std::vector<Point>& vertices);

}  // namespace stilde
