#include "stilde/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace stilde {

namespace {

void require_common_dim(const std::vector<Point>& pts, const char* what) {
    for (const Point& p : pts) {
        if (p.dim() != pts.front().dim()) {
            throw DimensionError(std::string(what) + " members must share one dimension");
        }
    }
}

// Samples per segment at the coarsest refinement level is 2^kFirstLevel.
constexpr int kFirstLevel = 4;
constexpr double kRefineTol = 1e-9;
constexpr std::size_t kMaxSamples = std::size_t{1} << 20;

double sup_over_points(const std::vector<Point>& pts, const BoundarySet& other) {
    double worst = 0.0;
    for (const Point& p : pts) worst = std::max(worst, dist_to_set(p, other));
    return worst;
}

// sup over the chain of d(., other), refined dyadically per segment until two
// successive levels agree.
double sup_over_chain(const PolygonalChain& chain, const BoundarySet& other) {
    const std::size_t segments = chain.segment_count();
    double sup = sup_over_points(chain.vertices, other);
    int level = 0;
    double previous = -1.0;
    while (true) {
        ++level;
        const std::size_t per_segment = std::size_t{1} << level;
        // odd indices are exactly the samples new at this level
        for (std::size_t s = 0; s < segments; ++s) {
            const Point& a = chain.segment_start(s);
            const Point& b = chain.segment_end(s);
            for (std::size_t j = 1; j < per_segment; j += 2) {
                double u = static_cast<double>(j) / static_cast<double>(per_segment);
                sup = std::max(sup, dist_to_set(a + (b - a) * u, other));
            }
        }
        if (level >= kFirstLevel && std::abs(sup - previous) <= kRefineTol) break;
        if (segments * per_segment * 2 > kMaxSamples) break;
        previous = sup;
    }
    return sup;
}

double one_sided(const BoundarySet& from, const BoundarySet& to) {
    if (const auto* ps = from.get_if<FinitePointSet>()) return sup_over_points(ps->points, to);
    return sup_over_chain(*from.get_if<PolygonalChain>(), to);
}

}  // namespace

BoundarySet BoundarySet::sphere(Point center, double radius) {
    if (!(radius > 0.0) || !std::isfinite(radius)) {
        throw std::invalid_argument("sphere radius must be positive and finite");
    }
    std::size_t dim = center.dim();
    return BoundarySet(Sphere{std::move(center), radius}, dim);
}

BoundarySet BoundarySet::halfspace(Point normal, double offset) {
    if (std::abs(normal.norm() - 1.0) > 1e-12) {
        throw std::invalid_argument("half-space normal must have unit length");
    }
    if (!std::isfinite(offset)) throw std::invalid_argument("half-space offset must be finite");
    std::size_t dim = normal.dim();
    return BoundarySet(HalfSpaceBoundary{std::move(normal), offset}, dim);
}

BoundarySet BoundarySet::points(std::vector<Point> pts) {
    if (pts.empty()) throw std::invalid_argument("point set must be nonempty");
    require_common_dim(pts, "point set");
    std::size_t dim = pts.front().dim();
    return BoundarySet(FinitePointSet{std::move(pts)}, dim);
}

BoundarySet BoundarySet::chain(std::vector<Point> vertices, bool closed) {
    if (vertices.size() < 2) throw std::invalid_argument("chain needs at least two vertices");
    require_common_dim(vertices, "chain");
    if (vertices.front().dim() != 2) throw DimensionError("polygonal chains are planar (dim 2)");
    PolygonalChain chain{std::move(vertices), closed};
    if (closed && chain.vertices.size() < 3) {
        throw std::invalid_argument("closed chain needs at least three vertices");
    }
    for (std::size_t s = 0; s < chain.segment_count(); ++s) {
        if (chain.segment_start(s) == chain.segment_end(s)) {
            throw std::invalid_argument("chain has repeated consecutive vertex at index " +
                                        std::to_string(s));
        }
    }
    return BoundarySet(std::move(chain), 2);
}

std::string BoundarySet::kind() const {
    switch (value_.index()) {
        case 0: return "sphere";
        case 1: return "halfspace";
        case 2: return "points";
        default: return "chain";
    }
}

bool BoundarySet::is_discrete() const {
    return std::holds_alternative<FinitePointSet>(value_) ||
           std::holds_alternative<PolygonalChain>(value_);
}

const std::vector<Point>& BoundarySet::members() const {
    if (const auto* ps = get_if<FinitePointSet>()) return ps->points;
    if (const auto* ch = get_if<PolygonalChain>()) return ch->vertices;
    throw std::invalid_argument("analytic boundary has no member list");
}

std::string to_string(Interior side) {
    switch (side) {
        case Interior::Inside: return "inside";
        case Interior::Outside: return "outside";
        case Interior::Positive: return "positive";
        case Interior::Negative: return "negative";
        case Interior::Complement: return "complement";
    }
    return "complement";
}

std::optional<Interior> interior_from_string(const std::string& name) {
    if (name == "inside") return Interior::Inside;
    if (name == "outside") return Interior::Outside;
    if (name == "positive") return Interior::Positive;
    if (name == "negative") return Interior::Negative;
    if (name == "complement") return Interior::Complement;
    return std::nullopt;
}

void validate_interior(const BoundarySet& boundary, Interior side) {
    if (side == Interior::Complement) return;
    bool ok = false;
    if (boundary.get_if<Sphere>()) {
        ok = side == Interior::Inside || side == Interior::Outside;
    } else if (boundary.get_if<HalfSpaceBoundary>()) {
        ok = side == Interior::Positive || side == Interior::Negative;
    } else if (const auto* ch = boundary.get_if<PolygonalChain>()) {
        ok = ch->closed && (side == Interior::Inside || side == Interior::Outside);
    }
    if (!ok) {
        throw std::invalid_argument("interior tag '" + to_string(side) + "' is not valid for a " +
                                    boundary.kind() + " boundary");
    }
}

bool DomainSpec::contains(const Point& x) const {
    if (!interior) throw std::invalid_argument("domain has no interior tag");
    require_same_dim(x, Point::zero(boundary.dim()));
    if (dist_to_set(x, boundary) <= 0.0) return false;
    switch (*interior) {
        case Interior::Complement:
            return true;
        case Interior::Positive:
        case Interior::Negative: {
            const auto& h = *boundary.get_if<HalfSpaceBoundary>();
            double side = h.normal.dot(x) - h.offset;
            return *interior == Interior::Positive ? side > 0.0 : side < 0.0;
        }
        case Interior::Inside:
        case Interior::Outside: {
            bool inside;
            if (const auto* s = boundary.get_if<Sphere>()) {
                inside = euclid_dist(x, s->center) < s->radius;
            } else {
                inside = point_in_polygon(x, boundary.get_if<PolygonalChain>()->vertices);
            }
            return *interior == Interior::Inside ? inside : !inside;
        }
    }
    return false;
}

void DomainSpec::require_inside(const Point& x) const {
    if (!contains(x)) throw DomainError("point not in domain: " + x.to_string());
}

double point_segment_dist(const Point& p, const Point& a, const Point& b) {
    Point ab = b - a;
    double len2 = ab.norm_squared();
    double u = len2 > 0.0 ? std::clamp((p - a).dot(ab) / len2, 0.0, 1.0) : 0.0;
    return euclid_dist(p, a + ab * u);
}

double dist_to_set(const Point& x, const BoundarySet& g) {
    require_same_dim(x, Point::zero(g.dim()));
    return std::visit(
        [&](const auto& b) -> double {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, Sphere>) {
                return std::abs(euclid_dist(x, b.center) - b.radius);
            } else if constexpr (std::is_same_v<T, HalfSpaceBoundary>) {
                return std::abs(b.normal.dot(x) - b.offset);
            } else if constexpr (std::is_same_v<T, FinitePointSet>) {
                double best = std::numeric_limits<double>::infinity();
                for (const Point& p : b.points) best = std::min(best, euclid_dist(x, p));
                return best;
            } else {
                double best = std::numeric_limits<double>::infinity();
                for (std::size_t s = 0; s < b.segment_count(); ++s) {
                    best = std::min(best, point_segment_dist(x, b.segment_start(s), b.segment_end(s)));
                }
                return best;
            }
        },
        g.variant());
}

double hausdorff_dist(const BoundarySet& a, const BoundarySet& b) {
    if (a.dim() != b.dim()) throw DimensionError("hausdorff_dist: sets live in different dimensions");
    const auto* sa = a.get_if<Sphere>();
    const auto* sb = b.get_if<Sphere>();
    if (sa && sb && sa->center == sb->center) return std::abs(sa->radius - sb->radius);
    if (!a.is_discrete() || !b.is_discrete()) {
        throw std::invalid_argument("unsupported analytic pair (" + a.kind() + ", " + b.kind() +
                                    ") - discretize first");
    }
    return std::max(one_sided(a, b), one_sided(b, a));
}

BoundarySet discretize(const BoundarySet& g, std::size_t segments) {
    if (g.is_discrete()) return g;
    const auto* s = g.get_if<Sphere>();
    if (!s) throw std::invalid_argument("cannot discretize an unbounded half-space boundary");
    if (g.dim() == 1) {
        return BoundarySet::points({s->center - Point{s->radius}, s->center + Point{s->radius}});
    }
    if (g.dim() != 2) throw DimensionError("sphere discretization is implemented for n <= 2");
    return regular_polygon(s->center, s->radius, segments);
}

BoundarySet regular_polygon(const Point& center, double radius, std::size_t sides) {
    if (sides < 3) throw std::invalid_argument("polygon needs at least three sides");
    std::vector<Point> v;
    v.reserve(sides);
    for (std::size_t k = 0; k < sides; ++k) {
        double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(sides);
        v.push_back(center + Point{radius * std::cos(theta), radius * std::sin(theta)});
    }
    return BoundarySet::chain(std::move(v), true);
}

bool point_in_polygon(const Point& p, const std::vector<Point>& vertices) {
    bool inside = false;
    const std::size_t n = vertices.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const Point& a = vertices[i];
        const Point& b = vertices[j];
        if ((a[1] > p[1]) != (b[1] > p[1])) {
            double x_cross = (b[0] - a[0]) * (p[1] - a[1]) / (b[1] - a[1]) + a[0];
            if (p[0] < x_cross) inside = !inside;
        }
    }
    return inside;
}

}  // namespace stilde
