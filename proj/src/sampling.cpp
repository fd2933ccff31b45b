#include "stilde/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace stilde {

namespace {

constexpr double kHalfSpaceWindow = 5.0;
constexpr int kMaxRejections = 100000;

// Unit vectors completing `normal` to an orthonormal basis.
std::vector<Point> tangent_basis(const Point& normal) {
    std::vector<Point> basis{normal};
    for (std::size_t i = 0; i < normal.dim() && basis.size() < normal.dim(); ++i) {
        Point v = Point::axis(normal.dim(), i);
        for (const Point& b : basis) v = v - b * v.dot(b);
        if (v.norm() > 1e-8) basis.push_back(v / v.norm());
    }
    basis.erase(basis.begin());
    return basis;
}

}  // namespace

Point random_in_box(Rng& rng, const Point& lo, const Point& hi) {
    require_same_dim(lo, hi);
    std::vector<double> v(lo.dim());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = rng.uniform(lo[i], hi[i]);
    return Point(std::move(v));
}

Point random_in_ball(Rng& rng, const Point& center, double radius) {
    const std::size_t n = center.dim();
    std::vector<double> v(n);
    while (true) {
        double r2 = 0.0;
        for (double& c : v) {
            c = rng.uniform(-1.0, 1.0);
            r2 += c * c;
        }
        if (r2 < 1.0) break;
    }
    return center + Point(v) * radius;
}

Point random_unit_vector(Rng& rng, std::size_t dim) {
    while (true) {
        Point p = random_in_ball(rng, Point::zero(dim), 1.0);
        double n = p.norm();
        if (n > 1e-3) return p / n;
    }
}

Matrix random_rotation(Rng& rng, std::size_t dim) {
    Matrix m(dim);
    // Gram-Schmidt on random rows; retry the rare near-dependent draw
    for (std::size_t r = 0; r < dim;) {
        std::vector<double> row(dim);
        for (double& c : row) c = rng.uniform(-1.0, 1.0);
        // two passes: one loses orthogonality by eps / |row| on near-dependent draws
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t k = 0; k < r; ++k) {
                double dot = 0.0;
                for (std::size_t c = 0; c < dim; ++c) dot += row[c] * m(k, c);
                for (std::size_t c = 0; c < dim; ++c) row[c] -= dot * m(k, c);
            }
        }
        double norm = Point(row).norm();
        if (norm < 1e-3) continue;
        for (std::size_t c = 0; c < dim; ++c) m(r, c) = row[c] / norm;
        ++r;
    }
    if (m.determinant() < 0.0) {
        for (std::size_t c = 0; c < dim; ++c) m(dim - 1, c) = -m(dim - 1, c);
    }
    return m;
}

DomainSampler::DomainSampler(DomainSpec domain)
    : domain_(std::move(domain)), box_lo_(Point::zero(domain_.dim())), box_hi_(Point::zero(domain_.dim())) {
    if (domain_.interior) validate_interior(domain_.boundary, *domain_.interior);
    const std::size_t n = domain_.dim();
    if (const auto* s = domain_.boundary.get_if<Sphere>()) {
        double half = (domain_.interior == Interior::Outside ? 3.0 : 1.5) * s->radius;
        box_lo_ = s->center - Point(std::vector<double>(n, half));
        box_hi_ = s->center + Point(std::vector<double>(n, half));
    } else if (domain_.boundary.is_discrete()) {
        const auto& pts = domain_.boundary.members();
        std::vector<double> lo(pts.front().coords().begin(), pts.front().coords().end());
        std::vector<double> hi = lo;
        for (const Point& p : pts) {
            for (std::size_t i = 0; i < n; ++i) {
                lo[i] = std::min(lo[i], p[i]);
                hi[i] = std::max(hi[i], p[i]);
            }
        }
        double extent = 0.0;
        for (std::size_t i = 0; i < n; ++i) extent = std::max(extent, hi[i] - lo[i]);
        bool bounded_side = domain_.interior == Interior::Inside;
        double pad = bounded_side ? 0.0 : (extent > 0.0 ? 0.25 * extent : 1.0);
        for (std::size_t i = 0; i < n; ++i) {
            lo[i] -= pad;
            hi[i] += pad;
        }
        box_lo_ = Point(std::move(lo));
        box_hi_ = Point(std::move(hi));
    }
}

Point DomainSampler::sample(Rng& rng) const {
    const auto* h = domain_.boundary.get_if<HalfSpaceBoundary>();
    for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
        Point x = Point::zero(domain_.dim());
        if (h) {
            double height;
            if (domain_.interior == Interior::Positive) {
                height = kHalfSpaceWindow * (1.0 - rng.uniform());  // (0, window]
            } else if (domain_.interior == Interior::Negative) {
                height = -kHalfSpaceWindow * (1.0 - rng.uniform());
            } else {
                height = rng.uniform(-kHalfSpaceWindow, kHalfSpaceWindow);
            }
            x = h->normal * (h->offset + height);
            for (const Point& t : tangent_basis(h->normal)) {
                x = x + t * rng.uniform(-kHalfSpaceWindow, kHalfSpaceWindow);
            }
        } else if (domain_.interior == Interior::Inside && domain_.boundary.get_if<Sphere>()) {
            const auto& s = *domain_.boundary.get_if<Sphere>();
            x = random_in_ball(rng, s.center, s.radius);
        } else {
            x = random_in_box(rng, box_lo_, box_hi_);
        }
        if (!domain_.interior || domain_.contains(x)) return x;
    }
    throw std::runtime_error("domain sampler could not find an interior point");
}

}  // namespace stilde
