#pragma once

#include "stilde/boundary.hpp"
#include "stilde/geometry.hpp"

#include <cstdint>
#include <random>

namespace stilde {

/// Seeded generator for property sweeps. Uses mt19937_64 (fully specified by
/// the standard) and its own uniform mapping, so sequences are identical across
/// standard-library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    std::uint64_t next() { return engine_(); }
    /// Uniform integer in [0, n).
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform() * static_cast<double>(n)); }

private:
    std::mt19937_64 engine_;
};

/// Uniform point in the open ball B(center, radius).
Point random_in_ball(Rng& rng, const Point& center, double radius);
/// Uniform point of the unit sphere S^{n-1}.
Point random_unit_vector(Rng& rng, std::size_t dim);
/// Uniform point in the axis-aligned box [lo, hi].
Point random_in_box(Rng& rng, const Point& lo, const Point& hi);

/// Orthonormalized random matrix with determinant +1.
Matrix random_rotation(Rng& rng, std::size_t dim);

/// Region from which sweeps draw points for a domain: the tagged open domain
/// when an interior tag is present (truncated to a bounded window for
/// unbounded domains), otherwise a box around the boundary.
class DomainSampler {
public:
    explicit DomainSampler(DomainSpec domain);

    const DomainSpec& domain() const { return domain_; }
    Point sample(Rng& rng) const;

private:
    DomainSpec domain_;
    Point box_lo_;
    Point box_hi_;
};

}  // namespace stilde
