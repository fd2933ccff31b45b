#include "stilde/verify.hpp"

#include "stilde/mobius.hpp"
#include "stilde/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace stilde {

namespace {

// Members of a 1-D boundary, sorted and deduplicated.
std::vector<double> line_boundary_coordinates(const BoundarySet& g) {
    std::set<double> coords;
    if (const auto* s = g.get_if<Sphere>()) {
        coords = {s->center[0] - s->radius, s->center[0] + s->radius};
    } else if (const auto* ps = g.get_if<FinitePointSet>()) {
        for (const Point& p : ps->points) coords.insert(p[0]);
    }
    return {coords.begin(), coords.end()};
}

constexpr int kFamilySteps = 64;

struct TriangleSample {
    const Point& x;
    const Point& y;
    const Point& z;
    double s_xy;
    double s_xz;
    double s_yz;
};

void record_triangle(CheckSummary& check, const TriangleSample& s, const BoundarySet& g, double c) {
    check.record(s.s_xz + s.s_yz - s.s_xy, [&] {
        return Witness{{{"x", s.x}, {"y", s.y}, {"z", s.z}},
                       {{"S_xy", s.s_xy},
                        {"S_xz", s.s_xz},
                        {"S_yz", s.s_yz},
                        {"c", c},
                        {"deficiency_h", triangle_deficiency(s.x, s.y, s.z, g)}}};
    });
}

}  // namespace

bool SweepResult::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckSummary& c) { return c.passed(); });
}

const CheckSummary* SweepResult::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

const CheckSummary* SweepResult::first_failure() const {
    for (const auto& c : checks)
        if (!c.passed()) return &c;
    return nullptr;
}

nlohmann::ordered_json witness_json(const std::string& check, const Witness& w) {
    nlohmann::ordered_json j;
    j["violation"] = check;
    nlohmann::ordered_json pts = nlohmann::ordered_json::object();
    for (const auto& [name, p] : w.points) pts[name] = std::vector<double>(p.coords().begin(), p.coords().end());
    j["points"] = std::move(pts);
    nlohmann::ordered_json vals = nlohmann::ordered_json::object();
    for (const auto& [name, v] : w.values) vals[name] = v;
    j["values"] = std::move(vals);
    j["slack"] = w.slack;
    return j;
}

SweepResult verify_axioms(const DomainSpec& domain, const MetricParams& p, std::size_t samples,
                          std::uint64_t seed) {
    const BoundarySet& g = domain.boundary;
    const double c = p.c();
    CheckSummary triangle{"triangle", kClosedFormTol};
    CheckSummary symmetry{"symmetry", 0.0};
    CheckSummary identity{"identity", 0.0};

    if (g.dim() == 1) {
        auto coords = line_boundary_coordinates(g);
        for (std::size_t i = 0; i + 1 < coords.size(); ++i) {
            const double mid = 0.5 * (coords[i] + coords[i + 1]);
            const double half = 0.5 * (coords[i + 1] - coords[i]);
            Point z{mid};
            for (int k = 0; k < kFamilySteps; ++k) {
                double t = half * (1.0 - static_cast<double>(k) / kFamilySteps);
                Point x{mid + t};
                Point y{mid - t};
                record_triangle(triangle,
                                {x, y, z, stilde_metric(x, y, g, p), stilde_metric(x, z, g, p),
                                 stilde_metric(y, z, g, p)},
                                g, c);
            }
        }
    }

    DomainSampler sampler(domain);
    Rng rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        Point x = sampler.sample(rng);
        Point y = sampler.sample(rng);
        Point z = sampler.sample(rng);
        const double dx = dist_to_set(x, g);
        const double dy = dist_to_set(y, g);
        const double dz = dist_to_set(z, g);
        const double s_xy = stilde_metric_from_distances(euclid_dist(x, y), dx, dy, c);
        const double s_xz = stilde_metric_from_distances(euclid_dist(x, z), dx, dz, c);
        const double s_yz = stilde_metric_from_distances(euclid_dist(y, z), dy, dz, c);
        record_triangle(triangle, {x, y, z, s_xy, s_xz, s_yz}, g, c);
        record_triangle(triangle, {x, z, y, s_xz, s_xy, s_yz}, g, c);
        record_triangle(triangle, {y, z, x, s_yz, s_xy, s_xz}, g, c);

        const double s_yx = stilde_metric_from_distances(euclid_dist(y, x), dy, dx, c);
        symmetry.record(-std::abs(s_xy - s_yx), [&] {
            return Witness{{{"x", x}, {"y", y}}, {{"S_xy", s_xy}, {"S_yx", s_yx}}};
        });
        const double s_xx = stilde_metric(x, x, g, p);
        identity.record(-std::abs(s_xx), [&] { return Witness{{{"x", x}}, {{"S_xx", s_xx}}}; });
        if (!(x == y)) {
            identity.record(s_xy > 0.0 ? 0.0 : -1.0,
                            [&] { return Witness{{{"x", x}, {"y", y}}, {{"S_xy", s_xy}}}; });
        }
    }
    return {{triangle, symmetry, identity}};
}

SharpnessSweep sharpness_sweep(const std::vector<double>& Ms, std::optional<double> c) {
    SharpnessSweep sweep;
    CheckSummary triangle{"triangle_at_c", kClosedFormTol};
    CheckSummary closed{"closed_form", kClosedFormTol};
    CheckSummary below_two{"below_two", 0.0};
    CheckSummary monotone{"monotone_in_M", 0.0};
    constexpr int kSteps = 16;
    double previous_at_M = -1.0;
    for (double M : Ms) {
        if (!(M > 0.0)) throw std::invalid_argument("sharpness sweep needs M > 0");
        BoundarySet g = BoundarySet::points({Point{-M}, Point{M}});
        for (int j = 1; j <= kSteps; ++j) {
            const double t = M * j / kSteps;
            const double h = triangle_deficiency(Point{t}, Point{-t}, Point{0.0}, g);
            const double closed_form = sharpness_closed_form(M, t);
            sweep.rows.push_back({M, t, h, closed_form});
            sweep.sup_deficiency = std::max(sweep.sup_deficiency, h);
            auto witness = [&] {
                return Witness{{{"x", Point{t}}, {"y", Point{-t}}, {"z", Point{0.0}}},
                               {{"M", M}, {"t", t}, {"deficiency_h", h}, {"closed_form", closed_form}}};
            };
            closed.record(-std::abs(h - closed_form), witness);
            below_two.record(2.0 - h, witness);
            if (c) {
                const MetricParams p(*c);
                const double sxy = stilde_metric(Point{t}, Point{-t}, g, p);
                const double sxz = stilde_metric(Point{t}, Point{0.0}, g, p);
                const double syz = stilde_metric(Point{-t}, Point{0.0}, g, p);
                triangle.record(sxz + syz - sxy, [&] {
                    Witness w = witness();
                    w.values.insert(w.values.end(), {{"c", *c}, {"S_xy", sxy}, {"S_xz", sxz}, {"S_yz", syz}});
                    return w;
                });
            }
            if (j == kSteps) {
                if (previous_at_M >= 0.0) monotone.record(h - previous_at_M, witness);
                previous_at_M = h;
            }
        }
    }
    sweep.result.checks = {closed, below_two, monotone};
    if (c) sweep.result.checks.push_back(triangle);
    return sweep;
}

SweepResult verify_bounds(const DomainSpec& domain, const MetricParams& p, std::size_t samples,
                          std::uint64_t seed) {
    if (!domain.interior) throw std::invalid_argument("verify-bounds needs a domain with an interior tag");
    const BoundarySet& g = domain.boundary;
    const auto* sphere = g.get_if<Sphere>();
    const bool unit_ball = sphere && domain.interior == Interior::Inside && sphere->radius == 1.0 &&
                           sphere->center == Point::zero(g.dim());

    CheckSummary envelope{"t_envelope", kOptimizerTol};
    CheckSummary sandwich{"sandwich", kClosedFormTol};
    CheckSummary hyperbolic{"hyperbolic", kClosedFormTol};

    DomainSampler sampler(domain);
    Rng rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        Point x = sampler.sample(rng);
        Point y = sampler.sample(rng);
        if (x == y) continue;
        const double s = stilde_metric(x, y, g, p);
        const TBounds b = t_comparison_bounds(x, y, domain, p);
        envelope.record(std::min(s - b.lower, b.upper - s), [&] {
            return Witness{{{"x", x}, {"y", y}},
                           {{"lower", b.lower}, {"S", s}, {"upper", b.upper}, {"t", b.t}, {"d_xy", b.d_xy}}};
        });

        const double d = euclid_dist(x, y);
        const DistanceSandwich ds = distance_sandwich(x, y, g, p);
        sandwich.record(std::min(d - ds.lower, ds.upper - d) / std::max(1.0, d), [&] {
            return Witness{{{"x", x}, {"y", y}}, {{"lower", ds.lower}, {"distance", d}, {"upper", ds.upper}}};
        });

        if (unit_ball && x.norm() > 0.0 && y.norm() > 0.0) {
            const double bound = hyperbolic_upper_bound(x, y, p);
            hyperbolic.record(bound - s, [&] {
                return Witness{{{"x", x}, {"y", y}}, {{"S", s}, {"bound", bound}}};
            });
        }
    }
    SweepResult out{{envelope, sandwich}};
    if (unit_ball) out.checks.push_back(hyperbolic);
    return out;
}

BallSweep verify_balls(const DomainSpec& domain, const MetricParams& p, std::size_t centers, std::size_t cloud,
                       std::uint64_t seed) {
    if (!domain.interior) throw std::invalid_argument("balls needs a domain with an interior tag");
    const BoundarySet& g = domain.boundary;
    CheckSummary inner{"inner_inclusion", kBallTol};
    CheckSummary outer{"outer_inclusion", kBallTol};
    BallSweep sweep;

    DomainSampler sampler(domain);
    Rng rng(seed);
    const double log_lo = std::log(1e-4);
    const double log_hi = std::log(2.0);
    for (std::size_t k = 0; k < centers; ++k) {
        Point x = sampler.sample(rng);
        double dx = dist_to_set(x, g);
        while (dx < 1e-3) {
            x = sampler.sample(rng);
            dx = dist_to_set(x, g);
        }
        const double r = rng.uniform(0.05, 2.0);
        const BallInclusionRadii radii = ball_inclusion_radii(dx, r, p);
        BallRow row{x, dx, r, radii.l, radii.L, 0, 0, 0, 0, 0};
        const std::size_t before = inner.violations + outer.violations;
        while (row.cloud < cloud) {
            Point y = x + random_unit_vector(rng, x.dim()) * std::exp(rng.uniform(log_lo, log_hi));
            if (!domain.contains(y)) continue;
            ++row.cloud;
            const double t = tri_ratio(x, y, domain);
            const double s = stilde_metric(x, y, g, p);
            auto witness = [&] {
                return Witness{{{"x", x}, {"y", y}},
                               {{"t", t}, {"S", s}, {"r", r}, {"l", radii.l}, {"L", radii.L}}};
            };
            if (t < radii.l) {
                ++row.in_t_l;
                inner.record(r - s, witness);
            }
            if (s < r) {
                ++row.in_s_r;
                outer.record(radii.L - t, witness);
            }
            if (t < radii.L) ++row.in_t_L;
        }
        row.misclassified = inner.violations + outer.violations - before;
        sweep.rows.push_back(std::move(row));
    }
    sweep.result.checks = {inner, outer};
    return sweep;
}

SweepResult verify_mobius(std::size_t dim, const MetricParams& p, std::size_t samples, std::uint64_t seed) {
    if (dim < 2) throw DimensionError("mobius sweeps need n >= 2");
    CheckSummary involution{"reflection_involution", kClosedFormTol};
    CheckSummary identity{"reflection_distance_identity", kClosedFormTol};
    CheckSummary to_origin{"sigma_a_to_origin", kClosedFormTol};
    CheckSummary ball{"ball_preservation", 0.0};
    CheckSummary sphere{"sphere_preservation", kDistortionTol};
    CheckSummary sigma_norm{"sigma_norm_chain", kClosedFormTol};
    CheckSummary log_ratio{"log_ratio", 4.0 * std::numeric_limits<double>::epsilon()};
    CheckSummary distortion{"distortion", kDistortionTol};
    CheckSummary rotation_only{"distortion_a0", kClosedFormTol};
    CheckSummary near_boundary{"distortion_near_boundary", kNearBoundaryTol};

    const BoundarySet unit_sphere = BoundarySet::sphere(Point::zero(dim), 1.0);
    const Point origin = Point::zero(dim);
    const Point box(std::vector<double>(dim, 1.0));
    Rng rng(seed);

    auto ratio_of = [&](const MobiusMap& phi, const Point& x, const Point& y) {
        return stilde_metric(phi(x), phi(y), unit_sphere, p) / stilde_metric(x, y, unit_sphere, p);
    };

    for (std::size_t i = 0; i < samples; ++i) {
        // reflections in arbitrary spheres
        {
            SphereReflection psi(random_in_box(rng, box * -2.0, box * 2.0), rng.uniform(0.1, 2.0));
            Point x = random_in_box(rng, box * -3.0, box * 3.0);
            Point y = random_in_box(rng, box * -3.0, box * 3.0);
            if (euclid_dist(x, psi.center) > 1e-3 && euclid_dist(y, psi.center) > 1e-3) {
                Point back = psi.reflect(psi.reflect(x));
                involution.record(-euclid_dist(back, x) / std::max(1.0, x.norm()), [&] {
                    return Witness{{{"center", psi.center}, {"x", x}, {"psi_psi_x", back}}, {{"radius", psi.radius}}};
                });
                const double direct = euclid_dist(psi.reflect(x), psi.reflect(y));
                const double closed = psi.image_distance(x, y);
                identity.record(-std::abs(direct - closed) / std::max(1.0, closed), [&] {
                    return Witness{{{"center", psi.center}, {"x", x}, {"y", y}},
                                   {{"radius", psi.radius}, {"direct", direct}, {"closed_form", closed}}};
                });
            }
        }
        // sigma_a structure
        Point a = random_in_ball(rng, origin, 0.95);
        const MobiusMap sigma = mobius_to_origin(a);
        {
            const double at_a = sigma(a).norm();
            to_origin.record(-at_a, [&] { return Witness{{{"a", a}}, {{"norm_sigma_a", at_a}}}; });
            Point x = random_in_ball(rng, origin, 0.999);
            const double nx = sigma(x).norm();
            ball.record(1.0 - nx, [&] { return Witness{{{"a", a}, {"x", x}}, {{"norm_sigma_x", nx}}}; });
            Point u = random_unit_vector(rng, dim);
            const double nu = sigma(u).norm();
            sphere.record(-std::abs(nu - 1.0), [&] { return Witness{{{"a", a}, {"u", u}}, {{"norm_sigma_u", nu}}}; });
        }
        // two-sided estimate for |b - a| / (|a| |b - a*|)
        if (a.norm() > 0.0) {
            Point b = random_in_ball(rng, origin, 0.999);
            const SigmaNormBounds sb = sigma_norm_bounds(a, b);
            sigma_norm.record(std::min(sb.mid - sb.lo, sb.hi - sb.mid), [&] {
                return Witness{{{"a", a}, {"b", b}}, {{"lo", sb.lo}, {"mid", sb.mid}, {"hi", sb.hi}}};
            });
        }
        {
            const double y = std::exp(rng.uniform(std::log(1e-6), std::log(1e6)));
            const double x = y * std::exp(rng.uniform(0.0, std::log(1e6)));
            const LogRatioCheck lr = log_ratio_bound(x, y);
            log_ratio.record(lr.slack / lr.rhs, [&] {
                return Witness{{}, {{"x", x}, {"y", y}, {"lhs", lr.lhs}, {"rhs", lr.rhs}}};
            });
        }
        // distortion of S~_{S^{n-1},c}
        {
            MobiusMap phi = i % 2 == 0 ? sigma : sigma.with_orthogonal(random_rotation(rng, dim));
            Point x = random_in_ball(rng, origin, 0.999);
            Point y = random_in_ball(rng, origin, 0.999);
            if (!(x == y)) {
                const DistortionEnvelope env = distortion_envelope(a);
                const double ratio = ratio_of(phi, x, y);
                distortion.record(std::min(ratio - env.lo, env.hi - ratio), [&] {
                    return Witness{{{"a", a}, {"x", x}, {"y", y}},
                                   {{"ratio", ratio}, {"lo", env.lo}, {"hi", env.hi}, {"c", p.c()}}};
                });
                MobiusMap rot = MobiusMap::identity(dim).with_orthogonal(random_rotation(rng, dim));
                const double r0 = ratio_of(rot, x, y);
                rotation_only.record(-std::abs(r0 - 1.0), [&] {
                    return Witness{{{"x", x}, {"y", y}}, {{"ratio", r0}}};
                });
            }
        }
        if (i % 10 == 0) {
            Point a_edge = random_unit_vector(rng, dim) * 0.99;
            MobiusMap phi = mobius_to_origin(a_edge).with_orthogonal(random_rotation(rng, dim));
            Point x = random_in_ball(rng, origin, 0.999);
            Point y = random_in_ball(rng, origin, 0.999);
            if (!(x == y)) {
                const DistortionEnvelope env = distortion_envelope(a_edge);
                const double ratio = ratio_of(phi, x, y);
                near_boundary.record(std::min(ratio - env.lo, env.hi - ratio), [&] {
                    return Witness{{{"a", a_edge}, {"x", x}, {"y", y}},
                                   {{"ratio", ratio}, {"lo", env.lo}, {"hi", env.hi}}};
                });
            }
        }
    }
    return {{involution, identity, to_origin, ball, sphere, sigma_norm, log_ratio, distortion, rotation_only,
             near_boundary}};
}

SweepResult verify_stability(std::size_t samples, std::size_t set_size, std::uint64_t seed) {
    CheckSummary stability{"hausdorff_stability", kClosedFormTol};
    Rng rng(seed);
    const Point lo{-1.0, -1.0};
    const Point hi{1.0, 1.0};
    for (std::size_t i = 0; i < samples; ++i) {
        std::vector<Point> a;
        std::vector<Point> b;
        for (std::size_t k = 0; k < set_size; ++k) a.push_back(random_in_box(rng, lo, hi));
        for (std::size_t k = 0; k < set_size; ++k) b.push_back(random_in_box(rng, lo, hi));
        Point x = random_in_box(rng, lo * 2.0, hi * 2.0);
        const StabilityCheck chk = stability_check(x, BoundarySet::points(a), BoundarySet::points(b));
        stability.record(chk.rhs - chk.lhs, [&] { return Witness{{{"x", x}}, {{"lhs", chk.lhs}, {"rhs", chk.rhs}}}; });
    }
    return {{stability}};
}

std::vector<double> dyadic_schedule(std::size_t count) {
    std::vector<double> s;
    for (std::size_t n = 1; n <= count; ++n) s.push_back(std::ldexp(1.0, -static_cast<int>(n)));
    return s;
}

}  // namespace stilde
