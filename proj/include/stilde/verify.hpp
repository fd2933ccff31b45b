#pragma once

#include "stilde/boundary.hpp"
#include "stilde/convergence.hpp"
#include "stilde/metrics.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace stilde {

// Tolerances of the property sweeps.
inline constexpr double kClosedFormTol = 1e-12;  // identities without an inner optimizer
inline constexpr double kOptimizerTol = 1e-8;    // checks involving the numeric t_D sup
inline constexpr double kBallTol = 1e-9;
inline constexpr double kDistortionTol = 1e-10;
inline constexpr double kNearBoundaryTol = 1e-6;

/// A concrete counterexample to a checked inequality.
struct Witness {
    std::vector<std::pair<std::string, Point>> points;
    std::vector<std::pair<std::string, double>> values;
    double slack = 0.0;
};

/// Outcome of one checked property over a sweep. Slack is "how far inside the
/// inequality" a sample is; a sample violates when slack < -tolerance.
struct CheckSummary {
    CheckSummary(std::string check_name, double tol) : name(std::move(check_name)), tolerance(tol) {}

    std::string name;
    double tolerance = 0.0;
    std::size_t samples = 0;
    std::size_t violations = 0;
    double worst_slack = std::numeric_limits<double>::infinity();
    std::optional<Witness> first_violation;

    bool passed() const { return violations == 0; }
    /// Records one sample; `make_witness` is only invoked for the first violation.
    template <class MakeWitness>
    void record(double slack, MakeWitness&& make_witness) {
        ++samples;
        if (slack < worst_slack) worst_slack = slack;
        if (slack < -tolerance || std::isnan(slack)) {
            if (!first_violation) {
                first_violation = make_witness();
                first_violation->slack = slack;
            }
            ++violations;
        }
    }
};

struct SweepResult {
    std::vector<CheckSummary> checks;

    bool passed() const;
    const CheckSummary* find(const std::string& name) const;
    /// First violated check, if any.
    const CheckSummary* first_failure() const;
};

nlohmann::ordered_json witness_json(const std::string& check, const Witness& w);

/// Metric axioms of S~_{G,c} on points drawn from the domain: the triangle
/// inequality (all three arrangements of each random triple, preceded for
/// one-dimensional discrete/spherical boundaries by the symmetric families
/// x = m + t, y = m - t, z = m between consecutive boundary points, largest t
/// first), exact symmetry, and identity of indiscernibles.
SweepResult verify_axioms(const DomainSpec& domain, const MetricParams& p, std::size_t samples,
                          std::uint64_t seed);

struct SharpnessRow {
    double M;
    double t;
    double deficiency;   // h evaluated from s~ values
    double closed_form;  // 2 sqrt(1+M) / (sqrt(1+M) + sqrt(1+M-t))
};

struct SharpnessSweep {
    std::vector<SharpnessRow> rows;
    SweepResult result;
    /// sup of the deficiency over the sweep; c must be at least this large for
    /// the triangle inequality to hold at every swept triple.
    double sup_deficiency = 0.0;
};

/// Deficiency of the triangle inequality on R with G = {-M, M} at x = t,
/// y = -t, z = 0, for t = M j / 16, j = 1..16. Checks agreement with the closed
/// form, that it stays below 2, and that its value at t = M grows with M.
/// With `c` set, also checks the triangle inequality of S~_{G,c} at each triple.
SharpnessSweep sharpness_sweep(const std::vector<double>& Ms, std::optional<double> c = std::nullopt);

/// Comparison inequalities on random interior pairs of a tagged domain:
/// t_D envelopes, the distance sandwich, and (for the unit ball) the
/// hyperbolic upper bound.
SweepResult verify_bounds(const DomainSpec& domain, const MetricParams& p, std::size_t samples,
                          std::uint64_t seed);

struct BallRow {
    Point center;
    double dx;
    double r;
    double l;
    double L;
    std::size_t cloud;
    std::size_t in_t_l;   // samples with t < l
    std::size_t in_s_r;   // samples with S~ < r
    std::size_t in_t_L;   // samples with t < L
    std::size_t misclassified;
};

struct BallSweep {
    std::vector<BallRow> rows;
    SweepResult result;
};

/// Ball inclusion B_t(x,l) in B_S~(x,r) in B_t(x,L) on point clouds around
/// random centres. Cloud points sit at log-uniform distances in [1e-4, 2].
BallSweep verify_balls(const DomainSpec& domain, const MetricParams& p, std::size_t centers,
                       std::size_t cloud, std::uint64_t seed);

/// Sphere reflections, ball automorphisms and the distortion estimate in B^dim.
SweepResult verify_mobius(std::size_t dim, const MetricParams& p, std::size_t samples, std::uint64_t seed);

/// Hausdorff stability |d(x,G2) - d(x,G1)| <= d_H(G1,G2) for random x in
/// [-2,2]^2 and random `set_size`-point sets in [-1,1]^2.
SweepResult verify_stability(std::size_t samples, std::size_t set_size, std::uint64_t seed);

/// delta_n = 2^{-n}, n = 1..count.
std::vector<double> dyadic_schedule(std::size_t count);

}  // namespace stilde
