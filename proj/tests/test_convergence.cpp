#include "stilde/convergence.hpp"
#include "stilde/sampling.hpp"
#include "stilde/verify.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace stilde {
namespace {

const BoundarySet kPm4 = BoundarySet::points({Point{-4.0}, Point{4.0}});

TEST(HausdorffStability, Examples) {
    StabilityCheck same = stability_check(Point{0.5}, kPm4, kPm4);
    EXPECT_EQ(same.lhs, 0.0);
    EXPECT_EQ(same.rhs, 0.0);
    StabilityCheck grown = stability_check(Point{0.0}, kPm4, BoundarySet::points({Point{-4.25}, Point{4.25}}));
    EXPECT_DOUBLE_EQ(grown.lhs, 0.25);
    EXPECT_DOUBLE_EQ(grown.rhs, 0.25);
}

TEST(HausdorffStability, RandomSetsProperty) {
    SweepResult r = verify_stability(2000, 20, 4);
    ASSERT_EQ(r.checks.size(), 1U);
    EXPECT_EQ(r.checks[0].samples, 2000U);
    EXPECT_TRUE(r.passed());
}

TEST(Perturb, Variants) {
    BoundarySet g = perturb_outward(kPm4, 0.5);
    EXPECT_DOUBLE_EQ(hausdorff_dist(g, kPm4), 0.5);
    BoundarySet s = perturb_outward(BoundarySet::sphere(Point{0.0, 0.0}, 1.0), 0.25);
    EXPECT_DOUBLE_EQ(s.get_if<Sphere>()->radius, 1.25);
    EXPECT_THROW(perturb_outward(BoundarySet::halfspace(Point{0.0, 1.0}, 0.0), 0.1), std::invalid_argument);
}

TEST(Convergence, HarmonicSchedule) {
    std::vector<double> schedule;
    for (int n = 1; n <= 10; ++n) schedule.push_back(1.0 / n);
    ConvergenceTrace tr = convergence_run(Point{3.0}, Point{1.0}, kPm4, schedule, MetricParams(2.0));
    ASSERT_EQ(tr.rows.size(), 10U);
    EXPECT_LT(tr.rows[9].gap, tr.rows[4].gap);
    EXPECT_LT(tr.rows[4].gap, tr.rows[0].gap);
    EXPECT_TRUE(tr.rate_bound_holds);
    EXPECT_TRUE(tr.stability_holds);
}

TEST(Convergence, ZeroScheduleHasZeroGap) {
    ConvergenceTrace tr = convergence_run(Point{3.0}, Point{1.0}, kPm4, {0.0, 0.0, 0.0}, MetricParams(2.0));
    for (const ConvergenceRow& r : tr.rows) {
        EXPECT_EQ(r.eps_n, 0.0);
        EXPECT_EQ(r.gap, 0.0);
    }
}

TEST(Convergence, PolygonDilationMonotone) {
    BoundarySet poly = regular_polygon(Point{0.0, 0.0}, 1.0, 64);
    ConvergenceTrace tr =
        convergence_run(Point{0.5, 0.0}, Point{-0.5, 0.0}, poly, dyadic_schedule(30), MetricParams(2.0));
    for (std::size_t i = 1; i < tr.rows.size(); ++i) EXPECT_LE(tr.rows[i].gap, tr.rows[i - 1].gap);
    EXPECT_LT(tr.rows[24].gap, 1e-6);
    EXPECT_TRUE(tr.rate_bound_holds);
}

TEST(Convergence, RateBoundOnRandomSets) {
    Rng rng(6);
    for (int i = 0; i < 20; ++i) {
        std::vector<Point> pts;
        for (int k = 0; k < 10; ++k) pts.push_back(random_in_box(rng, Point{-1.0, -1.0}, Point{1.0, 1.0}));
        BoundarySet g = BoundarySet::points(pts);
        Point x = random_in_box(rng, Point{-2.0, -2.0}, Point{2.0, 2.0});
        Point y = random_in_box(rng, Point{-2.0, -2.0}, Point{2.0, 2.0});
        ConvergenceTrace tr = convergence_run(x, y, g, dyadic_schedule(20), MetricParams(2.5));
        EXPECT_TRUE(tr.rate_bound_holds);
        EXPECT_TRUE(tr.stability_holds);
    }
}

TEST(Convergence, RejectsIncreasingSchedule) {
    EXPECT_THROW(convergence_run(Point{3.0}, Point{1.0}, kPm4, {0.1, 0.2}, MetricParams(2.0)),
                 std::invalid_argument);
    EXPECT_THROW(convergence_run(Point{3.0}, Point{1.0}, kPm4, {-0.1}, MetricParams(2.0)), std::invalid_argument);
}

TEST(Schedule, Dyadic) {
    auto s = dyadic_schedule(3);
    ASSERT_EQ(s.size(), 3U);
    EXPECT_EQ(s[0], 0.5);
    EXPECT_EQ(s[2], 0.125);
}

}  // namespace
}  // namespace stilde
