#include "stilde/boundary.hpp"
#include "stilde/domain_json.hpp"
#include "stilde/geometry.hpp"
#include "stilde/sampling.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

namespace stilde {
namespace {

const BoundarySet kPm4 = BoundarySet::points({Point{-4.0}, Point{4.0}});

// Dense sampling of every segment; an upper bound for the exact distance.
double brute_chain_dist(const Point& x, const PolygonalChain& chain, int per_segment) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t s = 0; s < chain.segment_count(); ++s) {
        const Point& a = chain.segment_start(s);
        const Point& b = chain.segment_end(s);
        for (int j = 0; j <= per_segment; ++j) {
            best = std::min(best, euclid_dist(x, a + (b - a) * (static_cast<double>(j) / per_segment)));
        }
    }
    return best;
}

TEST(Point, RejectsEmptyAndNonFinite) {
    EXPECT_THROW(Point(std::vector<double>{}), std::invalid_argument);
    EXPECT_THROW((Point{1.0, std::nan("")}), std::invalid_argument);
    EXPECT_THROW((Point{std::numeric_limits<double>::infinity()}), std::invalid_argument);
}

TEST(Point, NormAvoidsOverflow) {
    Point p{1e200, 1e200};
    EXPECT_NEAR(p.norm() / 1e200, std::sqrt(2.0), 1e-15);
}

TEST(Point, ArithmeticChecksDimension) {
    EXPECT_THROW((Point{1.0} + Point{1.0, 2.0}), DimensionError);
    EXPECT_THROW(euclid_dist(Point{1.0}, Point{1.0, 2.0}), DimensionError);
}

TEST(EuclidDist, Examples) {
    EXPECT_DOUBLE_EQ(euclid_dist(Point{3.0}, Point{1.0}), 2.0);
    EXPECT_EQ(euclid_dist(Point{0.3, -0.7}, Point{0.3, -0.7}), 0.0);
    EXPECT_DOUBLE_EQ(euclid_dist(Point{0.0, 1.0}, Point{0.0, 2.0}), 1.0);
}

TEST(Matrix, DeterminantAndOrthogonality) {
    Matrix m = Matrix::identity(3);
    m(0, 1) = 2.0;
    EXPECT_NEAR(m.determinant(), 1.0, 1e-15);
    Rng rng(7);
    for (std::size_t n : {2, 3, 5}) {
        for (int i = 0; i < 200; ++i) {
            Matrix r = random_rotation(rng, n);
            EXPECT_LE(r.orthogonality_defect(), 1e-14);
            EXPECT_NEAR(r.determinant(), 1.0, 1e-12);
        }
    }
}

TEST(BoundarySet, FactoryInvariants) {
    EXPECT_THROW(BoundarySet::sphere(Point{0.0, 0.0}, 0.0), std::invalid_argument);
    EXPECT_THROW(BoundarySet::halfspace(Point{0.0, 2.0}, 0.0), std::invalid_argument);
    EXPECT_THROW(BoundarySet::points({}), std::invalid_argument);
    EXPECT_THROW(BoundarySet::points({Point{1.0}, Point{1.0, 2.0}}), DimensionError);
    EXPECT_THROW(BoundarySet::chain({Point{0.0, 0.0}}, false), std::invalid_argument);
    EXPECT_THROW(BoundarySet::chain({Point{0.0, 0.0}, Point{1.0, 0.0}}, true), std::invalid_argument);
    EXPECT_THROW(BoundarySet::chain({Point{0.0, 0.0, 0.0}, Point{1.0, 0.0, 0.0}}, false), DimensionError);
}

TEST(DistToSet, Examples) {
    EXPECT_DOUBLE_EQ(dist_to_set(Point{3.0}, kPm4), 1.0);
    EXPECT_DOUBLE_EQ(dist_to_set(Point{0.0, 0.0}, BoundarySet::sphere(Point{0.0, 0.0}, 1.0)), 1.0);
    auto seg = BoundarySet::chain({Point{-1.0, 0.0}, Point{1.0, 0.0}}, false);
    EXPECT_DOUBLE_EQ(dist_to_set(Point{0.0, 2.0}, seg), 2.0);
    auto plane = BoundarySet::halfspace(Point{0.0, 1.0}, 0.0);
    EXPECT_DOUBLE_EQ(dist_to_set(Point{5.0, -2.5}, plane), 2.5);
}

TEST(DistToSet, DimensionMismatch) {
    EXPECT_THROW(dist_to_set(Point{1.0, 2.0}, kPm4), DimensionError);
}

TEST(DistToSet, MemberHasZeroDistance) {
    EXPECT_EQ(dist_to_set(Point{4.0}, kPm4), 0.0);
    auto tri = BoundarySet::chain({Point{0.0, 0.0}, Point{1.0, 0.0}, Point{0.0, 1.0}}, true);
    EXPECT_NEAR(dist_to_set(Point{0.5, 0.5}, tri), 0.0, 1e-16);
}

// The exact segment distance is never above a sampled one and within the
// sampling resolution of it.
TEST(DistToSet, ChainAgreesWithDenseSampling) {
    auto chain = BoundarySet::chain({Point{-1.0, -0.5}, Point{0.7, -1.2}, Point{1.3, 0.4}, Point{0.1, 1.1},
                                     Point{-0.9, 0.6}},
                                    true);
    const auto& pc = *chain.get_if<PolygonalChain>();
    Rng rng(11);
    for (int i = 0; i < 1000; ++i) {
        Point x = random_in_box(rng, Point{-2.0, -2.0}, Point{2.0, 2.0});
        double exact = dist_to_set(x, chain);
        double brute = brute_chain_dist(x, pc, 2000);
        EXPECT_LE(exact, brute + 1e-12);
        EXPECT_LE(brute - exact, 2e-3);
    }
}

TEST(DistToSet, PointSetAgreesWithBruteForce) {
    Rng rng(12);
    std::vector<Point> pts;
    for (int i = 0; i < 50; ++i) pts.push_back(random_in_box(rng, Point{-1.0, -1.0, -1.0}, Point{1.0, 1.0, 1.0}));
    auto g = BoundarySet::points(pts);
    for (int i = 0; i < 2000; ++i) {
        Point x = random_in_box(rng, Point{-2.0, -2.0, -2.0}, Point{2.0, 2.0, 2.0});
        double brute = std::numeric_limits<double>::infinity();
        for (const Point& p : pts) brute = std::min(brute, euclid_dist(x, p));
        EXPECT_EQ(dist_to_set(x, g), brute);
    }
}

TEST(Hausdorff, Examples) {
    EXPECT_DOUBLE_EQ(hausdorff_dist(BoundarySet::points({Point{0.0}}), BoundarySet::points({Point{1.0}})), 1.0);
    auto grown = BoundarySet::points({Point{-4.25}, Point{4.25}});
    EXPECT_DOUBLE_EQ(hausdorff_dist(kPm4, grown), 0.25);
    EXPECT_EQ(hausdorff_dist(kPm4, kPm4), 0.0);
}

TEST(Hausdorff, ConcentricSpheres) {
    auto a = BoundarySet::sphere(Point{1.0, 1.0}, 1.0);
    auto b = BoundarySet::sphere(Point{1.0, 1.0}, 1.5);
    EXPECT_DOUBLE_EQ(hausdorff_dist(a, b), 0.5);
}

TEST(Hausdorff, UnsupportedAnalyticPair) {
    auto a = BoundarySet::sphere(Point{0.0, 0.0}, 1.0);
    auto b = BoundarySet::sphere(Point{1.0, 0.0}, 1.0);
    EXPECT_THROW(hausdorff_dist(a, b), std::invalid_argument);
    EXPECT_THROW(hausdorff_dist(a, BoundarySet::halfspace(Point{0.0, 1.0}, 0.0)), std::invalid_argument);
}

// A segment and a point set lying on it: the sup is attained mid-gap.
TEST(Hausdorff, ChainAgainstPoints) {
    auto seg = BoundarySet::chain({Point{0.0, 0.0}, Point{1.0, 0.0}}, false);
    auto ends = BoundarySet::points({Point{0.0, 0.0}, Point{1.0, 0.0}});
    EXPECT_NEAR(hausdorff_dist(seg, ends), 0.5, 1e-12);
}

TEST(Hausdorff, SymmetryAndTriangleProperty) {
    Rng rng(21);
    auto random_set = [&] {
        std::vector<Point> pts;
        for (int i = 0; i < 8; ++i) pts.push_back(random_in_box(rng, Point{-1.0, -1.0}, Point{1.0, 1.0}));
        return BoundarySet::points(pts);
    };
    for (int i = 0; i < 300; ++i) {
        auto a = random_set();
        auto b = random_set();
        auto c = random_set();
        double ab = hausdorff_dist(a, b);
        EXPECT_EQ(ab, hausdorff_dist(b, a));
        EXPECT_LE(ab, hausdorff_dist(a, c) + hausdorff_dist(c, b) + 1e-15);
    }
}

TEST(Discretize, PolygonInscribedInSphere) {
    auto circle = BoundarySet::sphere(Point{0.5, -0.5}, 2.0);
    auto poly = discretize(circle, 64);
    const auto* chain = poly.get_if<PolygonalChain>();
    ASSERT_NE(chain, nullptr);
    EXPECT_TRUE(chain->closed);
    EXPECT_EQ(chain->vertices.size(), 64U);
    for (const Point& v : chain->vertices) EXPECT_NEAR(euclid_dist(v, Point{0.5, -0.5}), 2.0, 1e-14);
}

TEST(DomainSpec, Membership) {
    DomainSpec disc{BoundarySet::sphere(Point{0.0, 0.0}, 1.0), Interior::Inside};
    EXPECT_TRUE(disc.contains(Point{0.5, 0.0}));
    EXPECT_FALSE(disc.contains(Point{1.0, 0.0}));
    EXPECT_FALSE(disc.contains(Point{2.0, 0.0}));
    EXPECT_THROW(disc.require_inside(Point{2.0, 0.0}), DomainError);

    DomainSpec upper{BoundarySet::halfspace(Point{0.0, 1.0}, 0.0), Interior::Positive};
    EXPECT_TRUE(upper.contains(Point{3.0, 0.1}));
    EXPECT_FALSE(upper.contains(Point{3.0, -0.1}));

    DomainSpec square{BoundarySet::chain({Point{-1.0, -1.0}, Point{1.0, -1.0}, Point{1.0, 1.0}, Point{-1.0, 1.0}}, true),
                      Interior::Inside};
    EXPECT_TRUE(square.contains(Point{0.9, -0.9}));
    EXPECT_FALSE(square.contains(Point{1.1, 0.0}));

    DomainSpec untagged{kPm4, std::nullopt};
    EXPECT_THROW(untagged.contains(Point{0.0}), std::invalid_argument);
}

TEST(DomainSpec, RejectsMeaninglessTags) {
    EXPECT_THROW(validate_interior(kPm4, Interior::Inside), std::invalid_argument);
    auto open = BoundarySet::chain({Point{0.0, 0.0}, Point{1.0, 0.0}}, false);
    EXPECT_THROW(validate_interior(open, Interior::Inside), std::invalid_argument);
}

TEST(DomainJson, RoundTrip) {
    const char* text = R"({"type": "chain", "vertices": [[0, 0], [1, 0], [0, 1]], "closed": true, "interior": "inside"})";
    DomainSpec d = parse_domain(text);
    EXPECT_EQ(d.boundary.kind(), "chain");
    ASSERT_TRUE(d.interior.has_value());
    DomainSpec again = domain_from_json(domain_to_json(d));
    EXPECT_EQ(domain_to_json(again), domain_to_json(d));
}

TEST(DomainJson, Errors) {
    EXPECT_THROW(parse_domain(R"({"type": "sphere", "center": [0], "radius": 1, "colour": 3})"), ConfigError);
    EXPECT_THROW(parse_domain(R"({"type": "torus"})"), ConfigError);
    EXPECT_THROW(parse_domain(R"({"type": "points", "points": [[1], [1, 2]]})"), ConfigError);
    EXPECT_THROW(parse_domain(R"({"type": "sphere", "center": [0, 0], "radius": -1})"), ConfigError);
    try {
        parse_domain("{\n  \"type\": \"points\",\n  ]");
        FAIL() << "expected ConfigError";
    } catch (const ConfigError& e) {
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
    }
}

TEST(DomainJson, ParsePoint) {
    EXPECT_EQ(parse_point("1,2.5"), (Point{1.0, 2.5}));
    EXPECT_EQ(parse_point("-3"), (Point{-3.0}));
    EXPECT_THROW(parse_point("1,,2"), ConfigError);
    EXPECT_THROW(parse_point("abc"), ConfigError);
}

TEST(Sampler, DrawsInsideTaggedDomains) {
    Rng rng(5);
    DomainSpec disc{BoundarySet::sphere(Point{0.0, 0.0}, 1.0), Interior::Inside};
    DomainSpec upper{BoundarySet::halfspace(Point{0.0, 1.0}, 0.0), Interior::Positive};
    for (const DomainSpec& d : {disc, upper}) {
        DomainSampler sampler(d);
        for (int i = 0; i < 2000; ++i) EXPECT_TRUE(d.contains(sampler.sample(rng)));
    }
}

TEST(Sampler, DeterministicForSeed) {
    DomainSampler sampler(DomainSpec{kPm4, std::nullopt});
    Rng a(99);
    Rng b(99);
    for (int i = 0; i < 100; ++i) EXPECT_EQ(sampler.sample(a), sampler.sample(b));
}

}  // namespace
}  // namespace stilde
