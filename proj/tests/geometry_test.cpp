#include <trisect/geometry.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <cstring>

#include "test_support.hpp"

namespace trisect {
namespace {

using testing::Gen;
using testing::kHalfPi;
using testing::kPi;
using testing::kSqrt3;

bool bit_equal(Point2 p, Point2 q) { return std::memcmp(&p, &q, sizeof p) == 0; }

TEST(AngleTest, NormalizesIntoHalfOpenTurn) {
    EXPECT_DOUBLE_EQ(Angle::radians(-kHalfPi).rad(), 3.0 * kHalfPi);
    EXPECT_DOUBLE_EQ(Angle::radians(kTwoPi).rad(), 0.0);
    EXPECT_NEAR(Angle::radians(5.0 * kPi).rad(), kPi, 1e-15);
    EXPECT_EQ(Angle::radians(1.0).rad(), 1.0);
    EXPECT_EQ(Angle::radians(-1e-300).rad(), 0.0);
    EXPECT_EQ(Angle::degrees(90.0).rad(), kHalfPi);

    Gen gen(11);
    for (int i = 0; i < 1000; ++i) {
        const double r = Angle::radians(gen.uniform(-100.0, 100.0)).rad();
        EXPECT_GE(r, 0.0);
        EXPECT_LT(r, kTwoPi);
    }
}

TEST(AngleTest, ArithmeticStaysNormalized) {
    const Angle a = Angle::degrees(350.0) + Angle::degrees(20.0);
    EXPECT_NEAR(a.deg(), 10.0, 1e-12);
    const Angle b = Angle::degrees(10.0) - Angle::degrees(20.0);
    EXPECT_NEAR(b.deg(), 350.0, 1e-12);
    EXPECT_NEAR((Angle::degrees(60.0) / 3.0).deg(), 20.0, 1e-12);
}

TEST(AngleTest, RejectsNonFinite) {
    EXPECT_THROW((void)Angle::radians(std::nan("")), Error);
    EXPECT_THROW((void)Angle::radians(INFINITY), Error);
}

TEST(AngleTest, SignedDifferenceWrapsTheShortWay) {
    EXPECT_NEAR(signed_difference(Angle::degrees(350.0), Angle::degrees(10.0)), deg_to_rad(20.0), 1e-15);
    EXPECT_NEAR(signed_difference(Angle::degrees(10.0), Angle::degrees(350.0)), deg_to_rad(-20.0), 1e-15);
}

TEST(PolarAngleTest, Examples) {
    EXPECT_EQ(polar_angle({1.0, 0.0}).rad(), 0.0);
    EXPECT_DOUBLE_EQ(polar_angle({0.0, 2.0}).rad(), kHalfPi);
    // tan 30° = 1/√3
    EXPECT_NEAR(polar_angle({kSqrt3, 1.0}).rad(), std::atan(1.0 / kSqrt3), 1e-15);
    EXPECT_NEAR(polar_angle({kSqrt3, 1.0}).rad(), kPi / 6.0, 1e-15);
    EXPECT_NEAR(polar_angle({0.0, -1.0}).rad(), 3.0 * kHalfPi, 1e-15);
}

TEST(PolarAngleTest, OriginIsDegenerate) {
    try {
        (void)polar_angle({0.0, 0.0});
        FAIL() << "expected DegeneratePoint";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DegeneratePoint);
    }
}

TEST(PolarAngleTest, RotationAddsAngle) {
    Gen gen(12);
    for (int i = 0; i < 1000; ++i) {
        Point2 p = gen.point(10.0);
        if (std::hypot(p.x, p.y) < 1e-3) continue;
        const double phi = gen.uniform(-10.0, 10.0);
        const Angle lhs = polar_angle(rotate(p, phi));
        const Angle rhs = polar_angle(p) + Angle::radians(phi);
        EXPECT_NEAR(signed_difference(lhs, rhs), 0.0, 1e-12) << "p=(" << p.x << "," << p.y << ") phi=" << phi;
    }
}

TEST(DistanceTest, Examples) {
    EXPECT_EQ(distance({0.0, 0.0}, {3.0, 4.0}), 5.0);
    EXPECT_EQ(distance({1.0, 1.0}, {1.0, 1.0}), 0.0);
    Gen gen(13);
    for (int i = 0; i < 100; ++i) {
        const double t = gen.uniform(-10.0, 10.0);
        EXPECT_NEAR(distance({0.0, 0.0}, {std::cos(t), std::sin(t)}), 1.0, 1e-15);
    }
}

TEST(DistanceTest, SymmetricAndTriangleInequality) {
    Gen gen(14);
    for (int i = 0; i < 1000; ++i) {
        const Point2 p = gen.point(100.0);
        const Point2 q = gen.point(100.0);
        const Point2 r = gen.point(100.0);
        EXPECT_EQ(distance(p, q), distance(q, p));
        EXPECT_LE(distance(p, r), distance(p, q) + distance(q, r) + 1e-12);
    }
}

TEST(CircleTest, RejectsBadRadius) {
    EXPECT_THROW(Circle({0.0, 0.0}, 0.0), Error);
    EXPECT_THROW(Circle({0.0, 0.0}, -1.0), Error);
    EXPECT_THROW(Circle({0.0, 0.0}, INFINITY), Error);
    EXPECT_THROW(Circle({NAN, 0.0}, 1.0), Error);
}

TEST(CircleIntersectionTest, ExternalTangencyGivesOnePoint) {
    const auto pts = circle_circle_intersections(Circle({0.0, 0.0}, 1.0), Circle({2.0, 0.0}, 1.0));
    ASSERT_EQ(pts.size(), 1u);
    EXPECT_NEAR(pts[0].x, 1.0, 1e-15);
    EXPECT_NEAR(pts[0].y, 0.0, 1e-15);
}

TEST(CircleIntersectionTest, InternalTangencyGivesOnePoint) {
    const auto pts = circle_circle_intersections(Circle({0.0, 0.0}, 2.0), Circle({1.0, 0.0}, 1.0));
    ASSERT_EQ(pts.size(), 1u);
    EXPECT_NEAR(pts[0].x, 2.0, 1e-15);
    EXPECT_NEAR(pts[0].y, 0.0, 1e-15);
}

TEST(CircleIntersectionTest, LocusStartContainsD) {
    const double a = 1.0;
    const double b = kSqrt3;
    const auto pts = circle_circle_intersections(Circle({0.0, 0.0}, std::hypot(a, b)), Circle({b, a}, 2.0 * a));
    ASSERT_EQ(pts.size(), 2u);
    const bool has_d = (std::abs(pts[0].x) < 1e-12 && std::abs(pts[0].y - 2.0) < 1e-12) ||
                       (std::abs(pts[1].x) < 1e-12 && std::abs(pts[1].y - 2.0) < 1e-12);
    EXPECT_TRUE(has_d);
}

TEST(CircleIntersectionTest, SeparatedAndNestedHaveNoIntersection) {
    auto code_of = [](const Circle& c1, const Circle& c2) {
        try {
            (void)circle_circle_intersections(c1, c2);
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::InvalidArgument;
    };
    EXPECT_EQ(code_of(Circle({0.0, 0.0}, 1.0), Circle({5.0, 0.0}, 1.0)), ErrorCode::NoIntersection);
    EXPECT_EQ(code_of(Circle({0.0, 0.0}, 5.0), Circle({1.0, 0.0}, 1.0)), ErrorCode::NoIntersection);
    EXPECT_EQ(code_of(Circle({1.0, 1.0}, 1.0), Circle({1.0, 1.0}, 2.0)), ErrorCode::ConcentricCircles);
}

TEST(CircleIntersectionTest, RandomPairsSatisfyBothEquations) {
    Gen gen(15);
    for (int i = 0; i < 2000; ++i) {
        const Point2 c1 = gen.point(10.0);
        const double r1 = gen.uniform(0.1, 10.0);
        const double r2 = gen.uniform(0.1, 10.0);
        const double lo = std::abs(r1 - r2);
        const double hi = r1 + r2;
        const double margin = 1e-3 * (hi - lo);
        const double d = gen.uniform(lo + margin, hi - margin);
        const double dir = gen.uniform(0.0, kTwoPi);
        const Point2 c2 = c1 + d * Point2{std::cos(dir), std::sin(dir)};
        const Circle k1(c1, r1);
        const Circle k2(c2, r2);

        const auto pts = circle_circle_intersections(k1, k2);
        ASSERT_EQ(pts.size(), 2u);
        for (const Point2& p : pts) {
            EXPECT_LE(std::abs(distance(p, c1) - r1), 1e-12 * std::max(r1, 1.0));
            EXPECT_LE(std::abs(distance(p, c2) - r2), 1e-12 * std::max(r2, 1.0));
        }
        EXPECT_LT(polar_angle(pts[0] - c1).rad(), polar_angle(pts[1] - c1).rad());

        const auto again = circle_circle_intersections(k1, k2);
        EXPECT_TRUE(bit_equal(pts[0], again[0]) && bit_equal(pts[1], again[1]));
    }
}

TEST(FootOfPerpendicularTest, Examples) {
    const Ray x_axis{{0.0, 0.0}, Angle{}};
    const Ray y_axis{{0.0, 0.0}, Angle::radians(kHalfPi)};

    const double a = 0.75;
    const double b = 2.5;
    const Point2 k = foot_of_perpendicular({b, a}, x_axis);
    EXPECT_EQ(k.x, b);
    EXPECT_EQ(k.y, 0.0);

    const Point2 on_ray{3.0, 0.0};
    const Point2 same = foot_of_perpendicular(on_ray, x_axis);
    EXPECT_EQ(same.x, on_ray.x);
    EXPECT_EQ(same.y, on_ray.y);

    const Point2 f = foot_of_perpendicular({1.0, 1.0}, y_axis);
    EXPECT_NEAR(f.x, 0.0, 1e-15);
    EXPECT_NEAR(f.y, 1.0, 1e-15);
}

TEST(FootOfPerpendicularTest, ResidualIsOrthogonalToRay) {
    Gen gen(16);
    for (int i = 0; i < 500; ++i) {
        const Ray r{gen.point(5.0), Angle::radians(gen.uniform(0.0, kTwoPi))};
        const Point2 p = gen.point(5.0);
        const Point2 f = foot_of_perpendicular(p, r);
        EXPECT_NEAR(dot(p - f, r.unit()), 0.0, 1e-12);
        EXPECT_NEAR(line_offset(f, r), 0.0, 1e-12);
    }
}

}  // namespace
}  // namespace trisect
