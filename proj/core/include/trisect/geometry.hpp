#pragma once
/**
 * @file   geometry.hpp
 * @brief  Planar primitives for the trisection constructions: points, circles,
 *         rays and angles, plus their exact-formula intersections.
 *
 * Every function here is pure. Angles are radians throughout; degrees only
 * appear at the command-line boundary.
 */

#include <trisect/error.hpp>

#include <cmath>
#include <numbers>
#include <vector>

namespace trisect {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Tangency threshold: a squared half-chord within this fraction of the
/// smaller radius squared collapses to a single tangent point.
inline constexpr double kTangencyTolerance = 1e-10;

[[nodiscard]] constexpr double deg_to_rad(double deg) noexcept { return deg / 180.0 * std::numbers::pi; }
[[nodiscard]] constexpr double rad_to_deg(double rad) noexcept { return rad * (180.0 / std::numbers::pi); }

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend constexpr Point2 operator+(Point2 p, Point2 q) noexcept { return {p.x + q.x, p.y + q.y}; }
    friend constexpr Point2 operator-(Point2 p, Point2 q) noexcept { return {p.x - q.x, p.y - q.y}; }
    friend constexpr Point2 operator*(double s, Point2 p) noexcept { return {s * p.x, s * p.y}; }
    friend constexpr bool operator==(Point2, Point2) noexcept = default;

    [[nodiscard]] bool finite() const noexcept { return std::isfinite(x) && std::isfinite(y); }
};

[[nodiscard]] constexpr double dot(Point2 p, Point2 q) noexcept { return p.x * q.x + p.y * q.y; }
[[nodiscard]] constexpr double cross(Point2 p, Point2 q) noexcept { return p.x * q.y - p.y * q.x; }
[[nodiscard]] constexpr Point2 midpoint(Point2 p, Point2 q) noexcept { return {0.5 * (p.x + q.x), 0.5 * (p.y + q.y)}; }

/// Angle in radians, always held in [0, 2π).
class Angle {
public:
    constexpr Angle() noexcept = default;

    [[nodiscard]] static Angle radians(double r);
    [[nodiscard]] static Angle degrees(double d) { return radians(deg_to_rad(d)); }

    [[nodiscard]] constexpr double rad() const noexcept { return rad_; }
    [[nodiscard]] constexpr double deg() const noexcept { return rad_to_deg(rad_); }

    friend Angle operator+(Angle a, Angle b) { return radians(a.rad_ + b.rad_); }
    friend Angle operator-(Angle a, Angle b) { return radians(a.rad_ - b.rad_); }
    friend Angle operator*(double s, Angle a) { return radians(s * a.rad_); }
    friend Angle operator/(Angle a, double s) { return radians(a.rad_ / s); }
    friend constexpr bool operator==(Angle, Angle) noexcept = default;

private:
    explicit constexpr Angle(double r) noexcept : rad_(r) {}
    double rad_ = 0.0;
};

/// Smallest signed rotation taking `from` to `to`, in (-π, π].
[[nodiscard]] double signed_difference(Angle from, Angle to) noexcept;

class Circle {
public:
    /// Throws InvalidArgument unless radius is finite and strictly positive.
    Circle(Point2 center, double radius);

    [[nodiscard]] Point2 center() const noexcept { return center_; }
    [[nodiscard]] double radius() const noexcept { return radius_; }

private:
    Point2 center_;
    double radius_;
};

struct Ray {
    Point2 origin;
    Angle direction;

    [[nodiscard]] Point2 unit() const noexcept { return {std::cos(direction.rad()), std::sin(direction.rad())}; }
};

/// Angle of p about the origin. Throws DegeneratePoint for the origin itself.
[[nodiscard]] Angle polar_angle(Point2 p);

[[nodiscard]] inline double distance(Point2 p, Point2 q) noexcept { return std::hypot(p.x - q.x, p.y - q.y); }

/// Counterclockwise rotation of p about the origin.
[[nodiscard]] Point2 rotate(Point2 p, double radians) noexcept;

/**
 * All intersection points of two circles, computed by subtracting the circle
 * equations (radical line) and walking the half-chord off the line of centres.
 *
 * Returns one point for tangency and two otherwise; two points are ordered by
 * ascending polar angle in [0, 2π) about c1's centre.
 *
 * Throws ConcentricCircles when the centres coincide and NoIntersection when
 * the circles are separated or one contains the other.
 */
[[nodiscard]] std::vector<Point2> circle_circle_intersections(const Circle& c1, const Circle& c2);

/// Orthogonal projection of p onto the full line carrying r.
[[nodiscard]] Point2 foot_of_perpendicular(Point2 p, const Ray& r) noexcept;

/// Signed distance of p from the line carrying r (positive on the left).
[[nodiscard]] double line_offset(Point2 p, const Ray& r) noexcept;

}  // namespace trisect
