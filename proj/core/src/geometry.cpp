#include <trisect/geometry.hpp>

#include <algorithm>
#include <string>

namespace trisect {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::DegeneratePoint: return "DegeneratePoint";
        case ErrorCode::ConcentricCircles: return "ConcentricCircles";
        case ErrorCode::NoIntersection: return "NoIntersection";
        case ErrorCode::AngleOutOfRange: return "AngleOutOfRange";
        case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
        case ErrorCode::InvalidSampleCount: return "InvalidSampleCount";
        case ErrorCode::MaxIterationsExceeded: return "MaxIterationsExceeded";
        case ErrorCode::MismatchDetected: return "MismatchDetected";
    }
    return "Unknown";
}

Angle Angle::radians(double r) {
    if (!std::isfinite(r)) {
        throw Error(ErrorCode::InvalidArgument, "angle must be finite");
    }
    if (r >= 0.0 && r < kTwoPi) {
        return Angle(r);
    }
    double n = std::fmod(r, kTwoPi);
    if (n < 0.0) {
        n += kTwoPi;
    }
    // n + 2π can round up onto 2π itself.
    if (n >= kTwoPi) {
        n = 0.0;
    }
    return Angle(n);
}

double signed_difference(Angle from, Angle to) noexcept {
    double d = to.rad() - from.rad();
    if (d > std::numbers::pi) {
        d -= kTwoPi;
    } else if (d <= -std::numbers::pi) {
        d += kTwoPi;
    }
    return d;
}

Circle::Circle(Point2 center, double radius) : center_(center), radius_(radius) {
    if (!center.finite()) {
        throw Error(ErrorCode::InvalidArgument, "circle centre must be finite");
    }
    if (!std::isfinite(radius) || radius <= 0.0) {
        throw Error(ErrorCode::InvalidArgument, "circle radius must be finite and positive, got " + std::to_string(radius));
    }
}

Angle polar_angle(Point2 p) {
    if (p.x == 0.0 && p.y == 0.0) {
        throw Error(ErrorCode::DegeneratePoint, "polar angle of the origin is undefined");
    }
    double a = std::atan2(p.y, p.x);
    if (a < 0.0) {
        a += kTwoPi;
    }
    return Angle::radians(a);
}

Point2 rotate(Point2 p, double radians) noexcept {
    const double c = std::cos(radians);
    const double s = std::sin(radians);
    return {c * p.x - s * p.y, s * p.x + c * p.y};
}

std::vector<Point2> circle_circle_intersections(const Circle& c1, const Circle& c2) {
    const Point2 delta = c2.center() - c1.center();
    const double d = std::hypot(delta.x, delta.y);
    if (d == 0.0) {
        throw Error(ErrorCode::ConcentricCircles, "circles share a centre");
    }
    const double r1 = c1.radius();
    const double r2 = c2.radius();

    // Subtracting the two circle equations leaves the radical line, which
    // crosses the line of centres at distance `along` from c1. The squared
    // half-chord r1² - along² is evaluated in factored form so the near-equal
    // terms cancel before any multiplication:
    //   h² = (r2 - (d - r1)) (r2 + (d - r1)) ((d - r2) + r1) ((d + r1) + r2) / (2d)²
    const double gap = d - r1;
    const double f1 = r2 - gap;
    const double f2 = r2 + gap;
    const double f3 = (d - r2) + r1;
    const double f4 = (d + r1) + r2;
    const double two_d = 2.0 * d;
    const double along = r1 - (f1 * f2) / two_d;
    const double h_sq = (f1 * f2) * (f3 * f4) / (two_d * two_d);

    const double scale = std::min(r1, r2);
    const double tangency = kTangencyTolerance * scale * scale;
    if (h_sq < -tangency) {
        throw Error(ErrorCode::NoIntersection, "circles are separated or nested");
    }

    const Point2 u{delta.x / d, delta.y / d};
    const Point2 base = c1.center() + along * u;
    if (h_sq <= tangency) {
        return {base};
    }

    const double h = std::sqrt(h_sq);
    const Point2 perp{-u.y, u.x};
    Point2 p = base + h * perp;
    Point2 q = base - h * perp;
    if (polar_angle(q - c1.center()).rad() < polar_angle(p - c1.center()).rad()) {
        std::swap(p, q);
    }
    return {p, q};
}

Point2 foot_of_perpendicular(Point2 p, const Ray& r) noexcept {
    const Point2 u = r.unit();
    return r.origin + dot(p - r.origin, u) * u;
}

double line_offset(Point2 p, const Ray& r) noexcept {
    return cross(r.unit(), p - r.origin);
}

}  // namespace trisect
