#pragma once
/**
 * @file   locus.hpp
 * @brief  The two-circle trisectrix and the bisection solver built on it.
 *
 * Fix the fold spacing a and slide J = (b, a) along the first fold line.
 * Circle 1 is centred at O with radius OJ; circle 2 is centred at J with
 * radius 2a. Their counterclockwise intersection Q traces a curve starting at
 * D = (0, 2a) when b = √3·a, and every point on it satisfies
 *
 *     angle(Q) = 3 · angle(J)     and     b·x + a·y = b² − a².
 *
 * Trisecting a given angle therefore reduces to finding the b at which the
 * curve crosses the given ray; at that b the unit length is ON = OJ and the
 * trisected angle is angle(J).
 */

#include <trisect/geometry.hpp>
#include <trisect/report.hpp>

#include <cstddef>
#include <vector>

namespace trisect {

inline constexpr double kDefaultSolverTolerance = 1e-12;
inline constexpr int kDefaultMaxIterations = 200;

/// Number of doublings allowed while searching for the upper bracket.
inline constexpr int kMaxBracketDoublings = 64;

class LocusParams {
public:
    /// Throws InvalidArgument unless a is finite and strictly positive.
    explicit LocusParams(double a);

    [[nodiscard]] double a() const noexcept { return a_; }

    /// Smallest admissible b, where Q coincides with D.
    [[nodiscard]] double b_start() const noexcept;

private:
    double a_;
};

struct LocusPoint {
    double b = 0.0;
    Point2 q;
    double residual_circle1 = 0.0;
    double residual_circle2 = 0.0;
    double residual_locus_relation = 0.0;
    Angle q_polar_angle;
};

struct TrisectionResult {
    Angle three_theta;
    Angle theta;
    double fold_a = 0.0;
    double b_star = 0.0;
    double unit_length = 0.0;
    Point2 n_point;
    int iterations = 0;
    double final_bracket_width = 0.0;
    double angle_residual = 0.0;  // angle(N) − three_theta, signed radians

    /// a / ON, which equals sin θ once lengths are measured in units of ON.
    [[nodiscard]] double sin_theta_normalized() const noexcept { return fold_a / unit_length; }
    /// b* / ON, the normalised position of J along the fold line (cos θ).
    [[nodiscard]] double b_star_normalized() const noexcept { return b_star / unit_length; }
};

/// Raised when bisection cannot meet the tolerance; the best iterate so far
/// travels with the exception.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, TrisectionResult partial)
        : Error(ErrorCode::MaxIterationsExceeded, what), partial_(partial) {}

    [[nodiscard]] const TrisectionResult& partial() const noexcept { return partial_; }

private:
    TrisectionResult partial_;
};

/**
 * Intersection Q of circle 1 (centre O, radius √(a² + b²)) and circle 2
 * (centre J = (b, a), radius 2a), taking the branch counterclockwise of J.
 *
 * Throws ParameterOutOfRange for b < √3·a.
 */
[[nodiscard]] LocusPoint locus_point(const LocusParams& params, double b);

/// b·x + a·y − (b² − a²), signed.
[[nodiscard]] double locus_relation_residual(const LocusParams& params, double b, Point2 q) noexcept;

/// Distance from O of the curve point at polar angle phi ∈ (0, π/2]:
/// r = a / sin(phi / 3). Throws AngleOutOfRange outside that interval.
[[nodiscard]] double locus_polar_radius(const LocusParams& params, Angle phi);

/// n uniformly spaced samples over [b_min, b_max], ascending, endpoints exact.
[[nodiscard]] std::vector<LocusPoint> sample_locus(const LocusParams& params, double b_min, double b_max,
                                                   std::ptrdiff_t n);

/**
 * Solves angle(Q(b)) = three_theta by bisection on b.
 *
 * The lower bracket is the curve start b = √3·a (angle π/2); the upper one is
 * found by doubling b until the curve angle drops below the target. Iteration
 * stops once |angle(Q) − three_theta| ≤ tol.
 *
 * Throws AngleOutOfRange for three_theta ∉ (0, π/2], InvalidArgument for a
 * bad tol or max_iter, and ConvergenceError when tol is not met within
 * max_iter bisection steps or the floating-point bracket stops shrinking.
 */
[[nodiscard]] TrisectionResult trisect(Angle three_theta, const LocusParams& params,
                                       double tol = kDefaultSolverTolerance,
                                       int max_iter = kDefaultMaxIterations);

/// Residuals of a solved trisection against the construction's conditions.
/// Each is checked against max(tol, 1e-12); the locus relation is scaled by
/// max(1, a² + b²).
[[nodiscard]] Report verify_trisection(const TrisectionResult& r, const LocusParams& params,
                                       double tol = kDefaultSolverTolerance);

}  // namespace trisect
