#include <trisect/locus.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace trisect {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kVerifyFloor = 1e-12;

// Signed angular offset of the curve from the target at parameter b.
double crossing_gap(const LocusParams& params, double b, double target, LocusPoint& out) {
    out = locus_point(params, b);
    return out.q_polar_angle.rad() - target;
}

TrisectionResult make_result(Angle three_theta, const LocusParams& params, const LocusPoint& at, int iterations,
                             double bracket_width) {
    TrisectionResult r;
    r.three_theta = three_theta;
    r.fold_a = params.a();
    r.b_star = at.b;
    r.theta = polar_angle({at.b, params.a()});
    r.unit_length = std::hypot(at.b, params.a());
    r.n_point = at.q;
    r.iterations = iterations;
    r.final_bracket_width = bracket_width;
    r.angle_residual = signed_difference(three_theta, at.q_polar_angle);
    return r;
}

}  // namespace

LocusParams::LocusParams(double a) : a_(a) {
    if (!std::isfinite(a) || a <= 0.0) {
        throw Error(ErrorCode::InvalidArgument, "fold spacing a must be finite and positive");
    }
}

double LocusParams::b_start() const noexcept { return std::numbers::sqrt3 * a_; }

LocusPoint locus_point(const LocusParams& params, double b) {
    const double a = params.a();
    if (!std::isfinite(b) || b < params.b_start()) {
        throw Error(ErrorCode::ParameterOutOfRange,
                    "b = " + std::to_string(b) + " lies before the curve start sqrt(3)*a");
    }

    const Point2 j{b, a};
    const double radius = std::hypot(b, a);
    const Circle first({0.0, 0.0}, radius);
    const Circle second(j, 2.0 * a);

    // J sits on circle 1 and the chord 2a is shorter than its diameter, so
    // there are always two points: one at 3·angle(J) and one at -angle(J).
    const auto hits = circle_circle_intersections(first, second);
    const auto ccw = std::max_element(hits.begin(), hits.end(),
                                      [&](Point2 p, Point2 q) { return cross(j, p) < cross(j, q); });

    LocusPoint lp;
    lp.b = b;
    lp.q = *ccw;
    lp.residual_circle1 = std::abs(std::hypot(lp.q.x, lp.q.y) - radius);
    lp.residual_circle2 = std::abs(distance(lp.q, j) - 2.0 * a);
    lp.residual_locus_relation = std::abs(locus_relation_residual(params, b, lp.q));
    lp.q_polar_angle = polar_angle(lp.q);
    return lp;
}

double locus_relation_residual(const LocusParams& params, double b, Point2 q) noexcept {
    const double a = params.a();
    return b * q.x + a * q.y - (b - a) * (b + a);
}

double locus_polar_radius(const LocusParams& params, Angle phi) {
    const double p = phi.rad();
    if (!(p > 0.0 && p <= kHalfPi)) {
        throw Error(ErrorCode::AngleOutOfRange, "polar angle must lie in (0, 90] degrees");
    }
    return params.a() / std::sin(p / 3.0);
}

std::vector<LocusPoint> sample_locus(const LocusParams& params, double b_min, double b_max, std::ptrdiff_t n) {
    if (n < 2) {
        throw Error(ErrorCode::InvalidSampleCount, "need at least two samples, got " + std::to_string(n));
    }
    if (!std::isfinite(b_min) || !std::isfinite(b_max) || b_min < params.b_start() || !(b_min < b_max)) {
        throw Error(ErrorCode::ParameterOutOfRange, "sample range must satisfy sqrt(3)*a <= b_min < b_max");
    }

    std::vector<LocusPoint> out;
    out.reserve(static_cast<std::size_t>(n));
    const double span = b_max - b_min;
    const auto last = static_cast<double>(n - 1);
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const double b = (i == n - 1) ? b_max : b_min + span * (static_cast<double>(i) / last);
        out.push_back(locus_point(params, b));
    }
    return out;
}

TrisectionResult trisect(Angle three_theta, const LocusParams& params, double tol, int max_iter) {
    const double target = three_theta.rad();
    if (!(target > 0.0 && target <= kHalfPi)) {
        throw Error(ErrorCode::AngleOutOfRange, "trisection target must lie in (0, 90] degrees");
    }
    if (!std::isfinite(tol) || tol <= 0.0) {
        throw Error(ErrorCode::InvalidArgument, "tolerance must be finite and positive");
    }
    if (max_iter < 1) {
        throw Error(ErrorCode::InvalidArgument, "max_iter must be at least 1");
    }

    LocusPoint lo_pt;
    double lo = params.b_start();
    // At the start the curve sits on OD, so a 90° target is solved here.
    if (crossing_gap(params, lo, target, lo_pt) <= tol) {
        return make_result(three_theta, params, lo_pt, 0, 0.0);
    }

    LocusPoint hi_pt;
    double hi = 2.0 * lo;
    bool bracketed = false;
    for (int k = 0; k < kMaxBracketDoublings; ++k) {
        const double gap = crossing_gap(params, hi, target, hi_pt);
        if (std::abs(gap) <= tol) {
            return make_result(three_theta, params, hi_pt, 0, 0.0);
        }
        if (gap < 0.0) {
            bracketed = true;
            break;
        }
        lo = hi;
        lo_pt = hi_pt;
        hi *= 2.0;
    }
    if (!bracketed) {
        throw ConvergenceError("no upper bracket found within the doubling limit",
                               make_result(three_theta, params, lo_pt, 0, hi - lo));
    }

    LocusPoint mid_pt;
    for (int it = 1; it <= max_iter; ++it) {
        const double mid = lo + 0.5 * (hi - lo);
        if (!(mid > lo && mid < hi)) {
            const LocusPoint& best = std::abs(lo_pt.q_polar_angle.rad() - target) <=
                                             std::abs(hi_pt.q_polar_angle.rad() - target)
                                         ? lo_pt
                                         : hi_pt;
            throw ConvergenceError("bracket collapsed to adjacent doubles before reaching the tolerance",
                                   make_result(three_theta, params, best, it - 1, hi - lo));
        }
        const double gap = crossing_gap(params, mid, target, mid_pt);
        if (gap > 0.0) {
            lo = mid;
            lo_pt = mid_pt;
        } else {
            hi = mid;
            hi_pt = mid_pt;
        }
        if (std::abs(gap) <= tol) {
            return make_result(three_theta, params, mid_pt, it, hi - lo);
        }
    }

    const LocusPoint& best =
        std::abs(lo_pt.q_polar_angle.rad() - target) <= std::abs(hi_pt.q_polar_angle.rad() - target) ? lo_pt : hi_pt;
    throw ConvergenceError("tolerance not met in " + std::to_string(max_iter) + " bisection steps",
                           make_result(three_theta, params, best, max_iter, hi - lo));
}

Report verify_trisection(const TrisectionResult& r, const LocusParams& params, double tol) {
    const double limit = std::max(tol, kVerifyFloor);
    const double a = params.a();
    const Point2 j{r.b_star, a};
    const double scale = std::max(1.0, a * a + r.b_star * r.b_star);

    Report rep;
    rep.add("triple_theta_minus_target", std::abs(3.0 * r.theta.rad() - r.three_theta.rad()), limit);
    rep.add("jn_minus_2a", std::abs(distance(r.n_point, j) - 2.0 * a), limit);
    rep.add("on_minus_unit_length", std::abs(std::hypot(r.n_point.x, r.n_point.y) - r.unit_length), limit);
    rep.add("normalized_fold_minus_sin_theta", std::abs(a / r.unit_length - std::sin(r.theta.rad())), limit);
    rep.add("locus_relation_at_n", std::abs(locus_relation_residual(params, r.b_star, r.n_point)) / scale, limit);
    return rep;
}

}  // namespace trisect
