#include <trisect/oracles.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace trisect {

namespace {

// A ray leaving `start` (a point on the circle) in direction `u` meets the
// circle again at start + 2·((centre − start)·u)·u.
Point2 second_hit(Point2 start, Point2 u, Point2 centre) {
    return start + (2.0 * dot(centre - start, u)) * u;
}

Point2 unit_at(double radians) { return {std::cos(radians), std::sin(radians)}; }

}  // namespace

Angle oracle_theta(Angle three_theta) { return Angle::radians(three_theta.rad() / 3.0); }

double triple_angle_residual(Angle theta, Angle three_theta) noexcept {
    const double c = std::cos(theta.rad());
    return std::abs(std::cos(three_theta.rad()) - (4.0 * c * c * c - 3.0 * c));
}

ChordDiagram chord_diagram(Angle three_theta) {
    const double t3 = three_theta.rad();
    if (!(t3 > 0.0 && t3 <= std::numbers::pi / 2.0)) {
        throw Error(ErrorCode::AngleOutOfRange, "chord diagram needs an angle in (0, 90] degrees");
    }
    const double th = t3 / 3.0;

    ChordDiagram d;
    d.three_theta = three_theta;
    d.A = {0.0, 0.0};
    d.B = {1.0, 0.0};
    d.F = unit_at(t3);
    d.E = {d.F.x, 0.0};
    d.G = unit_at(th);
    d.H = unit_at(2.0 * th);
    d.J = midpoint(d.A, d.F);
    d.K = second_hit(d.A, unit_at(2.0 * th), d.J);
    d.L = second_hit(d.A, unit_at(th), d.J);

    d.chord_FK = distance(d.F, d.K);
    d.chord_KL = distance(d.K, d.L);
    d.chord_LE = distance(d.L, d.E);
    d.chord_GF = distance(d.G, d.F);
    d.fold_BG = std::abs(line_offset(d.G, Ray{d.A, Angle{}}));
    return d;
}

Report chord_verify(const ChordDiagram& d) {
    const double tol = kChordTolerance;
    const double sin_t = std::sin(d.three_theta.rad() / 3.0);

    Report r;
    r.add("ja_minus_half", std::abs(distance(d.J, d.A) - 0.5), tol);
    r.add("jf_minus_half", std::abs(distance(d.J, d.F) - 0.5), tol);
    r.add("je_minus_half", std::abs(distance(d.J, d.E) - 0.5), tol);
    r.add("jk_minus_half", std::abs(distance(d.J, d.K) - 0.5), tol);
    r.add("jl_minus_half", std::abs(distance(d.J, d.L) - 0.5), tol);
    r.add("fk_minus_sin_theta", std::abs(d.chord_FK - sin_t), tol);
    r.add("kl_minus_sin_theta", std::abs(d.chord_KL - sin_t), tol);
    r.add("le_minus_sin_theta", std::abs(d.chord_LE - sin_t), tol);
    r.add("gf_minus_two_sin_theta", std::abs(d.chord_GF - 2.0 * sin_t), tol);
    r.add("bg_minus_sin_theta", std::abs(d.fold_BG - sin_t), tol);
    return r;
}

bool CrossValidation::passed() const noexcept {
    return max_theta_spread <= tolerance && triple_angle <= tolerance && locus.passed() &&
           (!origami || origami->passed()) && chords.passed();
}

CrossValidation cross_validate(Angle three_theta, double a, double tol) {
    const LocusParams params(a);

    CrossValidation cv;
    cv.three_theta = three_theta;
    cv.tolerance = tol;
    cv.theta_oracle = oracle_theta(three_theta);

    // Solve tighter than the comparison tolerance so the derived checks have headroom.
    cv.solve = trisect(three_theta, params, std::min(tol, kDefaultSolverTolerance) / 10.0);
    cv.theta_locus = cv.solve.theta;
    cv.locus = verify_trisection(cv.solve, params, tol);
    cv.triple_angle = triple_angle_residual(cv.theta_locus, three_theta);

    // The origami construction is defined on the open range only and sits
    // out the 90° endpoint.
    if (three_theta.rad() < std::numbers::pi / 2.0) {
        const AbeConstruction abe = abe_construct(three_theta);
        cv.theta_origami = abe.alpha;
        cv.origami = abe_verify(abe);
    }

    const ChordDiagram chords = chord_diagram(three_theta);
    // Arc F→K subtends θ at A, so the chord is sin θ on the unit diameter.
    cv.theta_chord = Angle::radians(std::asin(chords.chord_FK));
    cv.chords = chord_verify(chords);

    std::vector<double> estimates{cv.theta_oracle.rad(), cv.theta_locus.rad(), cv.theta_chord.rad()};
    if (cv.theta_origami) {
        estimates.push_back(cv.theta_origami->rad());
    }
    const auto [lo, hi] = std::minmax_element(estimates.begin(), estimates.end());
    cv.max_theta_spread = *hi - *lo;

    if (!(cv.max_theta_spread <= tol)) {
        throw MismatchError("trisection routes disagree by " + std::to_string(cv.max_theta_spread) + " rad",
                            std::move(cv));
    }
    return cv;
}

}  // namespace trisect
