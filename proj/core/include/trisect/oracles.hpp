#pragma once
/**
 * @file   oracles.hpp
 * @brief  Independent checks for the locus solver and the origami model.
 *
 * Nothing here calls into the bisection path except cross_validate, which
 * exists to compare all routes against each other.
 */

#include <trisect/geometry.hpp>
#include <trisect/locus.hpp>
#include <trisect/origami.hpp>
#include <trisect/report.hpp>

#include <optional>

namespace trisect {

inline constexpr double kChordTolerance = 1e-12;

/// three_theta / 3, as a single floating division.
[[nodiscard]] Angle oracle_theta(Angle three_theta);

/// |cos 3θ − (4 cos³θ − 3 cos θ)|.
[[nodiscard]] double triple_angle_residual(Angle theta, Angle three_theta) noexcept;

/**
 * Unit-radius addition-formula diagram. A is the vertex, AB the base of the
 * unit square, F = (cos 3θ, sin 3θ) on the terminal ray and E its foot on AB.
 * The circle of radius ½ on diameter AF meets the rays at 2θ and θ in K and L,
 * splitting the arc F→E into three equal chords. G = (cos θ, sin θ) and
 * H = (cos 2θ, sin 2θ) sit on the unit circle along the same rays.
 */
struct ChordDiagram {
    Angle three_theta;
    Point2 A, B, E, F, G, H, J, K, L;
    double chord_FK = 0.0;
    double chord_KL = 0.0;
    double chord_LE = 0.0;
    double chord_GF = 0.0;
    // Perpendicular distance from G to the base line AB.
    double fold_BG = 0.0;
};

/// Throws AngleOutOfRange unless three_theta ∈ (0, π/2]. At π/2 the foot E
/// lands on A and LE becomes the chord LA.
[[nodiscard]] ChordDiagram chord_diagram(Angle three_theta);

[[nodiscard]] Report chord_verify(const ChordDiagram& d);

struct CrossValidation {
    Angle three_theta;
    double tolerance = 0.0;

    Angle theta_oracle;
    Angle theta_locus;
    // Absent at exactly 90°, outside the origami construction's open range.
    std::optional<Angle> theta_origami;
    Angle theta_chord;

    TrisectionResult solve;
    Report locus;
    std::optional<Report> origami;
    Report chords;
    double triple_angle = 0.0;

    /// Largest pairwise disagreement between the available θ estimates.
    double max_theta_spread = 0.0;

    [[nodiscard]] bool passed() const noexcept;
};

class MismatchError : public Error {
public:
    MismatchError(const std::string& what, CrossValidation report)
        : Error(ErrorCode::MismatchDetected, what), report_(std::move(report)) {}

    [[nodiscard]] const CrossValidation& report() const noexcept { return report_; }

private:
    CrossValidation report_;
};

/**
 * Runs the locus solver, the origami construction, the closed form, the
 * triple-angle identity and the chord diagram on the same angle.
 *
 * Throws MismatchError (carrying the full report) if any two θ estimates
 * differ by more than tol; errors from the individual routes propagate.
 */
[[nodiscard]] CrossValidation cross_validate(Angle three_theta, double a, double tol);

}  // namespace trisect
