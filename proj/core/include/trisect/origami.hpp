#pragma once
/**
 * @file   origami.hpp
 * @brief  End-state geometry of Abe's origami trisection fold.
 *
 * The base OA runs along the positive x-axis and OB sits at the given angle.
 * Lengths are normalised so that OH = OC = 1. The two creases parallel to OA
 * pass through S = (0, sin θ) and D = (0, 2 sin θ); the fold carries O onto
 * H on the first crease and D onto C on OB.
 */

#include <trisect/geometry.hpp>
#include <trisect/report.hpp>

namespace trisect {

inline constexpr double kOrigamiTolerance = 1e-12;

struct AbeConstruction {
    Angle three_theta;  // the given angle AOB
    Angle theta;        // its trisected component

    Point2 O, D, S, H, C, G, P;

    // OA→OH, OH→OG and OG→OC.
    Angle alpha, beta, gamma;

    double unit_length = 1.0;
};

/// Builds the construction for three_theta ∈ (0, π/2); throws AngleOutOfRange
/// otherwise.
[[nodiscard]] AbeConstruction abe_construct(Angle three_theta);

/**
 * Recomputes every stated equality from the points of `c` and reports the
 * residuals. Angles are re-measured from the points, not read from the
 * alpha/beta/gamma fields, so externally edited constructions are caught.
 *
 * `cp_minus_sin_theta` is informational only: it measures |CP − sin θ| with P
 * the foot of H on OA, a relation the foot placement does not satisfy.
 */
[[nodiscard]] Report abe_verify(const AbeConstruction& c);

}  // namespace trisect
