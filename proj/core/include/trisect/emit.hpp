#pragma once
/**
 * @file   emit.hpp
 * @brief  Deterministic text emitters: JSON results, CSV locus tables and SVG
 *         construction diagrams.
 *
 * Output depends only on the arguments. Numbers never go through the C locale.
 */

#include <trisect/locus.hpp>
#include <trisect/origami.hpp>
#include <trisect/report.hpp>

#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace trisect {

inline constexpr std::string_view kLocusCsvHeader =
    "b,x,y,q_angle_deg,j_angle_deg,residual_c1,residual_c2,residual_relation";

/// Shortest decimal that parses back to exactly `v` (never more than 17
/// significant digits). Negative zero prints as "0".
[[nodiscard]] std::string format_number(double v);

/// JSON object for a solved trisection plus its verification residuals.
[[nodiscard]] std::string trisection_json(const TrisectionResult& r, const Report& verification);

/// Inverse of trisection_json for the solver fields (radian keys are used so
/// the round trip is exact). Throws InvalidArgument on malformed input.
[[nodiscard]] TrisectionResult trisection_from_json(std::string_view text);

[[nodiscard]] std::string origami_json(const AbeConstruction& c, const Report& verification);

/// Header line followed by one row per point, each terminated by '\n'.
[[nodiscard]] std::string locus_csv(const LocusParams& params, std::span<const LocusPoint> points);

struct RenderSpec {
    int width_px = 800;
    int height_px = 800;
    int margin_px = 40;
    double stroke_width = 1.5;
    bool circles = true;
    bool locus = true;
    bool rays = true;
    bool labels = true;

    /// Throws InvalidArgument for sizes below 64 px or a negative margin.
    void validate() const;
};

/// What to draw: the curve over [b_min, b_max] and the two circles for J at
/// `b_current`. When `solve` is present J sits at its b* and the crossing N
/// and the target ray OB are drawn as well.
struct RenderScene {
    double b_min = 0.0;
    double b_max = 0.0;
    double b_current = 0.0;
    std::ptrdiff_t samples = 200;
    std::optional<TrisectionResult> solve;
};

[[nodiscard]] std::string render_svg(const LocusParams& params, const RenderScene& scene, const RenderSpec& spec);

}  // namespace trisect
