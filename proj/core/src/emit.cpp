#include <trisect/emit.hpp>

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

namespace trisect {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json point_json(Point2 p) { return ordered_json{{"x", p.x}, {"y", p.y}}; }

ordered_json report_json(const Report& rep) {
    ordered_json residuals = ordered_json::object();
    for (const auto& r : rep.residuals()) {
        residuals[r.name] = r.value;
    }
    ordered_json failures = ordered_json::array();
    for (const auto& name : rep.failures()) {
        failures.push_back(name);
    }
    return ordered_json{{"passed", rep.passed()}, {"residuals", residuals}, {"failures", failures}};
}

// Fixed six decimals for SVG coordinates.
std::string fixed(double v) {
    if (std::abs(v) < 5e-7) {
        v = 0.0;
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 6);
    return std::string(buf, res.ptr);
}

struct Box {
    double min_x = std::numeric_limits<double>::infinity();
    double min_y = std::numeric_limits<double>::infinity();
    double max_x = -std::numeric_limits<double>::infinity();
    double max_y = -std::numeric_limits<double>::infinity();

    void add(Point2 p) {
        min_x = std::min(min_x, p.x);
        min_y = std::min(min_y, p.y);
        max_x = std::max(max_x, p.x);
        max_y = std::max(max_y, p.y);
    }
    void add(const Circle& c) {
        add(c.center() + Point2{c.radius(), c.radius()});
        add(c.center() - Point2{c.radius(), c.radius()});
    }
};

class SvgWriter {
public:
    explicit SvgWriter(double stroke) : stroke_(fixed(stroke)) {}

    void line(Point2 p, Point2 q, std::string_view cls) {
        body_ += "    <line class=\"" + std::string(cls) + "\" x1=\"" + fixed(p.x) + "\" y1=\"" + fixed(p.y) +
                 "\" x2=\"" + fixed(q.x) + "\" y2=\"" + fixed(q.y) + "\"/>\n";
    }
    void circle(const Circle& c, std::string_view cls) {
        body_ += "    <circle class=\"" + std::string(cls) + "\" cx=\"" + fixed(c.center().x) + "\" cy=\"" +
                 fixed(c.center().y) + "\" r=\"" + fixed(c.radius()) + "\"/>\n";
    }
    void polyline(std::span<const Point2> pts, std::string_view cls) {
        body_ += "    <polyline class=\"" + std::string(cls) + "\" points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (i != 0) {
                body_ += ' ';
            }
            body_ += fixed(pts[i].x) + "," + fixed(pts[i].y);
        }
        body_ += "\"/>\n";
    }
    void marker(Point2 p, double half) {
        body_ += "    <rect class=\"point\" x=\"" + fixed(p.x - half) + "\" y=\"" + fixed(p.y - half) +
                 "\" width=\"" + fixed(2.0 * half) + "\" height=\"" + fixed(2.0 * half) + "\"/>\n";
    }
    // Labels live outside the flipped group, so y is negated here.
    void label(Point2 p, std::string_view text) {
        labels_ += "    <text x=\"" + fixed(p.x) + "\" y=\"" + fixed(-p.y) + "\">" + std::string(text) + "</text>\n";
    }

    std::string body_;
    std::string labels_;
    std::string stroke_;
};

}  // namespace

std::string format_number(double v) {
    if (v == 0.0) {
        return "0";
    }
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    // Plain notation spells out every digit of a large integer; switch to
    // exponent form when that exceeds 17 significant digits.
    const std::string_view text(buf, static_cast<std::size_t>(res.ptr - buf));
    if (text.find('e') == std::string_view::npos && text.find('.') == std::string_view::npos) {
        const auto first = text.find_first_not_of("-0");
        const auto last = text.find_last_not_of('0');
        if (first != std::string_view::npos && last - first + 1 > 17) {
            res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific);
        }
    }
    return std::string(buf, res.ptr);
}

std::string trisection_json(const TrisectionResult& r, const Report& verification) {
    ordered_json j;
    j["three_theta_deg"] = r.three_theta.deg();
    j["theta_deg"] = r.theta.deg();
    j["three_theta_rad"] = r.three_theta.rad();
    j["theta_rad"] = r.theta.rad();
    j["fold_a"] = r.fold_a;
    j["b_star"] = r.b_star;
    j["b_star_normalized"] = r.b_star_normalized();
    j["unit_length"] = r.unit_length;
    j["n_point"] = point_json(r.n_point);
    j["iterations"] = r.iterations;
    j["final_bracket_width"] = r.final_bracket_width;
    j["angle_residual_rad"] = r.angle_residual;
    j["sin_theta_normalized"] = r.sin_theta_normalized();
    j["verification"] = report_json(verification);
    return j.dump(2) + "\n";
}

TrisectionResult trisection_from_json(std::string_view text) {
    try {
        const auto j = nlohmann::json::parse(text);
        TrisectionResult r;
        r.three_theta = Angle::radians(j.at("three_theta_rad").get<double>());
        r.theta = Angle::radians(j.at("theta_rad").get<double>());
        r.fold_a = j.at("fold_a").get<double>();
        r.b_star = j.at("b_star").get<double>();
        r.unit_length = j.at("unit_length").get<double>();
        r.n_point = {j.at("n_point").at("x").get<double>(), j.at("n_point").at("y").get<double>()};
        r.iterations = j.at("iterations").get<int>();
        r.final_bracket_width = j.at("final_bracket_width").get<double>();
        r.angle_residual = j.at("angle_residual_rad").get<double>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::InvalidArgument, std::string("malformed trisection JSON: ") + e.what());
    }
}

std::string origami_json(const AbeConstruction& c, const Report& verification) {
    ordered_json j;
    j["three_theta_deg"] = c.three_theta.deg();
    j["theta_deg"] = c.theta.deg();
    j["unit_length"] = c.unit_length;
    j["points"] = ordered_json{{"O", point_json(c.O)}, {"D", point_json(c.D)}, {"S", point_json(c.S)},
                               {"H", point_json(c.H)}, {"C", point_json(c.C)}, {"G", point_json(c.G)},
                               {"P", point_json(c.P)}};
    j["angles_deg"] = ordered_json{{"alpha", c.alpha.deg()}, {"beta", c.beta.deg()}, {"gamma", c.gamma.deg()}};
    j["verification"] = report_json(verification);
    return j.dump(2) + "\n";
}

std::string locus_csv(const LocusParams& params, std::span<const LocusPoint> points) {
    std::string out(kLocusCsvHeader);
    out += '\n';
    for (const auto& p : points) {
        const double j_angle = polar_angle({p.b, params.a()}).deg();
        const double fields[] = {p.b,
                                 p.q.x,
                                 p.q.y,
                                 p.q_polar_angle.deg(),
                                 j_angle,
                                 p.residual_circle1,
                                 p.residual_circle2,
                                 p.residual_locus_relation};
        for (std::size_t i = 0; i < std::size(fields); ++i) {
            if (i != 0) {
                out += ',';
            }
            out += format_number(fields[i]);
        }
        out += '\n';
    }
    return out;
}

void RenderSpec::validate() const {
    if (width_px < 64 || height_px < 64) {
        throw Error(ErrorCode::InvalidArgument, "render size must be at least 64x64 pixels");
    }
    if (margin_px < 0) {
        throw Error(ErrorCode::InvalidArgument, "render margin must be non-negative");
    }
    if (!std::isfinite(stroke_width) || stroke_width <= 0.0) {
        throw Error(ErrorCode::InvalidArgument, "stroke width must be positive");
    }
}

std::string render_svg(const LocusParams& params, const RenderScene& scene, const RenderSpec& spec) {
    spec.validate();
    const double a = params.a();
    const double b = scene.solve ? scene.solve->b_star : scene.b_current;

    const LocusPoint current = locus_point(params, b);
    const auto samples = sample_locus(params, scene.b_min, scene.b_max, scene.samples);
    std::vector<Point2> curve;
    curve.reserve(samples.size());
    for (const auto& s : samples) {
        curve.push_back(s.q);
    }

    const Point2 origin{0.0, 0.0};
    const Point2 j{b, a};
    const Point2 k{b, 0.0};
    const Circle first(origin, std::hypot(b, a));
    const Circle second(j, 2.0 * a);

    Box box;
    box.add(origin);
    box.add(first);
    box.add(second);
    for (const auto& p : curve) {
        box.add(p);
    }
    const double reach = std::max({std::abs(box.min_x), std::abs(box.max_x), std::abs(box.min_y), std::abs(box.max_y)});
    std::vector<Point2> ray_ends{{reach, 0.0}, (reach / std::hypot(b, a)) * j};
    if (scene.solve) {
        const double t3 = scene.solve->three_theta.rad();
        ray_ends.push_back(reach * Point2{std::cos(t3), std::sin(t3)});
    }
    if (spec.rays) {
        for (const auto& p : ray_ends) {
            box.add(p);
        }
    }
    const double span_x = box.max_x - box.min_x;
    const double span_y = box.max_y - box.min_y;

    // World units per pixel, with the drawing fitted inside the margins.
    const double usable_w = std::max(1, spec.width_px - 2 * spec.margin_px);
    const double usable_h = std::max(1, spec.height_px - 2 * spec.margin_px);
    const double per_px = std::max(span_x / usable_w, span_y / usable_h);
    const double margin = spec.margin_px * per_px;
    const double vb_x = box.min_x - margin;
    const double vb_y = -(box.max_y + margin);
    const double vb_w = span_x + 2.0 * margin;
    const double vb_h = span_y + 2.0 * margin;

    SvgWriter w(spec.stroke_width * per_px);

    w.line({box.min_x, 0.0}, {box.max_x, 0.0}, "axis");
    w.line({0.0, box.min_y}, {0.0, box.max_y}, "axis");
    w.line({box.min_x, a}, {box.max_x, a}, "fold");
    w.line({box.min_x, 2.0 * a}, {box.max_x, 2.0 * a}, "fold");
    if (spec.circles) {
        w.circle(first, "circle1");
        w.circle(second, "circle2");
    }
    if (spec.locus) {
        w.polyline(curve, "locus");
    }
    if (spec.rays) {
        w.line(origin, ray_ends[0], "ray-oa");
        if (scene.solve) {
            w.line(origin, ray_ends[2], "ray-ob");
        }
        w.line(origin, ray_ends[1], "ray-oj");
    }

    struct Named {
        std::string_view name;
        Point2 at;
    };
    std::vector<Named> points{{"O", origin}, {"C", {0.0, a}}, {"D", {0.0, 2.0 * a}},
                              {"J", j},      {"K", k},        {"Q", current.q}};
    if (scene.solve) {
        points.push_back({"N", scene.solve->n_point});
    }
    const double half = 3.0 * per_px;
    const Point2 nudge{6.0 * per_px, 6.0 * per_px};
    for (const auto& p : points) {
        w.marker(p.at, half);
        if (spec.labels) {
            // N coincides with Q; push it to the other side.
            const Point2 offset = p.name == "N" ? Point2{nudge.x, -2.5 * nudge.y} : nudge;
            w.label(p.at + offset, p.name);
        }
    }

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(spec.width_px) + "\" height=\"" +
           std::to_string(spec.height_px) + "\" viewBox=\"" + fixed(vb_x) + " " + fixed(vb_y) + " " + fixed(vb_w) +
           " " + fixed(vb_h) + "\">\n";
    svg += "  <style>\n";
    svg += "    line, circle, polyline { fill: none; stroke: #222; stroke-width: " + w.stroke_ + "; }\n";
    svg += "    .axis { stroke: #999; }\n";
    svg += "    .fold { stroke: #6a6; stroke-dasharray: " + fixed(8.0 * per_px) + " " + fixed(4.0 * per_px) + "; }\n";
    svg += "    .circle1 { stroke: #36c; }\n";
    svg += "    .circle2 { stroke: #c63; }\n";
    svg += "    .locus { stroke: #a0a; }\n";
    svg += "    rect.point { fill: #000; stroke: none; }\n";
    svg += "    text { font-family: sans-serif; font-size: " + fixed(14.0 * per_px) + "px; }\n";
    svg += "  </style>\n";
    svg += "  <g transform=\"scale(1,-1)\">\n";
    svg += w.body_;
    svg += "  </g>\n";
    if (!w.labels_.empty()) {
        svg += "  <g class=\"labels\">\n";
        svg += w.labels_;
        svg += "  </g>\n";
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace trisect
