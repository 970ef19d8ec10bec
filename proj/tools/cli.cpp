#include "cli.hpp"

#include <trisect/emit.hpp>
#include <trisect/locus.hpp>
#include <trisect/oracles.hpp>
#include <trisect/origami.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

namespace trisect::cli {

namespace {

constexpr long long kDefaultLocusSamples = 101;
constexpr long long kDefaultRenderSamples = 200;

std::optional<Format> parse_format(const std::string& s) {
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    if (s == "svg") return Format::Svg;
    if (s == "text") return Format::Text;
    return std::nullopt;
}

int emit(const CliConfig& cfg, const std::string& text, std::ostream& out, std::ostream& err) {
    if (!cfg.output_path) {
        out << text;
        out.flush();
        return kOk;
    }
    std::ofstream f(*cfg.output_path, std::ios::binary | std::ios::trunc);
    if (!f) {
        err << "error: cannot open " << *cfg.output_path << " for writing\n";
        return kIoError;
    }
    f << text;
    f.close();
    if (!f) {
        err << "error: failed writing " << *cfg.output_path << "\n";
        return kIoError;
    }
    return kOk;
}

// Flags shared by every subcommand; range checks that are argument errors
// rather than domain errors.
int check_common(const CliConfig& cfg, std::ostream& err) {
    if (cfg.angle_deg && !std::isfinite(*cfg.angle_deg)) {
        err << "error: --angle-deg must be finite\n";
        return kBadArguments;
    }
    if (!std::isfinite(cfg.fold_a) || cfg.fold_a <= 0.0) {
        err << "error: --fold must be positive\n";
        return kBadArguments;
    }
    if (!std::isfinite(cfg.tol) || cfg.tol <= 0.0) {
        err << "error: --tol must be positive\n";
        return kBadArguments;
    }
    if (cfg.samples && *cfg.samples < 2) {
        err << "error: --samples must be at least 2\n";
        return kBadArguments;
    }
    return kOk;
}

int require_format(const CliConfig& cfg, std::initializer_list<Format> allowed, std::ostream& err) {
    if (cfg.format && std::find(allowed.begin(), allowed.end(), *cfg.format) == allowed.end()) {
        err << "error: unsupported --format for this subcommand\n";
        return kBadArguments;
    }
    return kOk;
}

// Maps library errors onto the documented exit codes.
int exit_for(const Error& e, std::ostream& err) {
    err << "error: " << e.what() << "\n";
    switch (e.code()) {
        case ErrorCode::AngleOutOfRange:
        case ErrorCode::DegeneratePoint:
        case ErrorCode::ConcentricCircles:
        case ErrorCode::NoIntersection:
            return kDomainError;
        case ErrorCode::MaxIterationsExceeded:
            return kConvergenceError;
        case ErrorCode::MismatchDetected:
            return kVerificationFailed;
        case ErrorCode::InvalidArgument:
        case ErrorCode::ParameterOutOfRange:
        case ErrorCode::InvalidSampleCount:
            return kBadArguments;
    }
    return kBadArguments;
}

bool in_solver_range(double deg) { return deg > 0.0 && deg <= 90.0; }

std::string trisection_text(const TrisectionResult& r, const Report& rep) {
    std::ostringstream s;
    s << "three_theta_deg: " << format_number(r.three_theta.deg()) << "\n"
      << "theta_deg: " << format_number(r.theta.deg()) << "\n"
      << "fold_a: " << format_number(r.fold_a) << "\n"
      << "b_star: " << format_number(r.b_star) << "\n"
      << "unit_length: " << format_number(r.unit_length) << "\n"
      << "n_point: " << format_number(r.n_point.x) << " " << format_number(r.n_point.y) << "\n"
      << "iterations: " << r.iterations << "\n"
      << "angle_residual_rad: " << format_number(r.angle_residual) << "\n"
      << "sin_theta_normalized: " << format_number(r.sin_theta_normalized()) << "\n";
    for (const auto& res : rep.residuals()) {
        s << "check " << res.name << ": " << format_number(res.value) << (res.ok() ? " ok" : " FAIL") << "\n";
    }
    return s.str();
}

}  // namespace

int cmd_trisect(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    if (int rc = check_common(cfg, err); rc != kOk) return rc;
    if (int rc = require_format(cfg, {Format::Json, Format::Text}, err); rc != kOk) return rc;
    if (!cfg.angle_deg) {
        err << "error: trisect needs --angle-deg\n";
        return kBadArguments;
    }
    if (!in_solver_range(*cfg.angle_deg)) {
        err << "error: AngleOutOfRange: --angle-deg must lie in (0, 90]\n";
        return kDomainError;
    }
    try {
        const LocusParams params(cfg.fold_a);
        const auto result = trisect(Angle::degrees(*cfg.angle_deg), params, cfg.tol);
        const auto report = verify_trisection(result, params, cfg.tol);
        const bool text = cfg.format == Format::Text;
        return emit(cfg, text ? trisection_text(result, report) : trisection_json(result, report), out, err);
    } catch (const ConvergenceError& e) {
        err << "error: " << e.what() << " (best b = " << format_number(e.partial().b_star) << ")\n";
        return kConvergenceError;
    } catch (const Error& e) {
        return exit_for(e, err);
    }
}

int cmd_locus(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    if (int rc = check_common(cfg, err); rc != kOk) return rc;
    if (int rc = require_format(cfg, {Format::Csv}, err); rc != kOk) return rc;
    try {
        const LocusParams params(cfg.fold_a);
        const double b_min = cfg.b_min.value_or(params.b_start());
        const double b_max = cfg.b_max.value_or(10.0 * cfg.fold_a);
        const auto points = sample_locus(params, b_min, b_max, cfg.samples.value_or(kDefaultLocusSamples));
        return emit(cfg, locus_csv(params, points), out, err);
    } catch (const Error& e) {
        return exit_for(e, err);
    }
}

int cmd_origami(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    if (int rc = check_common(cfg, err); rc != kOk) return rc;
    if (int rc = require_format(cfg, {Format::Json, Format::Text}, err); rc != kOk) return rc;
    if (!cfg.angle_deg) {
        err << "error: origami needs --angle-deg\n";
        return kBadArguments;
    }
    if (!(*cfg.angle_deg > 0.0 && *cfg.angle_deg < 90.0)) {
        err << "error: AngleOutOfRange: --angle-deg must lie in (0, 90) for the origami construction\n";
        return kDomainError;
    }
    try {
        const auto c = abe_construct(Angle::degrees(*cfg.angle_deg));
        const auto report = abe_verify(c);
        if (cfg.format == Format::Text) {
            std::ostringstream s;
            s << "three_theta_deg: " << format_number(c.three_theta.deg()) << "\n"
              << "theta_deg: " << format_number(c.theta.deg()) << "\n"
              << "alpha_deg: " << format_number(c.alpha.deg()) << "\n"
              << "beta_deg: " << format_number(c.beta.deg()) << "\n"
              << "gamma_deg: " << format_number(c.gamma.deg()) << "\n";
            for (const auto& res : report.residuals()) {
                s << "check " << res.name << ": " << format_number(res.value)
                  << (res.informational ? " info" : res.ok() ? " ok" : " FAIL") << "\n";
            }
            return emit(cfg, s.str(), out, err);
        }
        return emit(cfg, origami_json(c, report), out, err);
    } catch (const Error& e) {
        return exit_for(e, err);
    }
}

int cmd_verify(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    if (int rc = check_common(cfg, err); rc != kOk) return rc;
    if (int rc = require_format(cfg, {Format::Json, Format::Text}, err); rc != kOk) return rc;

    std::vector<double> sweep;
    if (cfg.angle_deg) {
        if (!in_solver_range(*cfg.angle_deg)) {
            err << "error: AngleOutOfRange: --angle-deg must lie in (0, 90]\n";
            return kDomainError;
        }
        sweep.push_back(*cfg.angle_deg);
    } else {
        for (int d = 1; d <= 90; ++d) {
            sweep.push_back(d);
        }
    }

    struct Worst {
        double theta_spread = 0.0;
        double oracle_error = 0.0;
        double triple_angle = 0.0;
        double locus = 0.0;
        double origami = 0.0;
        double chords = 0.0;
    } worst;
    std::vector<std::pair<double, std::string>> failures;

    auto absorb = [&](const CrossValidation& cv) {
        worst.theta_spread = std::max(worst.theta_spread, cv.max_theta_spread);
        worst.oracle_error = std::max(worst.oracle_error, std::abs(cv.theta_locus.rad() - cv.theta_oracle.rad()));
        worst.triple_angle = std::max(worst.triple_angle, cv.triple_angle);
        worst.locus = std::max(worst.locus, cv.locus.worst());
        if (cv.origami) worst.origami = std::max(worst.origami, cv.origami->worst());
        worst.chords = std::max(worst.chords, cv.chords.worst());
    };

    for (const double deg : sweep) {
        try {
            const auto cv = cross_validate(Angle::degrees(deg), cfg.fold_a, cfg.tol);
            absorb(cv);
            if (!cv.passed()) {
                failures.emplace_back(deg, "residual above tolerance");
            }
        } catch (const MismatchError& e) {
            absorb(e.report());
            failures.emplace_back(deg, e.what());
        } catch (const Error& e) {
            if (e.code() != ErrorCode::MaxIterationsExceeded) {
                return exit_for(e, err);
            }
            failures.emplace_back(deg, e.what());
        }
    }

    const bool passed = failures.empty();
    std::string text;
    if (cfg.format == Format::Json) {
        nlohmann::ordered_json j;
        j["angles_checked"] = sweep.size();
        j["fold_a"] = cfg.fold_a;
        j["tolerance"] = cfg.tol;
        j["worst"] = {{"theta_spread_rad", worst.theta_spread},       {"locus_minus_oracle_rad", worst.oracle_error},
                      {"triple_angle_residual", worst.triple_angle}, {"locus_residual", worst.locus},
                      {"origami_residual", worst.origami},           {"chord_residual", worst.chords}};
        nlohmann::ordered_json fails = nlohmann::ordered_json::array();
        for (const auto& [deg, why] : failures) {
            fails.push_back({{"angle_deg", deg}, {"reason", why}});
        }
        j["failures"] = fails;
        j["passed"] = passed;
        text = j.dump(2) + "\n";
    } else {
        std::ostringstream s;
        s << "angles checked: " << sweep.size() << "\n"
          << "fold a: " << format_number(cfg.fold_a) << "\n"
          << "tolerance: " << format_number(cfg.tol) << "\n"
          << "worst theta spread (rad): " << format_number(worst.theta_spread) << "\n"
          << "worst |theta_locus - angle/3| (rad): " << format_number(worst.oracle_error) << "\n"
          << "worst triple-angle residual: " << format_number(worst.triple_angle) << "\n"
          << "worst locus residual: " << format_number(worst.locus) << "\n"
          << "worst origami residual: " << format_number(worst.origami) << "\n"
          << "worst chord residual: " << format_number(worst.chords) << "\n";
        for (const auto& [deg, why] : failures) {
            s << "FAIL " << format_number(deg) << " deg: " << why << "\n";
        }
        s << "result: " << (passed ? "PASS" : "FAIL") << "\n";
        text = s.str();
    }
    if (int rc = emit(cfg, text, out, err); rc != kOk) return rc;
    return passed ? kOk : kVerificationFailed;
}

int cmd_render(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    if (int rc = check_common(cfg, err); rc != kOk) return rc;
    if (int rc = require_format(cfg, {Format::Svg}, err); rc != kOk) return rc;
    if (cfg.angle_deg && !in_solver_range(*cfg.angle_deg)) {
        err << "error: AngleOutOfRange: --angle-deg must lie in (0, 90]\n";
        return kDomainError;
    }
    try {
        const LocusParams params(cfg.fold_a);
        RenderSpec spec;
        spec.width_px = cfg.width_px;
        spec.height_px = cfg.height_px;
        spec.validate();

        RenderScene scene;
        scene.samples = cfg.samples.value_or(kDefaultRenderSamples);
        scene.b_min = cfg.b_min.value_or(params.b_start());
        if (cfg.angle_deg) {
            scene.solve = trisect(Angle::degrees(*cfg.angle_deg), params, cfg.tol);
            scene.b_max = cfg.b_max.value_or(std::max(1.5 * scene.solve->b_star, 2.0 * params.b_start()));
        } else {
            scene.b_max = cfg.b_max.value_or(2.0 * params.b_start());
        }
        scene.b_current = scene.solve ? scene.solve->b_star : scene.b_max;
        return emit(cfg, render_svg(params, scene, spec), out, err);
    } catch (const Error& e) {
        return exit_for(e, err);
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Angle trisection by the two-circle locus, with origami and chord-diagram cross-checks", "trisect"};
    app.require_subcommand(1);

    CliConfig cfg;
    std::string format;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--angle-deg", cfg.angle_deg, "Given angle in degrees");
        sub->add_option("--fold", cfg.fold_a, "Fold spacing a (construction units)")->capture_default_str();
        sub->add_option("--tol", cfg.tol, "Solver / verification tolerance in radians")->capture_default_str();
        sub->add_option("--samples", cfg.samples, "Number of locus samples");
        sub->add_option("--b-min", cfg.b_min, "Smallest b sampled (default sqrt(3)*a)");
        sub->add_option("--b-max", cfg.b_max, "Largest b sampled");
        sub->add_option("--format", format, "json|csv|svg|text");
        sub->add_option("--output", cfg.output_path, "Output file (default: standard output)");
    };

    auto* trisect_cmd = app.add_subcommand("trisect", "Solve the trisection and print the result as JSON");
    auto* locus_cmd = app.add_subcommand("locus", "Write the sampled locus as CSV");
    auto* origami_cmd = app.add_subcommand("origami", "Build and verify the origami construction");
    auto* verify_cmd = app.add_subcommand("verify", "Cross-validate every route over an angle sweep");
    auto* render_cmd = app.add_subcommand("render", "Draw the construction as SVG");
    for (auto* sub : {trisect_cmd, locus_cmd, origami_cmd, verify_cmd, render_cmd}) {
        add_common(sub);
    }
    render_cmd->add_option("--width", cfg.width_px, "SVG width in pixels")->capture_default_str();
    render_cmd->add_option("--height", cfg.height_px, "SVG height in pixels")->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
            app.exit(e, out, err);
            return kOk;
        }
        app.exit(e, out, err);
        return kBadArguments;
    }

    if (!format.empty()) {
        cfg.format = parse_format(format);
        if (!cfg.format) {
            err << "error: unknown --format " << format << "\n";
            return kBadArguments;
        }
    }

    if (trisect_cmd->parsed()) return cmd_trisect(cfg, out, err);
    if (locus_cmd->parsed()) return cmd_locus(cfg, out, err);
    if (origami_cmd->parsed()) return cmd_origami(cfg, out, err);
    if (verify_cmd->parsed()) return cmd_verify(cfg, out, err);
    return cmd_render(cfg, out, err);
}

}  // namespace trisect::cli
