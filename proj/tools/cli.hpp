#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace trisect::cli {

enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kBadArguments = 2,
    kDomainError = 3,
    kConvergenceError = 4,
    kIoError = 5,
};

enum class Subcommand { Trisect, Locus, Origami, Verify, Render };
enum class Format { Json, Csv, Svg, Text };

struct CliConfig {
    Subcommand subcommand = Subcommand::Trisect;
    std::optional<double> angle_deg;
    double fold_a = 1.0;
    double tol = 1e-12;
    std::optional<long long> samples;
    std::optional<double> b_min;
    std::optional<double> b_max;
    std::optional<std::string> output_path;
    std::optional<Format> format;
    int width_px = 800;
    int height_px = 800;
};

/// Parses `args` (program name excluded) and runs the subcommand. Results go
/// to `out` unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cmd_trisect(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_locus(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_origami(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_render(const CliConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace trisect::cli
