#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace trisect {

/// One named diagnostic. Informational residuals are recorded but never fail
/// a report.
struct Residual {
    std::string name;
    double value = 0.0;
    double tolerance = 0.0;
    bool informational = false;

    [[nodiscard]] bool ok() const noexcept { return informational || value <= tolerance; }
};

class Report {
public:
    void add(std::string name, double value, double tolerance);
    void add_informational(std::string name, double value);

    [[nodiscard]] const std::vector<Residual>& residuals() const noexcept { return residuals_; }
    [[nodiscard]] bool passed() const noexcept;

    /// Throws std::out_of_range for unknown names.
    [[nodiscard]] const Residual& at(std::string_view name) const;

    /// Largest checked residual value (0 for an empty report).
    [[nodiscard]] double worst() const noexcept;

    /// Names of every checked residual above its tolerance.
    [[nodiscard]] std::vector<std::string> failures() const;

private:
    std::vector<Residual> residuals_;
};

}  // namespace trisect
