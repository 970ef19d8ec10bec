#include <trisect/report.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace trisect {

void Report::add(std::string name, double value, double tolerance) {
    residuals_.push_back({std::move(name), value, tolerance, false});
}

void Report::add_informational(std::string name, double value) {
    residuals_.push_back({std::move(name), value, 0.0, true});
}

bool Report::passed() const noexcept {
    // NaN residuals compare false against the tolerance and fail here.
    return std::all_of(residuals_.begin(), residuals_.end(), [](const Residual& r) { return r.ok(); });
}

const Residual& Report::at(std::string_view name) const {
    for (const auto& r : residuals_) {
        if (r.name == name) {
            return r;
        }
    }
    throw std::out_of_range("no residual named " + std::string(name));
}

double Report::worst() const noexcept {
    double w = 0.0;
    for (const auto& r : residuals_) {
        if (!r.informational) {
            w = std::isnan(r.value) ? r.value : std::max(w, r.value);
            if (std::isnan(w)) {
                break;
            }
        }
    }
    return w;
}

std::vector<std::string> Report::failures() const {
    std::vector<std::string> out;
    for (const auto& r : residuals_) {
        if (!r.ok()) {
            out.push_back(r.name);
        }
    }
    return out;
}

}  // namespace trisect
