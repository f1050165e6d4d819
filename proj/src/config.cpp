#include "sos/config.hpp"

#include <algorithm>
#include <cmath>

namespace sos {

std::string_view to_string(InitialSplit split) {
    switch (split) {
        case InitialSplit::Balanced: return "balanced";
        case InitialSplit::Random: return "random";
    }
    return "unknown";
}

std::string_view to_string(ConfigErrorCode code) {
    switch (code) {
        case ConfigErrorCode::InvalidGrid: return "InvalidGrid";
        case ConfigErrorCode::InvalidPopulation: return "InvalidPopulation";
        case ConfigErrorCode::OverpopulatedGrid: return "OverpopulatedGrid";
        case ConfigErrorCode::InvalidVision: return "InvalidVision";
        case ConfigErrorCode::VisionExceedsGrid: return "VisionExceedsGrid";
        case ConfigErrorCode::NegativeAlpha: return "NegativeAlpha";
        case ConfigErrorCode::NegativeBeta: return "NegativeBeta";
        case ConfigErrorCode::EmptyMediaLevels: return "EmptyMediaLevels";
        case ConfigErrorCode::NegativeMediaLevel: return "NegativeMediaLevel";
        case ConfigErrorCode::InvalidWSd: return "InvalidWSd";
        case ConfigErrorCode::InvalidMaxTicks: return "InvalidMaxTicks";
        case ConfigErrorCode::InvalidStabilityWindow: return "InvalidStabilityWindow";
        case ConfigErrorCode::InvalidClamp: return "InvalidClamp";
    }
    return "Unknown";
}

ConfigError::ConfigError(ConfigErrorCode code, const std::string& detail)
    : std::invalid_argument(std::string(to_string(code)) + ": " + detail), code_(code) {}

ValidatedConfig validate_config(const ModelConfig& c) {
    auto fail = [](ConfigErrorCode code, const std::string& detail) {
        throw ConfigError(code, detail);
    };

    if (c.grid_width <= 0 || c.grid_height <= 0) {
        fail(ConfigErrorCode::InvalidGrid, "grid dimensions must be positive");
    }
    if (c.population <= 0) {
        fail(ConfigErrorCode::InvalidPopulation, "population must be positive");
    }
    // 64-bit product so huge grids cannot overflow the comparison.
    const long long patches = static_cast<long long>(c.grid_width) * c.grid_height;
    if (c.population > patches) {
        fail(ConfigErrorCode::OverpopulatedGrid,
             "population " + std::to_string(c.population) + " exceeds " +
                 std::to_string(patches) + " patches");
    }
    if (!(c.vision_radius > 0.0) || !std::isfinite(c.vision_radius)) {
        fail(ConfigErrorCode::InvalidVision, "vision_radius must be positive and finite");
    }
    const double span = 2.0 * c.vision_radius + 1.0;
    if (!(c.grid_width > span) || !(c.grid_height > span)) {
        fail(ConfigErrorCode::VisionExceedsGrid,
             "grid sides must exceed 2*vision_radius+1 = " + std::to_string(span));
    }
    if (!(c.alpha >= 0.0) || !std::isfinite(c.alpha)) {
        fail(ConfigErrorCode::NegativeAlpha, "alpha must be a finite value >= 0");
    }
    if (!(c.beta >= 0.0) || !std::isfinite(c.beta)) {
        fail(ConfigErrorCode::NegativeBeta, "beta must be a finite value >= 0");
    }
    if (c.media_levels.empty()) {
        fail(ConfigErrorCode::EmptyMediaLevels, "media_levels must not be empty");
    }
    if (std::any_of(c.media_levels.begin(), c.media_levels.end(), [](int m) { return m < 0; })) {
        fail(ConfigErrorCode::NegativeMediaLevel, "media_levels entries must be >= 0");
    }
    if (!(c.w_sd > 0.0) || !std::isfinite(c.w_sd)) {
        fail(ConfigErrorCode::InvalidWSd, "w_sd must be positive and finite");
    }
    if (c.max_ticks <= 0) {
        fail(ConfigErrorCode::InvalidMaxTicks, "max_ticks must be positive");
    }
    if (c.stability_window <= 0) {
        fail(ConfigErrorCode::InvalidStabilityWindow, "stability_window must be positive");
    }
    if (!(c.w_clamp >= 0.0) || !std::isfinite(c.w_clamp)) {
        fail(ConfigErrorCode::InvalidClamp, "w_clamp must be a finite value >= 0");
    }
    return ValidatedConfig(c);
}

}  // namespace sos
