#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sos {

enum class InitialSplit { Balanced, Random };

std::string_view to_string(InitialSplit split);

/// All model parameters and simulation policy knobs.
///
/// Defaults reproduce the baseline setup: a 50x50 torus with 1000 agents,
/// vision radius 3, media levels 0..5 and a balanced initial split.
struct ModelConfig {
    int grid_width = 50;
    int grid_height = 50;
    int population = 1000;
    double vision_radius = 3.0;
    double alpha = 0.02;  // media influence
    double beta = 0.02;   // group influence
    std::vector<int> media_levels{0, 1, 2, 3, 4, 5};
    double threshold = 0.0;
    double w_sd = 1.0;
    InitialSplit initial_split = InitialSplit::Balanced;
    int max_ticks = 1000;
    int stability_window = 10;
    std::uint64_t seed = 1;
    // Symmetric bound applied to w after each step; 0 disables clamping.
    double w_clamp = 0.0;

    bool operator==(const ModelConfig&) const = default;

    [[nodiscard]] int patch_count() const { return grid_width * grid_height; }
};

enum class ConfigErrorCode {
    InvalidGrid,
    InvalidPopulation,
    OverpopulatedGrid,
    InvalidVision,
    VisionExceedsGrid,
    NegativeAlpha,
    NegativeBeta,
    EmptyMediaLevels,
    NegativeMediaLevel,
    InvalidWSd,
    InvalidMaxTicks,
    InvalidStabilityWindow,
    InvalidClamp,
};

std::string_view to_string(ConfigErrorCode code);

class ConfigError : public std::invalid_argument {
public:
    ConfigError(ConfigErrorCode code, const std::string& detail);

    [[nodiscard]] ConfigErrorCode code() const noexcept { return code_; }

private:
    ConfigErrorCode code_;
};

/// A ModelConfig that has passed validate_config. Only validate_config can
/// construct one, so holding a ValidatedConfig is proof of validity.
class ValidatedConfig {
public:
    [[nodiscard]] const ModelConfig& get() const noexcept { return config_; }
    const ModelConfig* operator->() const noexcept { return &config_; }

private:
    explicit ValidatedConfig(ModelConfig config) : config_(std::move(config)) {}
    friend ValidatedConfig validate_config(const ModelConfig& config);

    ModelConfig config_;
};

/// Checks every ModelConfig invariant and throws ConfigError naming the
/// first one violated.
ValidatedConfig validate_config(const ModelConfig& config);

}  // namespace sos
