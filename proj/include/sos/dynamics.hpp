#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "sos/config.hpp"
#include "sos/world.hpp"

namespace sos {

enum class Outcome { Silence, Speaking, Tie };

std::string_view to_string(Outcome outcome);

/// Per-tick series of one simulation run. Series entry k describes tick
/// start_tick + k; entry 0 is the state the run started from.
struct RunResult {
    int start_tick = 0;
    int population = 0;
    std::vector<int> silent_count;
    std::vector<int> new_silent;    // speaking -> silent transitions
    std::vector<int> new_speaking;  // silent -> speaking transitions
    std::vector<double> mean_w;
    int convergence_tick = 0;  // first tick of the stable window
    bool non_converged = false;
    Outcome outcome = Outcome::Tie;
    double final_silent_fraction = 0.0;

    [[nodiscard]] int last_tick() const {
        return start_tick + static_cast<int>(silent_count.size()) - 1;
    }

    bool operator==(const RunResult&) const = default;
};

/// Sum of current willingness over the agent's neighbors (self excluded).
double group_term(const WorldState& world, std::size_t agent);

/// Signed media contribution: minus the exposure of the agent's patch, so
/// media pressure pushes willingness toward the silent pole.
double media_term(const WorldState& world, std::size_t agent);

/// One synchronous tick, in place. Every new value is computed from the
/// previous buffer only:
///   w'(n) = w(n) + alpha * media_term(n) + beta * group_term(n)
/// then the buffers are swapped and the tick advanced.
void advance(WorldState& world, const ModelConfig& config);

/// As advance(), visiting agents in the given order. `order` must be a
/// permutation of [0, size). The result does not depend on it.
void advance(WorldState& world, const ModelConfig& config, std::span<const std::size_t> order);

/// Value-returning form of advance().
WorldState step(const WorldState& world, const ModelConfig& config);

/// True iff the last window + 1 entries of `history` exist and are all the
/// same speaking partition.
bool detect_stability(std::span<const std::vector<std::uint8_t>> history, int window);

/// Silence above one half silent, Speaking below, Tie at exactly one half.
Outcome classify_outcome(int silent, int population);
Outcome classify_outcome(const RunResult& result);

/// Called with the world at the start and after every tick.
using TickObserver = std::function<void(const WorldState&)>;

/// Steps `world` until the speaking partition has stayed unchanged for
/// config.stability_window ticks or config.max_ticks is reached.
RunResult run_sim(WorldState& world, const ModelConfig& config, const TickObserver& observer = {});

/// init_world followed by run_sim.
RunResult simulate(const ModelConfig& config, std::uint64_t seed,
                   const TickObserver& observer = {});

}  // namespace sos
