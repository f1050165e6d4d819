#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "sos/config.hpp"
#include "sos/neighborhood.hpp"
#include "sos/rng.hpp"

namespace sos {

/// Agents on a torus. Positions and media are fixed once built; only the
/// willingness buffers and the tick change as the world is stepped.
struct WorldState {
    int width = 0;
    int height = 0;
    int tick = 0;
    std::vector<double> w;       // willingness to express, current tick
    std::vector<double> w_back;  // back buffer for synchronous stepping
    std::vector<Patch> positions;
    std::vector<int> media;  // row-major, index y * width + x
    NeighborLists neighbors;

    [[nodiscard]] std::size_t size() const { return w.size(); }

    [[nodiscard]] int exposure(std::size_t agent) const {
        const auto& p = positions[agent];
        return media[static_cast<std::size_t>(p.y) * width + p.x];
    }

    bool operator==(const WorldState&) const = default;
};

class InvalidPopulation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Initial willingness values.
///
/// Balanced: magnitudes are |N(0, w_sd^2)| draws (exact zeros redrawn), then
/// a uniformly chosen ceil(n/2) of them are negated, so exactly ceil(n/2)
/// values are <= 0. Random: plain N(0, w_sd^2) draws.
/// Throws InvalidPopulation when n < 2.
std::vector<double> sample_initial_w(Rng& rng, std::size_t n, double w_sd, InitialSplit split);

/// One uniform draw from media_levels per patch, row-major.
std::vector<int> assign_media(Rng& rng, const ValidatedConfig& config);

/// `population` distinct patches, sampled uniformly without replacement.
std::vector<Patch> place_agents(Rng& rng, const ValidatedConfig& config);

/// Builds a world at tick 0 from a single generator seeded with `seed`.
/// Draw order: willingness, then media, then placement.
WorldState init_world(const ModelConfig& config, std::uint64_t seed);

/// Speaking flag per agent: 1 iff w > threshold.
std::vector<std::uint8_t> speaking_state(const WorldState& world, double threshold);

/// Number of agents with w <= threshold.
std::size_t silent_count(const WorldState& world, double threshold);

/// Mean over agents with at least one neighbor of the fraction of their
/// neighbors sharing their speaking state. Returns 0 when no agent has a
/// neighbor.
double same_state_fraction(const WorldState& world, double threshold);

}  // namespace sos
