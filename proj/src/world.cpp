#include "sos/world.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace sos {

namespace {

// Partial Fisher-Yates: after the call the first k entries are a uniform
// k-subset of `items` in uniform random order.
template <typename T>
void partial_shuffle(Rng& rng, std::vector<T>& items, std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = i + rng.uniform_index(items.size() - i);
        std::swap(items[i], items[j]);
    }
}

}  // namespace

std::vector<double> sample_initial_w(Rng& rng, std::size_t n, double w_sd, InitialSplit split) {
    if (n < 2) throw InvalidPopulation("initial willingness needs at least 2 agents");

    std::vector<double> w(n);
    if (split == InitialSplit::Random) {
        for (auto& v : w) v = w_sd * rng.normal();
        return w;
    }

    for (auto& v : w) {
        do {
            v = std::abs(w_sd * rng.normal());
        } while (v == 0.0);
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    const std::size_t silent = (n + 1) / 2;
    partial_shuffle(rng, order, silent);
    for (std::size_t i = 0; i < silent; ++i) w[order[i]] = -w[order[i]];
    return w;
}

std::vector<int> assign_media(Rng& rng, const ValidatedConfig& config) {
    const auto& levels = config->media_levels;
    std::vector<int> media(static_cast<std::size_t>(config->patch_count()));
    for (auto& m : media) m = levels[rng.uniform_index(levels.size())];
    return media;
}

std::vector<Patch> place_agents(Rng& rng, const ValidatedConfig& config) {
    const int width = config->grid_width;
    std::vector<int> cells(static_cast<std::size_t>(config->patch_count()));
    std::iota(cells.begin(), cells.end(), 0);
    const auto n = static_cast<std::size_t>(config->population);
    partial_shuffle(rng, cells, n);

    std::vector<Patch> positions(n);
    for (std::size_t i = 0; i < n; ++i) positions[i] = {cells[i] % width, cells[i] / width};
    return positions;
}

WorldState init_world(const ModelConfig& config, std::uint64_t seed) {
    const auto valid = validate_config(config);
    Rng rng(seed);

    WorldState world;
    world.width = config.grid_width;
    world.height = config.grid_height;
    world.w = sample_initial_w(rng, static_cast<std::size_t>(config.population), config.w_sd,
                               config.initial_split);
    world.media = assign_media(rng, valid);
    world.positions = place_agents(rng, valid);
    world.neighbors =
        NeighborLists(world.width, world.height, world.positions, config.vision_radius);
    world.w_back.assign(world.w.size(), 0.0);
    return world;
}

std::vector<std::uint8_t> speaking_state(const WorldState& world, double threshold) {
    std::vector<std::uint8_t> out(world.size());
    for (std::size_t i = 0; i < world.size(); ++i) out[i] = world.w[i] > threshold ? 1 : 0;
    return out;
}

std::size_t silent_count(const WorldState& world, double threshold) {
    return static_cast<std::size_t>(std::count_if(
        world.w.begin(), world.w.end(), [threshold](double v) { return v <= threshold; }));
}

double same_state_fraction(const WorldState& world, double threshold) {
    double total = 0.0;
    std::size_t counted = 0;
    for (std::size_t i = 0; i < world.size(); ++i) {
        const auto nbrs = world.neighbors.of(i);
        if (nbrs.empty()) continue;
        const bool mine = world.w[i] > threshold;
        std::size_t same = 0;
        for (auto j : nbrs) same += (world.w[j] > threshold) == mine ? 1 : 0;
        total += static_cast<double>(same) / static_cast<double>(nbrs.size());
        ++counted;
    }
    return counted == 0 ? 0.0 : total / static_cast<double>(counted);
}

}  // namespace sos
