#include "sos/dynamics.hpp"

#include <algorithm>
#include <numeric>

namespace sos {

std::string_view to_string(Outcome outcome) {
    switch (outcome) {
        case Outcome::Silence: return "silence";
        case Outcome::Speaking: return "speaking";
        case Outcome::Tie: return "tie";
    }
    return "unknown";
}

double group_term(const WorldState& world, std::size_t agent) {
    double sum = 0.0;
    for (auto j : world.neighbors.of(agent)) sum += world.w[j];
    return sum;
}

double media_term(const WorldState& world, std::size_t agent) {
    return -static_cast<double>(world.exposure(agent));
}

namespace {

inline double updated_w(const WorldState& world, const ModelConfig& config, std::size_t i) {
    double next =
        world.w[i] + config.alpha * media_term(world, i) + config.beta * group_term(world, i);
    if (config.w_clamp > 0.0) next = std::clamp(next, -config.w_clamp, config.w_clamp);
    return next;
}

}  // namespace

void advance(WorldState& world, const ModelConfig& config) {
    world.w_back.resize(world.w.size());
    for (std::size_t i = 0; i < world.size(); ++i) world.w_back[i] = updated_w(world, config, i);
    world.w.swap(world.w_back);
    ++world.tick;
}

void advance(WorldState& world, const ModelConfig& config, std::span<const std::size_t> order) {
    world.w_back.resize(world.w.size());
    for (auto i : order) world.w_back[i] = updated_w(world, config, i);
    world.w.swap(world.w_back);
    ++world.tick;
}

WorldState step(const WorldState& world, const ModelConfig& config) {
    WorldState next = world;
    advance(next, config);
    return next;
}

bool detect_stability(std::span<const std::vector<std::uint8_t>> history, int window) {
    const auto needed = static_cast<std::size_t>(window) + 1;
    if (window < 1 || history.size() < needed) return false;
    const auto tail = history.last(needed);
    return std::all_of(tail.begin() + 1, tail.end(),
                       [&](const auto& state) { return state == tail.front(); });
}

Outcome classify_outcome(int silent, int population) {
    const long long twice = 2LL * silent;
    if (twice > population) return Outcome::Silence;
    if (twice < population) return Outcome::Speaking;
    return Outcome::Tie;
}

Outcome classify_outcome(const RunResult& result) {
    return classify_outcome(result.silent_count.back(), result.population);
}

RunResult run_sim(WorldState& world, const ModelConfig& config, const TickObserver& observer) {
    const double threshold = config.threshold;
    const auto n = world.size();

    RunResult result;
    result.start_tick = world.tick;
    result.population = static_cast<int>(n);

    auto record = [&](int silent, int to_silent, int to_speaking) {
        result.silent_count.push_back(silent);
        result.new_silent.push_back(to_silent);
        result.new_speaking.push_back(to_speaking);
        const double sum = std::accumulate(world.w.begin(), world.w.end(), 0.0);
        result.mean_w.push_back(n == 0 ? 0.0 : sum / static_cast<double>(n));
    };

    auto speaking = speaking_state(world, threshold);
    record(static_cast<int>(silent_count(world, threshold)), 0, 0);
    if (observer) observer(world);

    // Consecutive ticks without any transition; the partition has been
    // identical for quiet + 1 recorded ticks.
    int quiet = 0;
    bool stable = false;
    while (world.tick < config.max_ticks) {
        advance(world, config);
        int to_silent = 0;
        int to_speaking = 0;
        int silent = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const std::uint8_t now = world.w[i] > threshold ? 1 : 0;
            if (now != speaking[i]) {
                if (now) ++to_speaking; else ++to_silent;
                speaking[i] = now;
            }
            silent += now ? 0 : 1;
        }
        record(silent, to_silent, to_speaking);
        if (observer) observer(world);

        quiet = (to_silent + to_speaking == 0) ? quiet + 1 : 0;
        if (quiet >= config.stability_window) {
            stable = true;
            break;
        }
    }

    if (stable) {
        result.convergence_tick = world.tick - config.stability_window;
    } else {
        result.non_converged = true;
        result.convergence_tick = config.max_ticks;
    }
    result.final_silent_fraction =
        n == 0 ? 0.0 : static_cast<double>(result.silent_count.back()) / static_cast<double>(n);
    result.outcome = classify_outcome(result);
    return result;
}

RunResult simulate(const ModelConfig& config, std::uint64_t seed, const TickObserver& observer) {
    auto world = init_world(config, seed);
    return run_sim(world, config, observer);
}

}  // namespace sos
