#include "sos/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <set>
#include <thread>

namespace sos {

ExperimentError::ExperimentError(ExperimentErrorCode code, const std::string& detail)
    : std::runtime_error(detail), code_(code) {}

ReplicationSet run_replications(const ModelConfig& config, std::size_t k, std::uint64_t base_seed,
                                unsigned threads, std::string label) {
    if (k < 1) throw std::invalid_argument("replication count must be at least 1");
    validate_config(config);

    ReplicationSet set;
    set.label = std::move(label);
    set.config = config;
    set.seeds.resize(k);
    for (std::size_t i = 0; i < k; ++i) set.seeds[i] = base_seed + i;
    set.results.resize(k);

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, k));

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < k; i = next++) {
            try {
                set.results[i] = simulate(config, set.seeds[i]);
            } catch (...) {
                const std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };

    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);
    return set;
}

std::string_view to_string(PresetName name) {
    switch (name) {
        case PresetName::E1: return "e1";
        case PresetName::E2: return "e2";
        case PresetName::E3: return "e3";
        case PresetName::E4: return "e4";
        case PresetName::E5: return "e5";
        case PresetName::E6: return "e6";
        case PresetName::E7: return "e7";
        case PresetName::E8: return "e8";
    }
    return "unknown";
}

std::optional<PresetName> parse_preset_name(std::string_view text) {
    if (text.size() != 2 || std::tolower(static_cast<unsigned char>(text[0])) != 'e') {
        return std::nullopt;
    }
    const char d = text[1];
    if (d < '1' || d > '8') return std::nullopt;
    return static_cast<PresetName>(d - '1');
}

namespace {

// The default window and tick cap are sized for coefficients of 0.02. Both
// scale with the slowest time scale 1 / max(alpha, beta) so a window spans
// the same willingness displacement whatever the coefficients.
ModelConfig with_coefficients(double alpha, double beta) {
    ModelConfig c;
    c.alpha = alpha;
    c.beta = beta;
    const double stretch = 0.02 / std::max(alpha, beta);
    c.stability_window = static_cast<int>(std::lround(c.stability_window * stretch));
    c.max_ticks = static_cast<int>(std::lround(c.max_ticks * stretch));
    return c;
}

}  // namespace

Preset preset(PresetName name) {
    Preset p;
    p.name = name;
    switch (name) {
        case PresetName::E1:
            p.title = "media only";
            p.conditions = {{"media-only", with_coefficients(0.02, 0.0)}};
            p.analysis = Analysis::LinearGrowth;
            break;
        case PresetName::E2:
            p.title = "groups only";
            p.conditions = {{"group-only", with_coefficients(0.0, 0.02)}};
            p.analysis = Analysis::ConvergenceComparison;
            break;
        case PresetName::E3:
            p.title = "strong media, alpha/beta = 10";
            p.conditions = {{"strong-media", with_coefficients(0.02, 0.002)}};
            p.analysis = Analysis::ConvergenceComparison;
            break;
        case PresetName::E4:
            p.title = "strong groups, alpha/beta = 0.1";
            p.conditions = {{"strong-groups", with_coefficients(0.002, 0.02)}};
            p.analysis = Analysis::ConvergenceComparison;
            break;
        case PresetName::E5:
            p.title = "group reinforcement under strong media";
            p.conditions = {{"control", with_coefficients(0.002, 0.0001)},
                            {"experimental", with_coefficients(0.002, 0.0005)}};
            p.analysis = Analysis::ConvergenceComparison;
            break;
        case PresetName::E6: {
            p.title = "vision sweep";
            for (double v : {2.0, 4.0, 6.0}) {
                auto c = with_coefficients(0.002, 0.0001);
                c.vision_radius = v;
                p.conditions.push_back({"vision-" + std::to_string(static_cast<int>(v)), c});
            }
            p.analysis = Analysis::ConvergenceComparison;
            p.notes.push_back(
                "ANOVA df are (k-1, N-k) = (2, 297) for 3 groups of 100 runs; "
                "an F(1, 298) figure is inconsistent with this design");
            break;
        }
        case PresetName::E7: {
            p.title = "population sweep";
            for (int n : {1000, 1500, 2000}) {
                auto c = with_coefficients(0.002, 0.0001);
                c.population = n;
                p.conditions.push_back({"population-" + std::to_string(n), c});
            }
            p.analysis = Analysis::ConvergenceComparison;
            p.notes.push_back(
                "ANOVA df are (k-1, N-k) = (2, 297) for 3 groups of 100 runs; "
                "an F(1, 298) figure is inconsistent with this design");
            break;
        }
        case PresetName::E8:
            p.title = "rate of falling silent over time, strong media runs";
            p.conditions = {{"strong-media", with_coefficients(0.02, 0.002)}};
            p.analysis = Analysis::RateDecay;
            break;
    }
    return p;
}

Preset preset(std::string_view name) {
    const auto parsed = parse_preset_name(name);
    if (!parsed) {
        throw ExperimentError(ExperimentErrorCode::UnknownPreset,
                              "unknown preset '" + std::string(name) + "'");
    }
    return preset(*parsed);
}

std::vector<ReplicationSet> run_preset(const Preset& p, std::size_t reps, std::uint64_t base_seed,
                                       unsigned threads) {
    std::vector<ReplicationSet> sets;
    sets.reserve(p.conditions.size());
    for (const auto& c : p.conditions) {
        sets.push_back(run_replications(c.config, reps, base_seed, threads, c.label));
    }
    return sets;
}

PooledSeries growth_phase_series(const ReplicationSet& set, double cutoff_fraction) {
    PooledSeries out;
    for (const auto& r : set.results) {
        const double cutoff = cutoff_fraction * r.population;
        for (std::size_t k = 0; k < r.silent_count.size(); ++k) {
            if (static_cast<double>(r.silent_count[k]) >= cutoff) break;
            out.tick.push_back(static_cast<double>(r.start_tick) + static_cast<double>(k));
            out.value.push_back(r.silent_count[k]);
        }
    }
    return out;
}

RateDecay new_silent_series(const ReplicationSet& set) {
    RateDecay out;
    std::set<int> distinct;
    for (const auto& r : set.results) {
        for (std::size_t k = 1; k < r.new_silent.size(); ++k) {
            const int tick = r.start_tick + static_cast<int>(k);
            distinct.insert(tick);
            out.series.tick.push_back(tick);
            out.series.value.push_back(r.new_silent[k]);
        }
    }
    if (distinct.size() < 3) {
        throw stats::StatsError(stats::StatsErrorCode::InsufficientData,
                                "need at least 3 distinct ticks");
    }
    out.r = stats::pearson_r(out.series.tick, out.series.value);
    return out;
}

namespace {

ConditionSummary summarize_condition(const ReplicationSet& set) {
    ConditionSummary s;
    s.label = set.label;
    s.runs = set.results.size();
    for (const auto& r : set.results) {
        if (r.non_converged) {
            ++s.non_converged;
        } else {
            s.convergence_ticks.push_back(r.convergence_tick);
        }
        switch (r.outcome) {
            case Outcome::Silence: ++s.silence; break;
            case Outcome::Speaking: ++s.speaking; break;
            case Outcome::Tie: ++s.tie; break;
        }
    }
    if (s.convergence_ticks.empty()) {
        throw ExperimentError(ExperimentErrorCode::NoConvergedRuns,
                              "condition '" + s.label + "' has no converged runs");
    }
    s.mean_convergence = stats::mean(s.convergence_ticks);
    s.sd_convergence = s.convergence_ticks.size() < 2
                           ? std::numeric_limits<double>::quiet_NaN()
                           : stats::mean_sd(s.convergence_ticks).sd;
    return s;
}

// Runs `test`, recording a note instead of a result when the data cannot
// support it.
template <typename Fn>
void try_test(ExperimentSummary& summary, const std::string& label, Fn&& test) {
    try {
        summary.tests.push_back({label, test()});
    } catch (const stats::StatsError& e) {
        summary.notes.push_back(label + ": test skipped, " + e.what());
    }
}

}  // namespace

ExperimentSummary summarize(std::span<const ReplicationSet> sets, Analysis analysis) {
    if (sets.empty()) throw ExperimentError(ExperimentErrorCode::EmptyInput, "no replication sets");

    ExperimentSummary summary;
    for (const auto& set : sets) summary.conditions.push_back(summarize_condition(set));

    const auto growth = [&](const ReplicationSet& set) {
        try_test(summary, set.label, [&] {
            const auto series = growth_phase_series(set);
            return stats::linreg_r2(series.tick, series.value).stat();
        });
    };
    const auto decay = [&](const ReplicationSet& set) {
        try_test(summary, set.label, [&] { return new_silent_series(set).r; });
    };

    switch (analysis) {
        case Analysis::ConvergenceComparison: {
            const auto& c = summary.conditions;
            if (c.size() == 2) {
                try_test(summary, c[0].label + " vs " + c[1].label, [&] {
                    return stats::welch_t(c[0].convergence_ticks, c[1].convergence_ticks);
                });
            } else if (c.size() >= 3) {
                std::vector<std::vector<double>> groups;
                for (const auto& s : c) groups.push_back(s.convergence_ticks);
                try_test(summary, "all", [&] { return stats::anova_oneway(groups); });
            }
            break;
        }
        case Analysis::LinearGrowth:
            for (const auto& set : sets) growth(set);
            break;
        case Analysis::RateDecay:
            for (const auto& set : sets) decay(set);
            break;
        case Analysis::Trends:
            for (const auto& set : sets) {
                growth(set);
                decay(set);
            }
            break;
    }
    return summary;
}

}  // namespace sos
