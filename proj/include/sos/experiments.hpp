#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sos/config.hpp"
#include "sos/dynamics.hpp"
#include "sos/stats.hpp"

namespace sos {

/// k runs of one condition. Run i uses seed base_seed + i.
struct ReplicationSet {
    std::string label;
    ModelConfig config;
    std::vector<std::uint64_t> seeds;
    std::vector<RunResult> results;
};

/// Runs k replications, spread over `threads` workers (0 picks the hardware
/// concurrency). Results are stored by replication index, so the set does
/// not depend on scheduling.
ReplicationSet run_replications(const ModelConfig& config, std::size_t k, std::uint64_t base_seed,
                                unsigned threads = 0, std::string label = {});

enum class PresetName { E1, E2, E3, E4, E5, E6, E7, E8 };

std::string_view to_string(PresetName name);
std::optional<PresetName> parse_preset_name(std::string_view text);

/// Which test summarize() runs over the conditions.
enum class Analysis {
    ConvergenceComparison,  // Welch t for 2 conditions, one-way ANOVA for 3+
    LinearGrowth,           // OLS of pooled silent_count on tick, growth phase only
    RateDecay,              // Pearson r of pooled new_silent on tick
    Trends,                 // both LinearGrowth and RateDecay, per condition
};

struct Condition {
    std::string label;
    ModelConfig config;
};

struct Preset {
    PresetName name = PresetName::E1;
    std::string title;
    std::vector<Condition> conditions;
    Analysis analysis = Analysis::ConvergenceComparison;
    std::size_t replications = 100;
    std::vector<std::string> notes;
};

Preset preset(PresetName name);

enum class ExperimentErrorCode { NoConvergedRuns, UnknownPreset, EmptyInput };

class ExperimentError : public std::runtime_error {
public:
    ExperimentError(ExperimentErrorCode code, const std::string& detail);

    [[nodiscard]] ExperimentErrorCode code() const noexcept { return code_; }

private:
    ExperimentErrorCode code_;
};

/// Throws ExperimentError(UnknownPreset) for names outside e1..e8.
Preset preset(std::string_view name);

/// Runs every condition of `p` with the same seed range.
std::vector<ReplicationSet> run_preset(const Preset& p, std::size_t reps, std::uint64_t base_seed,
                                       unsigned threads = 0);

struct ConditionSummary {
    std::string label;
    std::size_t runs = 0;
    std::size_t non_converged = 0;
    std::vector<double> convergence_ticks;  // converged runs only
    double mean_convergence = 0.0;
    double sd_convergence = 0.0;  // NaN with fewer than 2 converged runs
    std::size_t silence = 0;
    std::size_t speaking = 0;
    std::size_t tie = 0;

    [[nodiscard]] double silence_fraction() const {
        return runs == 0 ? 0.0 : static_cast<double>(silence) / static_cast<double>(runs);
    }
};

struct LabeledStat {
    std::string condition;
    stats::StatResult stat;
};

struct ExperimentSummary {
    std::vector<ConditionSummary> conditions;
    std::vector<LabeledStat> tests;
    std::vector<std::string> notes;
};

/// Per-condition convergence statistics and outcome counts plus the tests
/// selected by `analysis`. Non-converged runs are left out of the means but
/// counted in the outcome table. Throws ExperimentError(NoConvergedRuns)
/// when a condition has no converged run.
ExperimentSummary summarize(std::span<const ReplicationSet> sets, Analysis analysis);

struct PooledSeries {
    std::vector<double> tick;
    std::vector<double> value;
};

/// (tick, silent_count) pairs from every run, kept while silent_count stays
/// below cutoff_fraction of the population.
PooledSeries growth_phase_series(const ReplicationSet& set, double cutoff_fraction = 0.95);

struct RateDecay {
    PooledSeries series;
    stats::StatResult r;
};

/// (tick, new_silent) pairs for ticks 1..end of every run and their signed
/// Pearson correlation. Throws StatsError on fewer than 3 distinct ticks or a
/// constant series.
RateDecay new_silent_series(const ReplicationSet& set);

}  // namespace sos
