#include "sos/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>

#include "sos/config_io.hpp"
#include "sos/dynamics.hpp"
#include "sos/experiments.hpp"
#include "sos/output.hpp"

namespace fs = std::filesystem;

namespace sos::cli {

namespace {

struct CommonOptions {
    std::string config_path;
    std::string out_dir;
    std::optional<std::uint64_t> seed;
    std::size_t reps = 100;
    unsigned threads = 0;
};

ModelConfig load_config(const std::string& path) {
    if (path.empty()) return ModelConfig{};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read config file '" + path + "'");
    const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    try {
        return parse_config(text);
    } catch (const ConfigParseError& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

fs::path prepare_out_dir(const std::string& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) {
        throw std::runtime_error("cannot create output directory '" + dir + "'");
    }
    return dir;
}

template <typename Writer>
void write_file(const fs::path& path, Writer&& writer) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot write '" + path.string() + "'");
    writer(os);
    os.flush();
    if (!os) throw std::runtime_error("write failed for '" + path.string() + "'");
}

// Lowercase alphanumerics, everything else becomes '-'.
std::string file_label(std::string_view text) {
    std::string out;
    for (char ch : text) {
        const auto c = static_cast<unsigned char>(ch);
        out.push_back(std::isalnum(c) ? static_cast<char>(std::tolower(c)) : (c == '.' ? '.' : '-'));
    }
    return out;
}

void print_summary(std::ostream& out, const ExperimentSummary& summary) {
    for (const auto& c : summary.conditions) {
        out << c.label << ": runs=" << c.runs << " converged=" << c.convergence_ticks.size()
            << " mean_convergence=" << csv::format_real(c.mean_convergence)
            << " sd=" << csv::format_real(c.sd_convergence) << " silence=" << c.silence
            << " speaking=" << c.speaking << " tie=" << c.tie << '\n';
    }
    for (const auto& t : summary.tests) {
        out << t.condition << ": " << stats::to_string(t.stat.kind) << " = "
            << csv::format_real(t.stat.statistic) << " df=" << csv::format_real(t.stat.df);
        if (t.stat.df2) out << '/' << csv::format_real(*t.stat.df2);
        out << " p<0.001: " << (t.stat.exceeds_p001 ? "yes" : "no") << '\n';
    }
    for (const auto& n : summary.notes) out << "note: " << n << '\n';
}

void write_bundle(const fs::path& dir, std::span<const ReplicationSet> sets,
                  const ExperimentSummary& summary) {
    if (sets.size() == 1) {
        write_file(dir / "summary.csv", [&](std::ostream& os) { csv::write_summary(os, sets[0]); });
    } else {
        for (const auto& set : sets) {
            write_file(dir / ("summary_" + file_label(set.label) + ".csv"),
                       [&](std::ostream& os) { csv::write_summary(os, set); });
        }
    }
    write_file(dir / "experiment.csv",
               [&](std::ostream& os) { csv::write_experiment(os, summary); });
    if (!summary.notes.empty()) {
        write_file(dir / "notes.txt", [&](std::ostream& os) {
            for (const auto& n : summary.notes) os << n << '\n';
        });
    }
}

void command_run(const CommonOptions& opt, int snapshot_every, std::ostream& out) {
    auto config = load_config(opt.config_path);
    if (opt.seed) config.seed = *opt.seed;
    const auto dir = prepare_out_dir(opt.out_dir);

    std::map<int, std::string> snapshots;
    TickObserver observer;
    if (snapshot_every > 0) {
        observer = [&](const WorldState& world) {
            if (world.tick % snapshot_every != 0) return;
            std::ostringstream os;
            csv::write_snapshot(os, world, config.threshold);
            snapshots[world.tick] = os.str();
        };
    }
    auto world = init_world(config, config.seed);
    const auto result = run_sim(world, config, observer);
    if (snapshot_every > 0 && !snapshots.contains(world.tick)) {
        std::ostringstream os;
        csv::write_snapshot(os, world, config.threshold);
        snapshots[world.tick] = os.str();
    }

    write_file(dir / "run.csv", [&](std::ostream& os) { csv::write_run(os, result); });
    for (const auto& [tick, text] : snapshots) {
        write_file(dir / ("snapshot_t" + std::to_string(tick) + ".csv"),
                   [&](std::ostream& os) { os << text; });
    }
    out << "seed=" << config.seed << " convergence_tick=" << result.convergence_tick
        << " non_converged=" << (result.non_converged ? 1 : 0)
        << " outcome=" << to_string(result.outcome)
        << " final_silent_fraction=" << csv::format_real(result.final_silent_fraction) << '\n';
}

void command_experiment(const CommonOptions& opt, std::ostream& out) {
    const auto config = load_config(opt.config_path);
    const auto dir = prepare_out_dir(opt.out_dir);
    const std::vector<ReplicationSet> sets{
        run_replications(config, opt.reps, opt.seed.value_or(config.seed), opt.threads, "experiment")};
    const auto summary = summarize(sets, Analysis::Trends);
    write_bundle(dir, sets, summary);
    print_summary(out, summary);
}

void command_preset(const CommonOptions& opt, const std::string& name, std::ostream& out) {
    const auto p = preset(std::string_view(name));
    const auto dir = prepare_out_dir(opt.out_dir);
    const auto sets = run_preset(p, opt.reps, opt.seed.value_or(1), opt.threads);
    auto summary = summarize(sets, p.analysis);
    summary.notes.insert(summary.notes.begin(), p.notes.begin(), p.notes.end());
    write_bundle(dir, sets, summary);
    out << "preset " << to_string(p.name) << ": " << p.title << '\n';
    print_summary(out, summary);
}

void command_sweep(const CommonOptions& opt, const std::string& vary, std::ostream& out) {
    const auto eq = vary.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 >= vary.size()) {
        throw std::runtime_error("--vary expects key=v1,v2,...");
    }
    const auto key = vary.substr(0, eq);
    std::vector<std::string> values;
    // Values are split on commas, so list-valued keys cannot be swept.
    std::stringstream ss(vary.substr(eq + 1));
    for (std::string v; std::getline(ss, v, ',');) values.push_back(v);

    const auto base = load_config(opt.config_path);
    const auto dir = prepare_out_dir(opt.out_dir);
    std::vector<ReplicationSet> sets;
    for (const auto& v : values) {
        auto config = base;
        try {
            apply_setting(config, key, v);
        } catch (const ConfigParseError& e) {
            throw std::runtime_error(std::string("--vary: ") + e.what());
        }
        sets.push_back(run_replications(config, opt.reps, opt.seed.value_or(base.seed),
                                        opt.threads, key + "-" + v));
    }
    const auto summary = summarize(sets, Analysis::ConvergenceComparison);
    for (const auto& set : sets) {
        write_file(dir / ("summary_" + file_label(set.label) + ".csv"),
                   [&](std::ostream& os) { csv::write_summary(os, set); });
    }
    write_file(dir / "experiment.csv",
               [&](std::ostream& os) { csv::write_experiment(os, summary); });
    print_summary(out, summary);
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Spiral-of-silence agent-based simulation", "sos"};
    app.require_subcommand(1);

    CommonOptions opt;
    int snapshot_every = 0;
    std::string preset_name;
    std::string vary;

    auto add_threads = [&](CLI::App* sub) {
        sub->add_option("--threads", opt.threads, "Worker threads (0 = all cores)");
    };

    auto* run = app.add_subcommand("run", "Run one simulation and write run.csv");
    run->add_option("--config", opt.config_path, "Config file")->check(CLI::ExistingFile);
    run->add_option("--seed", opt.seed, "Seed (defaults to the config seed)");
    run->add_option("--snapshot-every", snapshot_every, "Write snapshot_t<k>.csv every K ticks")
        ->check(CLI::PositiveNumber);
    run->add_option("--out", opt.out_dir, "Output directory")->required();

    auto* experiment = app.add_subcommand("experiment", "Replicate one condition");
    experiment->add_option("--config", opt.config_path, "Config file")->check(CLI::ExistingFile);
    experiment->add_option("--reps", opt.reps, "Replications")->check(CLI::PositiveNumber);
    experiment->add_option("--base-seed", opt.seed, "First seed (defaults to the config seed)");
    experiment->add_option("--out", opt.out_dir, "Output directory")->required();
    add_threads(experiment);

    auto* preset_cmd = app.add_subcommand("preset", "Run a built-in experiment e1..e8");
    preset_cmd->add_option("--name", preset_name, "Preset name, e1..e8")->required();
    preset_cmd->add_option("--reps", opt.reps, "Replications per condition")
        ->check(CLI::PositiveNumber);
    preset_cmd->add_option("--base-seed", opt.seed, "First seed (default 1)");
    preset_cmd->add_option("--out", opt.out_dir, "Output directory")->required();
    add_threads(preset_cmd);

    auto* sweep = app.add_subcommand("sweep", "Replicate a condition per value of one key");
    sweep->add_option("--config", opt.config_path, "Config file")->check(CLI::ExistingFile);
    sweep->add_option("--vary", vary, "key=v1,v2,...")->required();
    sweep->add_option("--reps", opt.reps, "Replications per value")->check(CLI::PositiveNumber);
    sweep->add_option("--base-seed", opt.seed, "First seed (defaults to the config seed)");
    sweep->add_option("--out", opt.out_dir, "Output directory")->required();
    add_threads(sweep);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "sos: error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (*run) {
            command_run(opt, snapshot_every, out);
        } else if (*experiment) {
            command_experiment(opt, out);
        } else if (*preset_cmd) {
            command_preset(opt, preset_name, out);
        } else if (*sweep) {
            command_sweep(opt, vary, out);
        }
    } catch (const std::exception& e) {
        err << "sos: error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace sos::cli
