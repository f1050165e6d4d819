#include "sos/output.hpp"

#include <cstdio>

namespace sos::csv {

std::string format_real(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

void write_run(std::ostream& os, const RunResult& r) {
    os << "tick,silent_count,new_silent,new_speaking,mean_w\n";
    for (std::size_t k = 0; k < r.silent_count.size(); ++k) {
        os << r.start_tick + static_cast<int>(k) << ',' << r.silent_count[k] << ','
           << r.new_silent[k] << ',' << r.new_speaking[k] << ',' << format_real(r.mean_w[k])
           << '\n';
    }
}

void write_summary(std::ostream& os, const ReplicationSet& set) {
    os << "rep,seed,convergence_tick,non_converged,outcome,final_silent_fraction\n";
    for (std::size_t i = 0; i < set.results.size(); ++i) {
        const auto& r = set.results[i];
        os << i << ',' << set.seeds[i] << ',' << r.convergence_tick << ','
           << (r.non_converged ? 1 : 0) << ',' << to_string(r.outcome) << ','
           << format_real(r.final_silent_fraction) << '\n';
    }
}

void write_experiment(std::ostream& os, const ExperimentSummary& summary) {
    os << "condition,stat_kind,statistic,df,exceeds_p001\n";
    for (const auto& t : summary.tests) {
        std::string df = format_real(t.stat.df);
        if (t.stat.df2) df += "/" + format_real(*t.stat.df2);
        os << t.condition << ',' << stats::to_string(t.stat.kind) << ','
           << format_real(t.stat.statistic) << ',' << df << ',' << (t.stat.exceeds_p001 ? 1 : 0)
           << '\n';
    }
}

void write_snapshot(std::ostream& os, const WorldState& world, double threshold) {
    os << "agent_id,x,y,w,speaking,media_exposure\n";
    for (std::size_t i = 0; i < world.size(); ++i) {
        const auto& p = world.positions[i];
        os << i << ',' << p.x << ',' << p.y << ',' << format_real(world.w[i]) << ','
           << (world.w[i] > threshold ? 1 : 0) << ',' << world.exposure(i) << '\n';
    }
}

}  // namespace sos::csv
