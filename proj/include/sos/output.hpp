#pragma once

#include <ostream>
#include <string>

#include "sos/dynamics.hpp"
#include "sos/experiments.hpp"
#include "sos/world.hpp"

namespace sos::csv {

/// Reals use 9 significant digits; booleans are 0/1; lines end in LF.
std::string format_real(double v);

/// tick,silent_count,new_silent,new_speaking,mean_w
void write_run(std::ostream& os, const RunResult& result);

/// rep,seed,convergence_tick,non_converged,outcome,final_silent_fraction
void write_summary(std::ostream& os, const ReplicationSet& set);

/// condition,stat_kind,statistic,df,exceeds_p001
/// Two-parameter df are written as "df1/df2".
void write_experiment(std::ostream& os, const ExperimentSummary& summary);

/// agent_id,x,y,w,speaking,media_exposure
void write_snapshot(std::ostream& os, const WorldState& world, double threshold);

}  // namespace sos::csv
