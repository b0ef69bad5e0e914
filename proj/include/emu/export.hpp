#pragma once

#include "emu/evaluator.hpp"
#include "emu/instance.hpp"
#include "emu/instance_io.hpp"
#include "emu/solver.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace emu {

/// RFC-4180 field: quoted only when it contains a comma, quote, CR or LF.
[[nodiscard]] std::string csv_field(std::string_view text);

/// train_set_id,event_index,level,dispatch_day,dispatch_date,return_day,mileage_at_dispatch,mileage_slack_km
/// mileage_slack_km is base mileage minus dispatch mileage (positive when maintained early).
[[nodiscard]] std::string schedule_csv(const Schedule& schedule, const Instance& instance);
/// day,available,third,fourth,fifth
[[nodiscard]] std::string daily_counts_csv(const DailyCounts& counts);
/// generation,cooling_step,temperature,best_penalized
[[nodiscard]] std::string trace_csv(const std::vector<TracePoint>& trace);

/// Writes schedule.csv, solution.json and daily_counts.csv into `directory` (created if needed).
void export_schedule(const Solution& solution, const Instance& instance, const std::filesystem::path& directory,
                     const PenaltyWeights& weights, const SolutionInfo& info);

/// One lane per train-set over a day-proportional axis, with demand periods shaded.
/// Output is byte-identical for identical input.
[[nodiscard]] std::string render_gantt(const Schedule& schedule, const Instance& instance);

}  // namespace emu
