#pragma once

#include "emu/instance.hpp"
#include "emu/paths.hpp"
#include "emu/solver.hpp"

#include <filesystem>
#include <set>
#include <string>
#include <string_view>

namespace emu::testing {

[[nodiscard]] std::filesystem::path data_path(std::string_view file);
[[nodiscard]] Instance load_fixture(std::string_view name);

/// Small type with the standard 1:2:4 base ratio, scaled so several events fit in a few weeks.
[[nodiscard]] TrainSetType toy_type(Kilometers daily, Kilometers third_base, Kilometers float_low,
                                    Kilometers float_high, MaintenanceDurations durations);

[[nodiscard]] TrainSetType random_toy_type(Rng& rng);
/// Random valid train-set; about one in five starts in the workshop.
[[nodiscard]] TrainSet random_train_set(const TrainSetType& type, std::string id, Rng& rng);

/// Instance around the given fleet: one usual period with `min_available`, all capacities `capacity`.
[[nodiscard]] Instance make_instance(std::vector<TrainSet> fleet, int horizon_days, int min_available, int capacity);

[[nodiscard]] std::string signature(const FeasiblePath& path);
[[nodiscard]] std::set<std::string> signatures(const std::vector<FeasiblePath>& paths);

}  // namespace emu::testing
