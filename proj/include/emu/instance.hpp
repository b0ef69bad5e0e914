#pragma once

#include "emu/fleet.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace emu {

enum class DemandLabel { Usual, SpringFestival, SummerHoliday, NationalDay };

[[nodiscard]] std::string_view to_string(DemandLabel label);
[[nodiscard]] std::optional<DemandLabel> parse_demand_label(std::string_view text);

struct DemandPeriod {
    DemandLabel label = DemandLabel::Usual;
    std::vector<Day> days;
    int min_available = 0;
};

/// Maximum number of train-sets simultaneously in the workshop, per level.
struct WorkshopCapacity {
    int third = 0;
    int fourth = 0;
    int fifth = 0;

    [[nodiscard]] int of(MaintenanceLevel level) const;
    friend bool operator==(const WorkshopCapacity&, const WorkshopCapacity&) = default;
};

struct Instance {
    std::string name;
    /// ISO-8601 date of day 1.
    std::string start_date;
    int horizon_days = 0;
    std::vector<TrainSetType> types;
    std::vector<TrainSet> fleet;
    std::vector<DemandPeriod> demand_periods;
    WorkshopCapacity capacities;
    MaintenanceDurations durations;

    [[nodiscard]] int fleet_size() const { return static_cast<int>(fleet.size()); }
    [[nodiscard]] const TrainSet* find_train_set(std::string_view id) const;
    [[nodiscard]] std::optional<std::size_t> index_of_train_set(std::string_view id) const;

    /// Minimum available count indexed by day - 1.
    [[nodiscard]] std::vector<int> min_available_by_day() const;
};

/// Full semantic check. Throws InstanceError naming the violated invariant.
void check_instance(const Instance& instance);

/// Non-fatal findings: mileage-dominance violations and similar.
[[nodiscard]] std::vector<std::string> instance_warnings(const Instance& instance);

}  // namespace emu
