#include "emu/instance.hpp"

#include "emu/errors.hpp"

#include <set>

namespace emu {

std::string_view to_string(DemandLabel label) {
    switch (label) {
        case DemandLabel::Usual: return "usual";
        case DemandLabel::SpringFestival: return "spring_festival";
        case DemandLabel::SummerHoliday: return "summer_holiday";
        case DemandLabel::NationalDay: return "national_day";
    }
    return "?";
}

std::optional<DemandLabel> parse_demand_label(std::string_view text) {
    for (auto label : {DemandLabel::Usual, DemandLabel::SpringFestival, DemandLabel::SummerHoliday,
                       DemandLabel::NationalDay}) {
        if (to_string(label) == text) return label;
    }
    return std::nullopt;
}

int WorkshopCapacity::of(MaintenanceLevel level) const {
    switch (level) {
        case MaintenanceLevel::Third: return third;
        case MaintenanceLevel::Fourth: return fourth;
        case MaintenanceLevel::Fifth: return fifth;
    }
    return third;
}

const TrainSet* Instance::find_train_set(std::string_view id) const {
    for (const auto& ts : fleet) {
        if (ts.id == id) return &ts;
    }
    return nullptr;
}

std::optional<std::size_t> Instance::index_of_train_set(std::string_view id) const {
    for (std::size_t i = 0; i < fleet.size(); ++i) {
        if (fleet[i].id == id) return i;
    }
    return std::nullopt;
}

std::vector<int> Instance::min_available_by_day() const {
    std::vector<int> need(static_cast<std::size_t>(horizon_days), 0);
    for (const auto& period : demand_periods) {
        for (Day day : period.days) {
            if (day >= 1 && day <= horizon_days) need[static_cast<std::size_t>(day - 1)] = period.min_available;
        }
    }
    return need;
}

void check_instance(const Instance& instance) {
    if (instance.horizon_days < 1) throw InstanceError("horizon_days must be >= 1");
    if (instance.fleet.empty()) throw InstanceError("fleet must be non-empty");
    for (const auto& type : instance.types) check_type(type);

    std::set<std::string> ids;
    for (const auto& ts : instance.fleet) {
        if (!ids.insert(ts.id).second) throw InstanceError("duplicate train-set id " + ts.id);
        check_type(ts.type);
        check_train_set(ts);
    }

    if (instance.capacities.third < 0 || instance.capacities.fourth < 0 || instance.capacities.fifth < 0) {
        throw InstanceError("workshop capacities must be >= 0");
    }
    for (auto level : kAllLevels) {
        if (instance.durations.of(level) < 1) {
            throw InstanceError(std::string(to_string(level)) + " duration must be >= 1 day");
        }
    }

    // Demand periods must partition 1..K.
    std::vector<int> covered(static_cast<std::size_t>(instance.horizon_days), 0);
    for (const auto& period : instance.demand_periods) {
        if (period.min_available < 0) throw InstanceError("min_available must be >= 0");
        for (Day day : period.days) {
            if (day < 1 || day > instance.horizon_days) {
                throw InstanceError("demand period " + std::string(to_string(period.label)) + " day " +
                                    std::to_string(day) + " lies outside the horizon");
            }
            if (++covered[static_cast<std::size_t>(day - 1)] > 1) {
                throw InstanceError("demand periods must partition the horizon: day " +
                                    std::to_string(day) + " is covered twice");
            }
        }
    }
    for (std::size_t i = 0; i < covered.size(); ++i) {
        if (covered[i] == 0) {
            throw InstanceError("demand periods must partition the horizon: day " +
                                std::to_string(i + 1) + " is not covered");
        }
    }
}

std::vector<std::string> instance_warnings(const Instance& instance) {
    std::vector<std::string> warnings;
    std::set<std::string> seen;
    for (const auto& ts : instance.fleet) {
        if (!seen.insert(ts.type.name).second) continue;
        if (!mileage_trigger_dominates(ts.type)) {
            warnings.push_back("type " + ts.type.name +
                               ": third-level mileage base is not reached before the calendar "
                               "trigger; day-based limits are not enforced");
        }
    }
    return warnings;
}

}  // namespace emu
