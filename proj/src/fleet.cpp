#include "emu/fleet.hpp"

#include "emu/errors.hpp"

#include <algorithm>
#include <cstdlib>

namespace emu {
namespace {

// Floor and ceiling of a / b for b > 0, exact for negative numerators.
Kilometers floor_div(Kilometers a, Kilometers b) {
    Kilometers q = a / b;
    if ((a % b != 0) && (a < 0)) --q;
    return q;
}

Kilometers ceil_div(Kilometers a, Kilometers b) {
    Kilometers q = a / b;
    if ((a % b != 0) && (a > 0)) ++q;
    return q;
}

TrainSetType make_bundled(std::string name, Kilometers daily) {
    return TrainSetType{std::move(name), daily, standard_regulations()};
}

}  // namespace

std::optional<MaintenanceLevel> level_from_row(int row) {
    switch (row) {
        case 2: return MaintenanceLevel::Third;
        case 3: return MaintenanceLevel::Fourth;
        case 4: return MaintenanceLevel::Fifth;
        default: return std::nullopt;
    }
}

std::string_view to_string(MaintenanceLevel level) {
    switch (level) {
        case MaintenanceLevel::Third: return "third";
        case MaintenanceLevel::Fourth: return "fourth";
        case MaintenanceLevel::Fifth: return "fifth";
    }
    return "?";
}

std::optional<MaintenanceLevel> parse_level(std::string_view text) {
    for (auto level : kAllLevels) {
        if (to_string(level) == text) return level;
    }
    return std::nullopt;
}

int MaintenanceDurations::of(MaintenanceLevel level) const {
    switch (level) {
        case MaintenanceLevel::Third: return third;
        case MaintenanceLevel::Fourth: return fourth;
        case MaintenanceLevel::Fifth: return fifth;
    }
    return third;
}

MaintenanceLevel level_at(int cycle_position) {
    if (cycle_position < 0 || cycle_position >= kCycleLength) {
        throw InstanceError("cycle_position must be in {0,1,2,3}, got " +
                            std::to_string(cycle_position));
    }
    return kMaintenanceCycle[static_cast<std::size_t>(cycle_position)];
}

int advance_cycle(int cycle_position) { return (cycle_position + 1) % kCycleLength; }

MaintenanceLevel next_level(const TrainSet& train_set) { return level_at(train_set.cycle_position); }

KilometerWindow due_window_km(const TrainSet& train_set) {
    return train_set.type.regulation(next_level(train_set)).window();
}

DayWindow due_window_days(const TrainSetType& type, MaintenanceLevel level,
                          Kilometers event_start_mileage) {
    const auto window = type.regulation(level).window();
    const Kilometers daily = type.daily_mileage;
    const auto earliest = ceil_div(window.low - event_start_mileage, daily) + 1;
    const auto latest = floor_div(window.high - event_start_mileage, daily) + 1;
    DayWindow days{static_cast<Day>(std::max<Kilometers>(earliest, 1)), static_cast<Day>(latest)};
    if (days.empty()) {
        const std::string prefix = "type " + type.name + ": mileage " + std::to_string(event_start_mileage) + " km ";
        if (event_start_mileage > window.high) {
            throw InstanceError(prefix + "already exceeds the " + std::string(to_string(level)) +
                                "-level upper bound " + std::to_string(window.high) + " km");
        }
        throw InstanceError(prefix + "steps over the " + std::string(to_string(level)) + "-level range [" +
                            std::to_string(window.low) + ", " + std::to_string(window.high) + "] km at " +
                            std::to_string(daily) + " km/day");
    }
    return days;
}

DayWindow due_window_days(const TrainSet& train_set, Kilometers event_start_mileage) {
    return due_window_days(train_set.type, next_level(train_set), event_start_mileage);
}

std::array<MaintenanceRegulation, 3> standard_regulations(const MaintenanceDurations& durations) {
    return {{
        {MaintenanceLevel::Third, 600'000, 50'000, 20'000, durations.third, 548},
        {MaintenanceLevel::Fourth, 1'200'000, 100'000, 50'000, durations.fourth, 1096},
        {MaintenanceLevel::Fifth, 2'400'000, 100'000, 100'000, durations.fifth, 2192},
    }};
}

const std::vector<TrainSetType>& bundled_types() {
    static const std::vector<TrainSetType> types = {
        make_bundled("CRH2A", 1500),   make_bundled("CRH2B", 1500),
        make_bundled("CRH2C-1", 1600), make_bundled("CRH2C-2", 1800),
        make_bundled("CRH380A", 1900), make_bundled("CRH380AL", 1900),
    };
    return types;
}

std::optional<TrainSetType> find_bundled_type(std::string_view name) {
    for (const auto& type : bundled_types()) {
        if (type.name == name) return type;
    }
    return std::nullopt;
}

bool mileage_trigger_dominates(const TrainSetType& type) {
    const auto& third = type.regulation(MaintenanceLevel::Third);
    const int limit = third.day_limit > 0 ? third.day_limit : kThirdLevelDayLimit;
    // base / daily < limit, in integers
    return third.base_mileage < static_cast<Kilometers>(limit) * type.daily_mileage;
}

void check_type(const TrainSetType& type) {
    const std::string who = "type " + type.name + ": ";
    if (type.name.empty()) throw InstanceError("type name must be non-empty");
    if (type.daily_mileage <= 0) throw InstanceError(who + "daily_mileage must be > 0");
    for (auto level : kAllLevels) {
        const auto& reg = type.regulation(level);
        const std::string lvl(to_string(level));
        if (reg.level != level) throw InstanceError(who + "regulation slot mismatch for " + lvl);
        if (reg.float_low < 0 || reg.float_high < 0) {
            throw InstanceError(who + lvl + " floating range must be >= 0");
        }
        if (reg.base_mileage - reg.float_low <= 0) {
            throw InstanceError(who + lvl + " requires base_mileage - float_low > 0");
        }
        if (reg.duration_days < 1) throw InstanceError(who + lvl + " duration must be >= 1 day");
        // After a reset the counter is 0, d, 2d, ...; one of those must land in the range.
        (void)due_window_days(type, level, 0);
    }
    const auto third = type.regulation(MaintenanceLevel::Third).base_mileage;
    if (type.regulation(MaintenanceLevel::Fourth).base_mileage != 2 * third ||
        type.regulation(MaintenanceLevel::Fifth).base_mileage != 4 * third) {
        throw InstanceError(who + "base mileages must follow 1x / 2x / 4x of the third level");
    }
}

void check_train_set(const TrainSet& ts) {
    const std::string who = "train-set " + ts.id + ": ";
    if (ts.id.empty()) throw InstanceError("train-set id must be non-empty");
    if (ts.cycle_position < 0 || ts.cycle_position >= kCycleLength) {
        throw InstanceError(who + "cycle_position must be in {0,1,2,3}");
    }
    const int previous = (ts.cycle_position + kCycleLength - 1) % kCycleLength;
    if (level_at(previous) != ts.last_level) {
        throw InstanceError(who + "last_level " + std::string(to_string(ts.last_level)) +
                            " does not precede cycle_position " + std::to_string(ts.cycle_position));
    }
    const bool mileage_negative = ts.initial_mileage < 0;
    const bool days_negative = ts.initial_days < 0;
    if (mileage_negative != days_negative) {
        throw InstanceError(who + "TrainSet invariant violated: sign of initial_days must match "
                                  "initial_mileage");
    }
    if (mileage_negative) {
        if (ts.initial_mileage != static_cast<Kilometers>(ts.initial_days) * ts.type.daily_mileage) {
            throw InstanceError(who + "TrainSet invariant violated: in-shop initial_mileage must "
                                      "equal initial_days x daily_mileage");
        }
    } else if (ts.initial_mileage > due_window_km(ts).high) {
        throw InstanceError(who + "TrainSet invariant violated: initial_mileage exceeds the upper "
                                  "bound of the next-due level");
    } else {
        try {
            (void)due_window_days(ts, ts.initial_mileage);
        } catch (const InstanceError& e) {
            throw InstanceError(who + "TrainSet invariant violated: no day in the next-due window (" + e.what() +
                                ")");
        }
    }
}

}  // namespace emu
