#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace emu {

using Kilometers = std::int64_t;
/// 1-based day index into the planning horizon.
using Day = int;

enum class MaintenanceLevel { Third = 0, Fourth = 1, Fifth = 2 };

inline constexpr std::array<MaintenanceLevel, 3> kAllLevels = {
    MaintenanceLevel::Third, MaintenanceLevel::Fourth, MaintenanceLevel::Fifth};

/// Repeating order in which a train-set receives major maintenance.
inline constexpr std::array<MaintenanceLevel, 4> kMaintenanceCycle = {
    MaintenanceLevel::Third, MaintenanceLevel::Fourth, MaintenanceLevel::Third,
    MaintenanceLevel::Fifth};

inline constexpr int kCycleLength = static_cast<int>(kMaintenanceCycle.size());

/// Status rows of the time-space network.
inline constexpr int kAvailableRow = 1;
inline constexpr int kStatusRows = 4;

[[nodiscard]] constexpr int index_of(MaintenanceLevel level) { return static_cast<int>(level); }

/// Network row of a maintenance level: Third -> 2, Fourth -> 3, Fifth -> 4.
[[nodiscard]] constexpr int status_row(MaintenanceLevel level) { return index_of(level) + 2; }

[[nodiscard]] std::optional<MaintenanceLevel> level_from_row(int row);

[[nodiscard]] std::string_view to_string(MaintenanceLevel level);
[[nodiscard]] std::optional<MaintenanceLevel> parse_level(std::string_view text);

struct KilometerWindow {
    Kilometers low = 0;
    Kilometers high = 0;

    [[nodiscard]] bool contains(Kilometers km) const { return low <= km && km <= high; }
    friend bool operator==(const KilometerWindow&, const KilometerWindow&) = default;
};

struct DayWindow {
    Day earliest = 1;
    Day latest = 0;

    [[nodiscard]] bool empty() const { return earliest > latest; }
    [[nodiscard]] int width() const { return empty() ? 0 : latest - earliest + 1; }
    friend bool operator==(const DayWindow&, const DayWindow&) = default;
};

struct MaintenanceRegulation {
    MaintenanceLevel level = MaintenanceLevel::Third;
    Kilometers base_mileage = 0;
    Kilometers float_low = 0;
    Kilometers float_high = 0;
    int duration_days = 1;
    /// Calendar trigger in days. Stored for reference, never enforced.
    int day_limit = 0;

    [[nodiscard]] KilometerWindow window() const {
        return {base_mileage - float_low, base_mileage + float_high};
    }
};

/// Per-level workshop occupancy in days.
struct MaintenanceDurations {
    int third = 10;
    int fourth = 25;
    int fifth = 40;

    [[nodiscard]] int of(MaintenanceLevel level) const;
    friend bool operator==(const MaintenanceDurations&, const MaintenanceDurations&) = default;
};

struct TrainSetType {
    std::string name;
    Kilometers daily_mileage = 0;
    std::array<MaintenanceRegulation, 3> regulations{};

    [[nodiscard]] const MaintenanceRegulation& regulation(MaintenanceLevel level) const {
        return regulations[static_cast<std::size_t>(index_of(level))];
    }
    MaintenanceRegulation& regulation(MaintenanceLevel level) {
        return regulations[static_cast<std::size_t>(index_of(level))];
    }
};

struct TrainSet {
    std::string id;
    TrainSetType type;
    /// Mileage since the counter for the next-due level was reset. Negative while
    /// the train-set is still in the workshop at horizon start.
    Kilometers initial_mileage = 0;
    /// Days since reset; negative means that many in-shop days remain.
    int initial_days = 0;
    MaintenanceLevel last_level = MaintenanceLevel::Fifth;
    /// Index into kMaintenanceCycle of the next-due level.
    int cycle_position = 0;

    [[nodiscard]] bool in_workshop_at_start() const { return initial_mileage < 0; }
    [[nodiscard]] int remaining_shop_days() const { return in_workshop_at_start() ? -initial_days : 0; }
};

[[nodiscard]] MaintenanceLevel level_at(int cycle_position);
[[nodiscard]] int advance_cycle(int cycle_position);
[[nodiscard]] MaintenanceLevel next_level(const TrainSet& train_set);

[[nodiscard]] KilometerWindow due_window_km(const TrainSet& train_set);

/// Day window (1-based) in which the mileage counter m + (k-1) * daily lies inside the
/// level's floating range. Earliest is clamped to day 1. Throws InstanceError when the
/// counter already exceeds the upper bound.
[[nodiscard]] DayWindow due_window_days(const TrainSetType& type, MaintenanceLevel level,
                                        Kilometers event_start_mileage);
[[nodiscard]] DayWindow due_window_days(const TrainSet& train_set, Kilometers event_start_mileage);

/// Regulations shared by the bundled CRH2 / CRH380A types.
[[nodiscard]] std::array<MaintenanceRegulation, 3> standard_regulations(
    const MaintenanceDurations& durations = {});

[[nodiscard]] const std::vector<TrainSetType>& bundled_types();
[[nodiscard]] std::optional<TrainSetType> find_bundled_type(std::string_view name);

/// Calendar trigger for the third level (1.5 years).
inline constexpr int kThirdLevelDayLimit = 548;

/// True when the mileage trigger of the third level fires before its calendar trigger.
[[nodiscard]] bool mileage_trigger_dominates(const TrainSetType& type);

/// Throw InstanceError naming the violated invariant.
void check_type(const TrainSetType& type);
void check_train_set(const TrainSet& train_set);

}  // namespace emu
