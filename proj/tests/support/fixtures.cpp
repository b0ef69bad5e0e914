#include "fixtures.hpp"

#include "emu/errors.hpp"
#include "emu/instance_io.hpp"

#include <random>

namespace emu::testing {

std::filesystem::path data_path(std::string_view file) { return std::filesystem::path(EMU_DATA_DIR) / file; }

Instance load_fixture(std::string_view name) { return load_instance(data_path(std::string(name) + ".json")); }

TrainSetType toy_type(Kilometers daily, Kilometers third_base, Kilometers float_low, Kilometers float_high,
                      MaintenanceDurations durations) {
    TrainSetType type;
    type.name = "TOY";
    type.daily_mileage = daily;
    for (auto level : kAllLevels) {
        auto& reg = type.regulation(level);
        const Kilometers scale = level == MaintenanceLevel::Third ? 1 : level == MaintenanceLevel::Fourth ? 2 : 4;
        reg.level = level;
        reg.base_mileage = third_base * scale;
        reg.float_low = float_low * scale;
        reg.float_high = float_high * scale;
        reg.duration_days = durations.of(level);
        reg.day_limit = kThirdLevelDayLimit * static_cast<int>(scale);
    }
    return type;
}

TrainSetType random_toy_type(Rng& rng) {
    auto pick = [&rng](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
    const Kilometers daily = pick(1, 5) * 1000;
    const Kilometers base = daily * pick(4, 12);
    const Kilometers low = std::min(base - daily, daily * pick(0, 4));
    const Kilometers high = daily * pick(0, 4);
    MaintenanceDurations durations{static_cast<int>(pick(1, 5)), static_cast<int>(pick(2, 8)),
                                   static_cast<int>(pick(3, 12))};
    return toy_type(daily, base, low, high, durations);
}

TrainSet random_train_set(const TrainSetType& type, std::string id, Rng& rng) {
    TrainSet ts;
    ts.id = std::move(id);
    ts.type = type;
    ts.cycle_position = std::uniform_int_distribution<int>(0, kCycleLength - 1)(rng);
    ts.last_level = level_at((ts.cycle_position + kCycleLength - 1) % kCycleLength);
    if (std::uniform_int_distribution<int>(0, 4)(rng) == 0) {
        const int remaining = std::uniform_int_distribution<int>(1, 6)(rng);
        ts.initial_days = -remaining;
        ts.initial_mileage = -static_cast<Kilometers>(remaining) * type.daily_mileage;
        return ts;
    }
    const auto high = due_window_km(ts).high;
    // Redraw counters that step over a window narrower than one day's mileage.
    while (true) {
        ts.initial_mileage = std::uniform_int_distribution<Kilometers>(0, high)(rng);
        ts.initial_days = static_cast<int>(ts.initial_mileage / type.daily_mileage);
        try {
            check_train_set(ts);
            return ts;
        } catch (const InstanceError&) {
        }
    }
}

Instance make_instance(std::vector<TrainSet> fleet, int horizon_days, int min_available, int capacity) {
    Instance inst;
    inst.name = "generated";
    inst.start_date = "2026-01-01";
    inst.horizon_days = horizon_days;
    for (const auto& ts : fleet) {
        bool known = false;
        for (const auto& t : inst.types) known = known || t.name == ts.type.name;
        if (!known) inst.types.push_back(ts.type);
    }
    inst.fleet = std::move(fleet);
    DemandPeriod usual;
    usual.min_available = min_available;
    for (Day d = 1; d <= horizon_days; ++d) usual.days.push_back(d);
    inst.demand_periods.push_back(usual);
    inst.capacities = {capacity, capacity, capacity};
    if (!inst.fleet.empty()) {
        const auto& t = inst.fleet.front().type;
        inst.durations = {t.regulation(MaintenanceLevel::Third).duration_days,
                          t.regulation(MaintenanceLevel::Fourth).duration_days,
                          t.regulation(MaintenanceLevel::Fifth).duration_days};
    }
    return inst;
}

std::string signature(const FeasiblePath& path) {
    std::string sig;
    if (path.initial_stay) {
        sig += "stay:" + std::string(to_string(path.initial_stay->level)) + "@" +
               std::to_string(path.initial_stay->return_day) + ";";
    }
    for (const auto& e : path.events) {
        sig += std::string(to_string(e.level)) + "@" + std::to_string(e.dispatch_day) + "->" +
               std::to_string(e.return_day) + "=" + std::to_string(e.mileage_at_dispatch) + ";";
    }
    return sig;
}

std::set<std::string> signatures(const std::vector<FeasiblePath>& paths) {
    std::set<std::string> out;
    for (const auto& p : paths) out.insert(signature(p));
    return out;
}

}  // namespace emu::testing
