#include "brute_force.hpp"

namespace emu::testing {
namespace {

struct Walker {
    const TrainSet& ts;
    int horizon;
    std::set<PathSignature>& out;

    // Available from `start` with counter `counter` on that day; `position` is the next cycle slot.
    void walk(Day start, Kilometers counter, int position, const std::string& prefix) {
        const auto level = kMaintenanceCycle[static_cast<std::size_t>(position % kCycleLength)];
        const auto& reg = ts.type.regulation(level);
        const Kilometers low = reg.base_mileage - reg.float_low;
        const Kilometers high = reg.base_mileage + reg.float_high;

        const Kilometers at_end = counter + static_cast<Kilometers>(horizon + 1 - start) * ts.type.daily_mileage;
        if (at_end <= high) out.insert(prefix);

        for (Day k = start + 1; k <= horizon; ++k) {
            const Kilometers km = counter + static_cast<Kilometers>(k - start) * ts.type.daily_mileage;
            if (km < low || km > high) continue;
            const Day back = k + reg.duration_days;
            auto sig = prefix + std::string(to_string(level)) + "@" + std::to_string(k) + "->" +
                       std::to_string(back) + "=" + std::to_string(km) + ";";
            if (back > horizon) {
                out.insert(sig);
            } else {
                walk(back, 0, position + 1, sig);
            }
        }
    }
};

}  // namespace

std::set<PathSignature> brute_force_paths(const TrainSet& train_set, int horizon_days) {
    std::set<PathSignature> out;
    Walker walker{train_set, horizon_days, out};
    if (train_set.initial_mileage < 0) {
        const Day back = -train_set.initial_days + 1;
        const auto prefix = "stay:" + std::string(to_string(train_set.last_level)) + "@" + std::to_string(back) + ";";
        if (back > horizon_days) {
            out.insert(prefix);
        } else {
            walker.walk(back, 0, train_set.cycle_position, prefix);
        }
    } else {
        walker.walk(1, train_set.initial_mileage, train_set.cycle_position, "");
    }
    return out;
}

}  // namespace emu::testing
