#pragma once

#include "emu/fleet.hpp"
#include "emu/network.hpp"

#include <optional>
#include <string>
#include <vector>

namespace emu {

struct MaintenanceEvent {
    MaintenanceLevel level = MaintenanceLevel::Third;
    /// Day of the available -> maintenance switch; counted as a maintenance day.
    Day dispatch_day = 1;
    /// Day of the maintenance -> available switch; counted as available.
    Day return_day = 2;
    Kilometers mileage_at_dispatch = 0;

    friend bool operator==(const MaintenanceEvent&, const MaintenanceEvent&) = default;
};

/// Maintenance already in progress at horizon start; occupies days [1, return_day).
struct WorkshopStay {
    MaintenanceLevel level = MaintenanceLevel::Third;
    Day return_day = 1;

    friend bool operator==(const WorkshopStay&, const WorkshopStay&) = default;
};

/// Contiguous workshop occupancy [first_day, end_day).
struct Occupancy {
    MaintenanceLevel level;
    Day first_day;
    Day end_day;
};

/// One status trajectory of a train-set across the horizon.
struct FeasiblePath {
    std::string train_set_id;
    std::optional<WorkshopStay> initial_stay;
    std::vector<MaintenanceEvent> events;

    /// Status row (1 = available, 2..4 = third..fifth) on `day`.
    [[nodiscard]] int status_at(Day day) const;
    [[nodiscard]] std::vector<int> status_by_day(int horizon_days) const;
    [[nodiscard]] std::vector<Occupancy> occupancy() const;
    [[nodiscard]] std::vector<Day> dispatch_days() const;

    /// Arc chain through the network, ending in a super-node.
    [[nodiscard]] std::vector<Arc> arcs(int horizon_days) const;

    friend bool operator==(const FeasiblePath&, const FeasiblePath&) = default;
};

/// Canonical order: fewer events first, then dispatch days lexicographically.
[[nodiscard]] bool canonical_less(const FeasiblePath& a, const FeasiblePath& b);

/// Expected mileage counter when the train-set enters the workshop on `dispatch_day`.
/// Without a prior reset this is l0 + (k-1) * daily; after a return on
/// `prior_reset_day` the counter restarts from zero.
[[nodiscard]] Kilometers path_mileage_at_dispatch(const TrainSet& train_set, Day dispatch_day,
                                                  std::optional<Day> prior_reset_day = std::nullopt);

/// Depth-first enumeration of every path through `network` whose maintenance events
/// respect the floating ranges and the level cycle. Events due by the end of the horizon
/// are mandatory; events whose window straddles the horizon end are optional.
/// Result is in canonical order. Throws UnschedulableError if no path exists.
[[nodiscard]] std::vector<FeasiblePath> generate_feasible_paths(const TrainSet& train_set,
                                                                const TimeSpaceNetwork& network);

}  // namespace emu
