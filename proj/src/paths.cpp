#include "emu/paths.hpp"

#include "emu/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace emu {

int FeasiblePath::status_at(Day day) const {
    if (initial_stay && day < initial_stay->return_day) return status_row(initial_stay->level);
    for (const auto& event : events) {
        if (event.dispatch_day <= day && day < event.return_day) return status_row(event.level);
    }
    return kAvailableRow;
}

std::vector<int> FeasiblePath::status_by_day(int horizon_days) const {
    std::vector<int> rows(static_cast<std::size_t>(horizon_days), kAvailableRow);
    for (const auto& occ : occupancy()) {
        const Day last = std::min(occ.end_day - 1, horizon_days);
        for (Day day = std::max(occ.first_day, 1); day <= last; ++day) {
            rows[static_cast<std::size_t>(day - 1)] = status_row(occ.level);
        }
    }
    return rows;
}

std::vector<Occupancy> FeasiblePath::occupancy() const {
    std::vector<Occupancy> spans;
    spans.reserve(events.size() + 1);
    if (initial_stay && initial_stay->return_day > 1) {
        spans.push_back({initial_stay->level, 1, initial_stay->return_day});
    }
    for (const auto& event : events) spans.push_back({event.level, event.dispatch_day, event.return_day});
    return spans;
}

std::vector<Day> FeasiblePath::dispatch_days() const {
    std::vector<Day> days;
    days.reserve(events.size());
    for (const auto& event : events) days.push_back(event.dispatch_day);
    return days;
}

std::vector<Arc> FeasiblePath::arcs(int horizon_days) const {
    const auto rows = status_by_day(horizon_days);
    std::vector<Arc> chain;
    chain.push_back(Arc::time(rows.front(), 1));
    for (Day day = 2; day <= horizon_days; ++day) {
        const int prev = rows[static_cast<std::size_t>(day - 2)];
        const int row = rows[static_cast<std::size_t>(day - 1)];
        if (prev != row) chain.push_back(Arc::connect(prev, row, day));
        chain.push_back(Arc::time(row, day));
    }
    return chain;
}

bool canonical_less(const FeasiblePath& a, const FeasiblePath& b) {
    if (a.events.size() != b.events.size()) return a.events.size() < b.events.size();
    return a.dispatch_days() < b.dispatch_days();
}

Kilometers path_mileage_at_dispatch(const TrainSet& train_set, Day dispatch_day,
                                    std::optional<Day> prior_reset_day) {
    if (dispatch_day < 1) throw std::invalid_argument("dispatch_day must be >= 1");
    const Kilometers daily = train_set.type.daily_mileage;
    if (!prior_reset_day) {
        return train_set.initial_mileage + static_cast<Kilometers>(dispatch_day - 1) * daily;
    }
    if (dispatch_day <= *prior_reset_day) {
        throw std::invalid_argument("dispatch_day must follow the prior reset day");
    }
    return static_cast<Kilometers>(dispatch_day - *prior_reset_day) * daily;
}

namespace {

// Walks the network arc by arc. Only branches that can still honour the floating range
// of the pending event are expanded, so every completed walk is a feasible path.
class PathSearch {
public:
    PathSearch(const TrainSet& train_set, const TimeSpaceNetwork& network)
        : train_(train_set), network_(network), horizon_(network.horizon_days()),
          cycle_position_(train_set.cycle_position) {}

    std::vector<FeasiblePath> run() {
        Arc first = Arc::time(kAvailableRow, 1);
        if (train_.in_workshop_at_start()) {
            stay_ = WorkshopStay{train_.last_level, train_.remaining_shop_days() + 1};
            return_day_ = stay_->return_day;
            first = Arc::time(status_row(stay_->level), 1);
            // Window is computed on return, when the counter restarts.
        } else {
            counter_origin_ = 1;
            counter_start_ = train_.initial_mileage;
            window_ = due_window_days(train_.type, level_at(cycle_position_), counter_start_);
            // The first switch can happen no earlier than day 2: day 1 is the initial arc.
            window_.earliest = std::max(window_.earliest, 2);
        }
        visit(first);
        std::sort(paths_.begin(), paths_.end(), canonical_less);
        return std::move(paths_);
    }

    [[nodiscard]] DayWindow first_window() const { return window_; }

private:
    void visit(const Arc& arc) {
        const auto next = network_.subsequent_arcs(arc);
        if (!arc.is_time()) {
            visit(next.arcs.front());
            return;
        }
        if (arc.to_row == kAvailableRow) {
            visit_available(arc, next);
        } else {
            visit_maintenance(arc, next);
        }
    }

    void visit_available(const Arc& arc, const SubsequentArcs& next) {
        if (next.reaches_super_node) {
            // The pending event may only be left out if it is not yet overdue.
            if (window_.latest > horizon_) emit();
            return;
        }
        const Day tomorrow = arc.day + 1;
        const MaintenanceLevel due = level_at(cycle_position_);
        for (const auto& succ : next.arcs) {
            if (succ.is_time()) {
                // Staying available tomorrow keeps dispatch possible on a later day.
                if (window_.latest >= tomorrow + 1) visit(succ);
                continue;
            }
            if (succ.to_row != status_row(due)) continue;
            if (tomorrow < window_.earliest || tomorrow > window_.latest) continue;
            dispatch(succ, due);
        }
    }

    void dispatch(const Arc& connect, MaintenanceLevel level) {
        const Day day = connect.day;
        const MaintenanceEvent event{
            level, day, day + train_.type.regulation(level).duration_days,
            counter_start_ + static_cast<Kilometers>(day - counter_origin_) * train_.type.daily_mileage};

        const auto saved_cycle = cycle_position_;
        const auto saved_window = window_;
        const auto saved_origin = counter_origin_;
        const auto saved_start = counter_start_;

        events_.push_back(event);
        return_day_ = event.return_day;
        cycle_position_ = advance_cycle(cycle_position_);
        visit(connect);
        events_.pop_back();

        cycle_position_ = saved_cycle;
        window_ = saved_window;
        counter_origin_ = saved_origin;
        counter_start_ = saved_start;
    }

    void visit_maintenance(const Arc& arc, const SubsequentArcs& next) {
        if (next.reaches_super_node) {
            emit();
            return;
        }
        const Day tomorrow = arc.day + 1;
        for (const auto& succ : next.arcs) {
            if (succ.is_time()) {
                if (tomorrow < return_day_) visit(succ);
            } else if (tomorrow == return_day_) {
                const auto saved_window = window_;
                const auto saved_origin = counter_origin_;
                const auto saved_start = counter_start_;
                restart_counter(tomorrow);
                visit(succ);
                window_ = saved_window;
                counter_origin_ = saved_origin;
                counter_start_ = saved_start;
            }
        }
    }

    void restart_counter(Day return_day) {
        counter_origin_ = return_day;
        counter_start_ = 0;
        const auto relative = due_window_days(train_.type, level_at(cycle_position_), 0);
        window_ = {std::max(return_day - 1 + relative.earliest, return_day + 1),
                   return_day - 1 + relative.latest};
    }

    void emit() { paths_.push_back(FeasiblePath{train_.id, stay_, events_}); }

    const TrainSet& train_;
    const TimeSpaceNetwork& network_;
    int horizon_;

    int cycle_position_;
    Day counter_origin_ = 1;
    Kilometers counter_start_ = 0;
    DayWindow window_{1, 0};

    std::optional<WorkshopStay> stay_;
    Day return_day_ = 1;

    std::vector<MaintenanceEvent> events_;
    std::vector<FeasiblePath> paths_;
};

}  // namespace

std::vector<FeasiblePath> generate_feasible_paths(const TrainSet& train_set,
                                                  const TimeSpaceNetwork& network) {
    PathSearch search(train_set, network);
    auto paths = search.run();
    if (paths.empty()) {
        const auto level = next_level(train_set);
        const auto km = due_window_km(train_set);
        const auto days = search.first_window();
        throw UnschedulableError(
            train_set.id,
            "train-set " + train_set.id + ": no feasible path; " + std::string(to_string(level)) +
                "-level window [" + std::to_string(km.low) + ", " + std::to_string(km.high) +
                "] km maps to dispatch days [" + std::to_string(days.earliest) + ", " +
                std::to_string(days.latest) + "] over a " + std::to_string(network.horizon_days()) +
                "-day horizon");
    }
    return paths;
}

}  // namespace emu
