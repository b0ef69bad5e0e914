#include "emu/evaluator.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace emu {
namespace {

Kilometers event_loss(const TrainSet& ts, const MaintenanceEvent& event) {
    return std::max<Kilometers>(0, ts.type.regulation(event.level).base_mileage - event.mileage_at_dispatch);
}

void weigh(Kilometers loss_km, std::int64_t shortfall, std::int64_t excess, const PenaltyWeights& w,
           Evaluation& out) {
    out.mileage_loss_km = loss_km;
    out.availability_shortfall = shortfall;
    out.capacity_excess = excess;
    out.objective = w.cost_c * static_cast<double>(loss_km);
    out.penalized = out.objective;
    if (shortfall != 0) out.penalized += w.lambda1 * static_cast<double>(shortfall);
    if (excess != 0) out.penalized += w.lambda2 * static_cast<double>(excess);
}

std::vector<std::optional<DemandLabel>> label_by_day(const Instance& instance) {
    std::vector<std::optional<DemandLabel>> labels(static_cast<std::size_t>(instance.horizon_days));
    for (const auto& period : instance.demand_periods) {
        for (Day day : period.days) {
            if (day >= 1 && day <= instance.horizon_days) labels[static_cast<std::size_t>(day - 1)] = period.label;
        }
    }
    return labels;
}

void check_events(const FeasiblePath& path, const TrainSet& ts, const Instance& instance,
                  std::vector<Violation>& out) {
    const int horizon = instance.horizon_days;
    auto report = [&](Day day, std::optional<MaintenanceLevel> level, std::int64_t required,
                      std::int64_t actual, std::string message) {
        out.push_back({ConstraintKind::DueWindow, ts.id, day, level, std::nullopt, required, actual,
                       "train-set " + ts.id + ": " + std::move(message)});
    };

    std::optional<WorkshopStay> expected_stay;
    if (ts.in_workshop_at_start()) expected_stay = WorkshopStay{ts.last_level, ts.remaining_shop_days() + 1};
    if (path.initial_stay != expected_stay) {
        report(1, ts.last_level, 0, 0, "initial workshop stay does not match the train-set's initial counters");
    }

    int cycle = ts.cycle_position;
    std::optional<Day> reset_day;
    Day first_allowed = expected_stay ? expected_stay->return_day + 1 : 2;
    Day free_from = expected_stay ? expected_stay->return_day : 1;

    for (std::size_t i = 0; i < path.events.size(); ++i) {
        const auto& event = path.events[i];
        const auto due = level_at(cycle);
        const auto& reg = ts.type.regulation(due);
        if (event.level != due) {
            report(event.dispatch_day, event.level, status_row(due), status_row(event.level),
                   "event " + std::to_string(i) + " is " + std::string(to_string(event.level)) +
                       "-level but the cycle requires " + std::string(to_string(due)));
        }
        if (event.dispatch_day < first_allowed || event.dispatch_day > horizon) {
            report(event.dispatch_day, event.level, first_allowed, event.dispatch_day,
                   "event " + std::to_string(i) + " dispatch day " + std::to_string(event.dispatch_day) +
                       " is outside [" + std::to_string(first_allowed) + ", " + std::to_string(horizon) + "]");
        }
        const Day expected_return = event.dispatch_day + reg.duration_days;
        if (event.return_day != expected_return) {
            report(event.dispatch_day, event.level, expected_return, event.return_day,
                   "event " + std::to_string(i) + " return day should be " + std::to_string(expected_return));
        }
        if (event.dispatch_day >= 1 && (!reset_day || event.dispatch_day > *reset_day)) {
            const auto mileage = path_mileage_at_dispatch(ts, event.dispatch_day, reset_day);
            const auto window = reg.window();
            if (!window.contains(mileage)) {
                report(event.dispatch_day, due, window.low, mileage,
                       "dispatch mileage " + std::to_string(mileage) + " km outside [" +
                           std::to_string(window.low) + ", " + std::to_string(window.high) + "] km");
            }
            if (mileage != event.mileage_at_dispatch) {
                report(event.dispatch_day, due, mileage, event.mileage_at_dispatch,
                       "recorded dispatch mileage disagrees with the mileage counter");
            }
        }
        cycle = advance_cycle(cycle);
        reset_day = expected_return;
        free_from = expected_return;
        first_allowed = expected_return + 1;
    }

    // A level whose upper bound is reached inside the horizon may not be left out.
    if (free_from <= horizon) {
        const auto due = level_at(cycle);
        const auto window = ts.type.regulation(due).window();
        const Kilometers at_end = reset_day ? path_mileage_at_dispatch(ts, horizon + 1, reset_day)
                                            : path_mileage_at_dispatch(ts, horizon + 1);
        if (at_end > window.high) {
            report(horizon, due, window.high, at_end,
                   std::string(to_string(due)) + "-level maintenance falls due inside the horizon but is omitted");
        }
    }
}

}  // namespace

DailyCounts tally_status(const Schedule& schedule, int horizon_days) {
    DailyCounts counts(horizon_days);
    for (const auto& path : schedule.paths) {
        const auto rows = path.status_by_day(horizon_days);
        for (Day day = 1; day <= horizon_days; ++day) ++counts.at(day, rows[static_cast<std::size_t>(day - 1)]);
    }
    return counts;
}

int count_by_status(const Schedule& schedule, int horizon_days, Day day, int status_row) {
    if (day < 1 || day > horizon_days) throw std::out_of_range("day outside the horizon");
    int count = 0;
    for (const auto& path : schedule.paths) count += path.status_at(day) == status_row ? 1 : 0;
    return count;
}

Kilometers mileage_loss_km(const Schedule& schedule, const Instance& instance) {
    Kilometers total = 0;
    for (const auto& path : schedule.paths) {
        const auto* ts = instance.find_train_set(path.train_set_id);
        if (ts == nullptr) continue;
        for (const auto& event : path.events) total += event_loss(*ts, event);
    }
    return total;
}

double objective(const Schedule& schedule, const Instance& instance, double cost_c) {
    return cost_c * static_cast<double>(mileage_loss_km(schedule, instance));
}

Evaluation evaluate(const Schedule& schedule, const Instance& instance, const PenaltyWeights& weights) {
    const auto counts = tally_status(schedule, instance.horizon_days);
    const auto need = instance.min_available_by_day();
    std::int64_t shortfall = 0;
    std::int64_t excess = 0;
    for (Day day = 1; day <= instance.horizon_days; ++day) {
        shortfall += std::max(0, need[static_cast<std::size_t>(day - 1)] - counts.at(day, kAvailableRow));
        for (auto level : kAllLevels) {
            excess += std::max(0, counts.at(day, status_row(level)) - instance.capacities.of(level));
        }
    }
    Evaluation result;
    weigh(mileage_loss_km(schedule, instance), shortfall, excess, weights, result);
    return result;
}

double penalized_objective(const Schedule& schedule, const Instance& instance, const PenaltyWeights& weights) {
    return evaluate(schedule, instance, weights).penalized;
}

std::string_view to_string(ConstraintKind kind) {
    switch (kind) {
        case ConstraintKind::PathUniqueness: return "path_uniqueness";
        case ConstraintKind::Availability: return "availability";
        case ConstraintKind::Capacity: return "capacity";
        case ConstraintKind::DueWindow: return "due_window";
    }
    return "?";
}

std::size_t ViolationReport::count(ConstraintKind kind) const {
    return static_cast<std::size_t>(std::count_if(violations.begin(), violations.end(),
                                                  [kind](const Violation& v) { return v.kind == kind; }));
}

std::string ViolationReport::to_text() const {
    std::ostringstream out;
    if (violations.empty()) {
        out << "feasible: no violated constraints\n";
        return out.str();
    }
    out << "infeasible: " << violations.size() << " violation(s)\n";
    for (const auto& v : violations) out << "  [" << to_string(v.kind) << "] " << v.message << "\n";
    return out.str();
}

ViolationReport validate(const Schedule& schedule, const Instance& instance) {
    ViolationReport report;
    auto& out = report.violations;

    std::map<std::string, int> seen;
    for (const auto& path : schedule.paths) ++seen[path.train_set_id];
    for (const auto& ts : instance.fleet) {
        const int n = seen.count(ts.id) != 0 ? seen[ts.id] : 0;
        if (n != 1) {
            out.push_back({ConstraintKind::PathUniqueness, ts.id, 0, std::nullopt, std::nullopt, 1, n,
                           "train-set " + ts.id + " has " + std::to_string(n) + " chosen paths, expected 1"});
        }
    }
    for (const auto& [id, n] : seen) {
        if (instance.find_train_set(id) == nullptr) {
            out.push_back({ConstraintKind::PathUniqueness, id, 0, std::nullopt, std::nullopt, 0, n,
                           "path for unknown train-set " + id});
        }
    }

    const auto counts = tally_status(schedule, instance.horizon_days);
    const auto need = instance.min_available_by_day();
    const auto labels = label_by_day(instance);
    for (Day day = 1; day <= instance.horizon_days; ++day) {
        const int required = need[static_cast<std::size_t>(day - 1)];
        const int available = counts.at(day, kAvailableRow);
        if (available < required) {
            const auto label = labels[static_cast<std::size_t>(day - 1)];
            out.push_back({ConstraintKind::Availability, "", day, std::nullopt, label, required, available,
                           "day " + std::to_string(day) + " (" +
                               std::string(label ? to_string(*label) : "unlabelled") + "): " +
                               std::to_string(available) + " available, " + std::to_string(required) +
                               " required"});
        }
    }
    for (auto level : kAllLevels) {
        const int cap = instance.capacities.of(level);
        for (Day day = 1; day <= instance.horizon_days; ++day) {
            const int used = counts.at(day, status_row(level));
            if (used > cap) {
                out.push_back({ConstraintKind::Capacity, "", day, level, std::nullopt, cap, used,
                               "day " + std::to_string(day) + ": " + std::to_string(used) + " train-sets in " +
                                   std::string(to_string(level)) + "-level maintenance, capacity " +
                                   std::to_string(cap)});
            }
        }
    }

    for (const auto& path : schedule.paths) {
        const auto* ts = instance.find_train_set(path.train_set_id);
        if (ts != nullptr) check_events(path, *ts, instance, out);
    }
    return report;
}

AssignmentEvaluator::AssignmentEvaluator(const Instance& instance, const PathCatalog& catalog,
                                         PenaltyWeights weights)
    : horizon_(instance.horizon_days),
      fleet_size_(instance.fleet_size()),
      capacity_{instance.capacities.third, instance.capacities.fourth, instance.capacities.fifth},
      need_(instance.min_available_by_day()),
      weights_(weights) {
    if (catalog.blocks() != instance.fleet.size()) {
        throw std::invalid_argument("catalog does not match the fleet");
    }
    data_.resize(catalog.blocks());
    for (std::size_t e = 0; e < catalog.blocks(); ++e) {
        const auto& ts = instance.fleet[e];
        for (const auto& path : catalog.paths[e]) {
            PathData pd;
            for (const auto& event : path.events) pd.loss_km += event_loss(ts, event);
            for (const auto& occ : path.occupancy()) {
                const Day first = std::max(occ.first_day, 1);
                const Day end = std::min(occ.end_day, horizon_ + 1);
                if (first < end) pd.spans.push_back({index_of(occ.level), first, end});
            }
            data_[e].push_back(std::move(pd));
        }
    }
}

Evaluation AssignmentEvaluator::evaluate(std::span<const std::uint32_t> genes) const {
    if (genes.size() != data_.size()) throw std::invalid_argument("gene count does not match the fleet");
    // Difference arrays per maintenance level over days 1..K+1.
    std::vector<std::array<int, 3>> delta(static_cast<std::size_t>(horizon_ + 2), std::array<int, 3>{});
    Kilometers loss = 0;
    for (std::size_t e = 0; e < genes.size(); ++e) {
        const auto& pd = data_[e].at(genes[e]);
        loss += pd.loss_km;
        for (const auto& span : pd.spans) {
            ++delta[static_cast<std::size_t>(span.first)][static_cast<std::size_t>(span.level)];
            --delta[static_cast<std::size_t>(span.end)][static_cast<std::size_t>(span.level)];
        }
    }
    std::int64_t shortfall = 0;
    std::int64_t excess = 0;
    std::array<int, 3> running{};
    for (Day day = 1; day <= horizon_; ++day) {
        int busy = 0;
        for (std::size_t j = 0; j < 3; ++j) {
            running[j] += delta[static_cast<std::size_t>(day)][j];
            busy += running[j];
            excess += std::max(0, running[j] - capacity_[j]);
        }
        shortfall += std::max(0, need_[static_cast<std::size_t>(day - 1)] - (fleet_size_ - busy));
    }
    Evaluation result;
    weigh(loss, shortfall, excess, weights_, result);
    return result;
}

Solution decode(const Instance& instance, const PathCatalog& catalog, std::span<const std::uint32_t> genes,
                const PenaltyWeights& weights) {
    if (genes.size() != catalog.blocks()) throw std::invalid_argument("gene count does not match the fleet");
    Solution solution;
    solution.genes.assign(genes.begin(), genes.end());
    for (std::size_t e = 0; e < genes.size(); ++e) solution.schedule.paths.push_back(catalog.paths[e].at(genes[e]));
    solution.counts = tally_status(solution.schedule, instance.horizon_days);
    solution.evaluation = evaluate(solution.schedule, instance, weights);
    solution.report = validate(solution.schedule, instance);
    return solution;
}

}  // namespace emu
