#pragma once

#include "emu/catalog.hpp"
#include "emu/instance.hpp"
#include "emu/paths.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace emu {

/// Weights of the penalized objective.
struct PenaltyWeights {
    double cost_c = 0.0001;
    double lambda1 = 100.0;  ///< per missing available train-set per day
    double lambda2 = 80.0;   ///< per train-set over workshop capacity per day
};

/// One chosen path per train-set. Order is free; validate() checks coverage.
struct Schedule {
    std::vector<FeasiblePath> paths;
};

/// w_ik: number of train-sets in status row i on day k.
class DailyCounts {
public:
    DailyCounts() = default;
    explicit DailyCounts(int horizon_days)
        : rows_(static_cast<std::size_t>(horizon_days), std::array<int, kStatusRows>{}) {}

    [[nodiscard]] int horizon_days() const { return static_cast<int>(rows_.size()); }
    [[nodiscard]] int at(Day day, int row) const {
        return rows_[static_cast<std::size_t>(day - 1)][static_cast<std::size_t>(row - 1)];
    }
    int& at(Day day, int row) {
        return rows_[static_cast<std::size_t>(day - 1)][static_cast<std::size_t>(row - 1)];
    }
    [[nodiscard]] int in_maintenance(Day day) const { return at(day, 2) + at(day, 3) + at(day, 4); }

    friend bool operator==(const DailyCounts&, const DailyCounts&) = default;

private:
    std::vector<std::array<int, kStatusRows>> rows_;
};

[[nodiscard]] DailyCounts tally_status(const Schedule& schedule, int horizon_days);
[[nodiscard]] int count_by_status(const Schedule& schedule, int horizon_days, Day day, int status_row);

struct Evaluation {
    /// Sum over events of max{0, L - l}, in whole kilometers.
    Kilometers mileage_loss_km = 0;
    /// Sum over days of max{0, n - w_1k}.
    std::int64_t availability_shortfall = 0;
    /// Sum over levels and days of max{0, w_jk - b_j}.
    std::int64_t capacity_excess = 0;
    double objective = 0.0;
    double penalized = 0.0;

    [[nodiscard]] bool penalty_free() const { return availability_shortfall == 0 && capacity_excess == 0; }
};

/// Mileage given up by maintaining before the base mileage.
[[nodiscard]] Kilometers mileage_loss_km(const Schedule& schedule, const Instance& instance);
[[nodiscard]] double objective(const Schedule& schedule, const Instance& instance, double cost_c);
[[nodiscard]] Evaluation evaluate(const Schedule& schedule, const Instance& instance,
                                  const PenaltyWeights& weights);
[[nodiscard]] double penalized_objective(const Schedule& schedule, const Instance& instance,
                                         const PenaltyWeights& weights);

enum class ConstraintKind { PathUniqueness, Availability, Capacity, DueWindow };

[[nodiscard]] std::string_view to_string(ConstraintKind kind);

struct Violation {
    ConstraintKind kind;
    std::string train_set_id;  ///< empty for fleet-wide constraints
    Day day = 0;               ///< 0 when not tied to a day
    std::optional<MaintenanceLevel> level;
    std::optional<DemandLabel> period;
    std::int64_t required = 0;
    std::int64_t actual = 0;
    std::string message;
};

struct ViolationReport {
    std::vector<Violation> violations;

    [[nodiscard]] bool feasible() const { return violations.empty(); }
    [[nodiscard]] std::size_t count(ConstraintKind kind) const;
    [[nodiscard]] std::string to_text() const;
};

/// Checks path uniqueness, per-period availability, per-level capacity and each event's
/// floating range. An empty report means the schedule is feasible.
[[nodiscard]] ViolationReport validate(const Schedule& schedule, const Instance& instance);

/// Precomputed per-path data for evaluating gene vectors against a catalog.
class AssignmentEvaluator {
public:
    AssignmentEvaluator(const Instance& instance, const PathCatalog& catalog, PenaltyWeights weights);

    [[nodiscard]] Evaluation evaluate(std::span<const std::uint32_t> genes) const;
    [[nodiscard]] const PenaltyWeights& weights() const { return weights_; }

private:
    struct Span {
        int level;
        Day first;
        Day end;  // exclusive, clipped to K + 1
    };
    struct PathData {
        Kilometers loss_km = 0;
        std::vector<Span> spans;
    };

    int horizon_;
    int fleet_size_;
    std::array<int, 3> capacity_{};
    std::vector<int> need_;
    std::vector<std::vector<PathData>> data_;
    PenaltyWeights weights_;
};

struct Solution {
    std::vector<std::uint32_t> genes;
    Schedule schedule;
    DailyCounts counts;
    Evaluation evaluation;
    ViolationReport report;

    [[nodiscard]] bool feasible() const { return report.feasible(); }
};

/// Expands a gene vector into a full solution with counts, evaluation and report.
[[nodiscard]] Solution decode(const Instance& instance, const PathCatalog& catalog,
                              std::span<const std::uint32_t> genes, const PenaltyWeights& weights);

}  // namespace emu
