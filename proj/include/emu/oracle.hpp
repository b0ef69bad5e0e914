#pragma once

#include "emu/catalog.hpp"
#include "emu/evaluator.hpp"
#include "emu/instance.hpp"

#include <cstdint>

namespace emu {

struct OracleBudget {
    std::uint64_t max_combinations = 1'000'000;
};

struct OracleResult {
    Solution solution;
    /// False when no combination satisfies every constraint; the solution then minimizes Z_pen.
    bool feasible = false;
    std::uint64_t combinations = 0;
};

/// Exhaustive search over the product of per-train-set path sets.
///
/// Any feasible combination beats any infeasible one. Among feasible combinations the
/// mileage loss decides; among infeasible ones the penalized objective. Ties go to the
/// lexicographically smallest gene vector. Throws BudgetExceededError when the product
/// of path-set sizes exceeds the budget.
[[nodiscard]] OracleResult enumerate_optimal(const Instance& instance, const PathCatalog& catalog,
                                             const PenaltyWeights& weights, OracleBudget budget = {});
[[nodiscard]] OracleResult enumerate_optimal(const Instance& instance, const PenaltyWeights& weights,
                                             OracleBudget budget = {});

}  // namespace emu
