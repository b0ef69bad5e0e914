#include "emu/oracle.hpp"

#include "emu/errors.hpp"

#include <stdexcept>

namespace emu {
namespace {

// Odometer step, last block fastest. False once every combination has been produced.
bool advance(std::vector<std::uint32_t>& genes, const PathCatalog& catalog) {
    for (std::size_t pos = genes.size(); pos-- > 0;) {
        if (++genes[pos] < catalog.block_size(pos)) return true;
        genes[pos] = 0;
    }
    return false;
}

}  // namespace

OracleResult enumerate_optimal(const Instance& instance, const PathCatalog& catalog, const PenaltyWeights& weights,
                               OracleBudget budget) {
    if (budget.max_combinations < 1) throw std::invalid_argument("max_combinations must be >= 1");
    const auto total = catalog.combinations();
    if (total == 0) throw UnschedulableError("", "a train-set has no feasible path");
    if (total > budget.max_combinations) {
        throw BudgetExceededError("exhaustive search needs " + std::to_string(total) +
                                  " combinations, budget is " + std::to_string(budget.max_combinations));
    }

    const AssignmentEvaluator evaluator(instance, catalog, weights);
    std::vector<std::uint32_t> genes(catalog.blocks(), 0);
    std::vector<std::uint32_t> best_genes;
    bool best_feasible = false;
    Kilometers best_loss = 0;
    double best_penalized = 0.0;
    std::uint64_t visited = 0;

    // Lexicographic order, so strict improvement keeps the smallest tied gene vector.
    while (true) {
        const auto eval = evaluator.evaluate(genes);
        ++visited;
        const bool feasible = eval.penalty_free();
        bool better = best_genes.empty();
        if (!better) {
            if (feasible != best_feasible) {
                better = feasible;
            } else if (feasible) {
                better = eval.mileage_loss_km < best_loss;
            } else {
                better = eval.penalized < best_penalized;
            }
        }
        if (better) {
            best_genes = genes;
            best_feasible = feasible;
            best_loss = eval.mileage_loss_km;
            best_penalized = eval.penalized;
        }

        if (!advance(genes, catalog)) break;
    }

    OracleResult result;
    result.solution = decode(instance, catalog, best_genes, weights);
    result.feasible = result.solution.feasible();
    result.combinations = visited;
    return result;
}

OracleResult enumerate_optimal(const Instance& instance, const PenaltyWeights& weights, OracleBudget budget) {
    return enumerate_optimal(instance, build_path_catalog(instance), weights, budget);
}

}  // namespace emu
