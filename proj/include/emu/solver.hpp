#pragma once

#include "emu/catalog.hpp"
#include "emu/evaluator.hpp"
#include "emu/instance.hpp"

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace emu {

/// Genetic algorithm with simulated-annealing survival.
struct SolverParams {
    double cost_c = 0.0001;
    double lambda1 = 100.0;
    double lambda2 = 80.0;
    int sizepop = 30;
    double p_crossover = 0.88;
    double p_mutation = 0.08;
    int max_generations = 3000;
    double initial_temperature = 100.0;
    double final_temperature = 1.0;
    double cooling_rate = 0.8;
    double fitness_epsilon = 1e-9;
    std::uint64_t rng_seed = 0;

    [[nodiscard]] PenaltyWeights weights() const { return {cost_c, lambda1, lambda2}; }

    /// Throws std::invalid_argument when a parameter is out of range.
    void check() const;
    /// Non-fatal findings, e.g. lambda1 <= lambda2.
    [[nodiscard]] std::vector<std::string> warnings() const;

    friend bool operator==(const SolverParams&, const SolverParams&) = default;
};

using Rng = std::mt19937_64;

/// One path index per train-set. Exactly one path per block holds by construction.
struct Chromosome {
    std::vector<std::uint32_t> genes;

    friend bool operator==(const Chromosome&, const Chromosome&) = default;
};

using Population = std::vector<Chromosome>;

/// Temperatures at which a full run of generations executes: T0, a*T0, ... while T >= T_end.
/// Its length equals the number of cooling steps.
[[nodiscard]] std::vector<double> cooling_schedule(const SolverParams& params);

/// Uniformly random gene per block. Throws UnschedulableError on an empty block.
[[nodiscard]] Population init_population(const PathCatalog& catalog, const SolverParams& params, Rng& rng);

/// 1 / (Z_pen + epsilon)
[[nodiscard]] double fitness(double penalized_objective, double epsilon);
[[nodiscard]] double fitness(const Chromosome& chromosome, const AssignmentEvaluator& evaluator,
                             const SolverParams& params);

/// Roulette wheel: `count` draws with replacement, P(j) = fit_j / sum(fit).
[[nodiscard]] Population select(const Population& population, std::span<const double> fitnesses, Rng& rng,
                                std::size_t count);
[[nodiscard]] Population select(const Population& population, std::span<const double> fitnesses, Rng& rng);

/// Swaps gene blocks [first, last] between the two chromosomes.
void swap_blocks(Chromosome& a, Chromosome& b, std::size_t first, std::size_t last);

/// With probability p_crossover swaps a uniformly drawn block range; otherwise copies.
[[nodiscard]] std::pair<Chromosome, Chromosome> crossover(const Chromosome& a, const Chromosome& b,
                                                          const SolverParams& params, Rng& rng);

/// With probability p_mutation moves one uniformly drawn block to a different path.
/// Blocks with a single path are left unchanged.
[[nodiscard]] Chromosome mutate(Chromosome chromosome, const PathCatalog& catalog, const SolverParams& params,
                                Rng& rng);

/// min(1, exp((child - parent) / T)) on fitness values.
[[nodiscard]] double acceptance_probability(double child_fitness, double parent_fitness, double temperature);

/// True when the offspring replaces its parent.
[[nodiscard]] bool sa_accept(double child_fitness, double parent_fitness, double temperature, Rng& rng);

[[nodiscard]] const Chromosome& sa_survival(const Chromosome& parent, const Chromosome& child,
                                            double temperature, const AssignmentEvaluator& evaluator,
                                            const SolverParams& params, Rng& rng);

struct TracePoint {
    long generation = 0;  ///< 1-based, counted across all temperatures
    int cooling_step = 0;
    double temperature = 0.0;
    double best_penalized = 0.0;
};

struct SolveResult {
    Solution best;
    std::vector<TracePoint> trace;
    int cooling_steps = 0;
    long generations = 0;
    long evaluations = 0;
};

struct Individual {
    Chromosome chromosome;
    Evaluation evaluation;
    double fitness = 0.0;
};

/// One generation in place: select, crossover, mutate, then SA survival of each child
/// against the individual that held its slot. `offspring` receives the evaluated children.
void run_generation(std::vector<Individual>& population, double temperature, const PathCatalog& catalog,
                    const AssignmentEvaluator& evaluator, const SolverParams& params, Rng& rng,
                    std::vector<Individual>& offspring);

[[nodiscard]] SolveResult solve(const Instance& instance, const PathCatalog& catalog, const SolverParams& params);
[[nodiscard]] SolveResult solve(const Instance& instance, const SolverParams& params);

}  // namespace emu
