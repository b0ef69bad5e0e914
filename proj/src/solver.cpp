#include "emu/solver.hpp"

#include "emu/errors.hpp"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace emu {

void SolverParams::check() const {
    if (!(cost_c >= 0.0)) throw std::invalid_argument("cost_c must be >= 0");
    if (!(lambda1 >= 0.0) || !(lambda2 >= 0.0)) throw std::invalid_argument("penalty weights must be >= 0");
    if (sizepop < 2) throw std::invalid_argument("sizepop must be >= 2");
    if (!(p_crossover >= 0.0 && p_crossover <= 1.0)) throw std::invalid_argument("p_crossover must be in [0,1]");
    if (!(p_mutation >= 0.0 && p_mutation <= 1.0)) throw std::invalid_argument("p_mutation must be in [0,1]");
    if (max_generations < 1) throw std::invalid_argument("max_generations must be >= 1");
    if (!(final_temperature > 0.0) || !(initial_temperature > final_temperature)) {
        throw std::invalid_argument("temperatures must satisfy T0 > T_end > 0");
    }
    if (!(cooling_rate > 0.0 && cooling_rate < 1.0)) throw std::invalid_argument("cooling_rate must be in (0,1)");
    if (!(fitness_epsilon > 0.0)) throw std::invalid_argument("fitness_epsilon must be > 0");
}

std::vector<std::string> SolverParams::warnings() const {
    std::vector<std::string> out;
    if (lambda1 <= lambda2) {
        out.emplace_back("lambda1 <= lambda2: availability shortfall is weighted no heavier than capacity excess");
    }
    return out;
}

std::vector<double> cooling_schedule(const SolverParams& params) {
    std::vector<double> temperatures;
    for (double t = params.initial_temperature; t >= params.final_temperature; t *= params.cooling_rate) {
        temperatures.push_back(t);
    }
    return temperatures;
}

Population init_population(const PathCatalog& catalog, const SolverParams& params, Rng& rng) {
    for (std::size_t e = 0; e < catalog.blocks(); ++e) {
        if (catalog.block_size(e) == 0) {
            const auto id = catalog.paths[e].empty() ? std::to_string(e) : catalog.paths[e].front().train_set_id;
            throw UnschedulableError(id, "block " + std::to_string(e) + " has no feasible path");
        }
    }
    Population population(static_cast<std::size_t>(params.sizepop));
    for (auto& chromosome : population) {
        chromosome.genes.resize(catalog.blocks());
        for (std::size_t e = 0; e < catalog.blocks(); ++e) {
            std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(catalog.block_size(e) - 1));
            chromosome.genes[e] = pick(rng);
        }
    }
    return population;
}

double fitness(double penalized_objective, double epsilon) { return 1.0 / (penalized_objective + epsilon); }

double fitness(const Chromosome& chromosome, const AssignmentEvaluator& evaluator, const SolverParams& params) {
    return fitness(evaluator.evaluate(chromosome.genes).penalized, params.fitness_epsilon);
}

Population select(const Population& population, std::span<const double> fitnesses, Rng& rng, std::size_t count) {
    if (population.size() != fitnesses.size()) throw std::invalid_argument("one fitness per individual required");
    std::discrete_distribution<std::size_t> wheel(fitnesses.begin(), fitnesses.end());
    Population chosen;
    chosen.reserve(count);
    for (std::size_t i = 0; i < count; ++i) chosen.push_back(population[wheel(rng)]);
    return chosen;
}

Population select(const Population& population, std::span<const double> fitnesses, Rng& rng) {
    return select(population, fitnesses, rng, population.size());
}

void swap_blocks(Chromosome& a, Chromosome& b, std::size_t first, std::size_t last) {
    if (a.genes.size() != b.genes.size()) throw std::invalid_argument("parents differ in block count");
    if (first > last || last >= a.genes.size()) throw std::out_of_range("block range out of bounds");
    std::swap_ranges(a.genes.begin() + static_cast<std::ptrdiff_t>(first),
                     a.genes.begin() + static_cast<std::ptrdiff_t>(last) + 1,
                     b.genes.begin() + static_cast<std::ptrdiff_t>(first));
}

std::pair<Chromosome, Chromosome> crossover(const Chromosome& a, const Chromosome& b, const SolverParams& params,
                                            Rng& rng) {
    if (a.genes.size() != b.genes.size()) throw std::invalid_argument("parents differ in block count");
    std::pair<Chromosome, Chromosome> children{a, b};
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    if (a.genes.empty() || !(coin(rng) < params.p_crossover)) return children;
    std::uniform_int_distribution<std::size_t> block(0, a.genes.size() - 1);
    auto first = block(rng);
    auto last = block(rng);
    if (first > last) std::swap(first, last);
    swap_blocks(children.first, children.second, first, last);
    return children;
}

Chromosome mutate(Chromosome chromosome, const PathCatalog& catalog, const SolverParams& params, Rng& rng) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    if (chromosome.genes.empty() || !(coin(rng) < params.p_mutation)) return chromosome;
    std::uniform_int_distribution<std::size_t> block(0, chromosome.genes.size() - 1);
    const auto e = block(rng);
    const auto size = static_cast<std::uint32_t>(catalog.block_size(e));
    if (size < 2) return chromosome;
    // Uniform over the size - 1 alternatives to the current gene.
    std::uniform_int_distribution<std::uint32_t> other(0, size - 2);
    auto gene = other(rng);
    if (gene >= chromosome.genes[e]) ++gene;
    chromosome.genes[e] = gene;
    return chromosome;
}

double acceptance_probability(double child_fitness, double parent_fitness, double temperature) {
    if (!(temperature > 0.0)) throw std::invalid_argument("temperature must be > 0");
    if (child_fitness > parent_fitness) return 1.0;
    return std::exp((child_fitness - parent_fitness) / temperature);
}

bool sa_accept(double child_fitness, double parent_fitness, double temperature, Rng& rng) {
    if (child_fitness > parent_fitness) return true;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    return coin(rng) < acceptance_probability(child_fitness, parent_fitness, temperature);
}

const Chromosome& sa_survival(const Chromosome& parent, const Chromosome& child, double temperature,
                              const AssignmentEvaluator& evaluator, const SolverParams& params, Rng& rng) {
    const double parent_fit = fitness(parent, evaluator, params);
    const double child_fit = fitness(child, evaluator, params);
    return sa_accept(child_fit, parent_fit, temperature, rng) ? child : parent;
}

void run_generation(std::vector<Individual>& population, double temperature, const PathCatalog& catalog,
                    const AssignmentEvaluator& evaluator, const SolverParams& params, Rng& rng,
                    std::vector<Individual>& offspring) {
    const std::size_t n = population.size();
    Population parents;
    std::vector<double> fits;
    parents.reserve(n);
    fits.reserve(n);
    for (const auto& ind : population) {
        parents.push_back(ind.chromosome);
        fits.push_back(ind.fitness);
    }

    auto selected = select(parents, fits, rng, n);
    for (std::size_t i = 0; i + 1 < n; i += 2) {
        auto [left, right] = crossover(selected[i], selected[i + 1], params, rng);
        selected[i] = std::move(left);
        selected[i + 1] = std::move(right);
    }

    offspring.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto& child = offspring[i];
        child.chromosome = mutate(std::move(selected[i]), catalog, params, rng);
        child.evaluation = evaluator.evaluate(child.chromosome.genes);
        child.fitness = fitness(child.evaluation.penalized, params.fitness_epsilon);
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (sa_accept(offspring[i].fitness, population[i].fitness, temperature, rng)) population[i] = offspring[i];
    }
}

SolveResult solve(const Instance& instance, const PathCatalog& catalog, const SolverParams& params) {
    params.check();
    const auto weights = params.weights();
    const AssignmentEvaluator evaluator(instance, catalog, weights);
    SolveResult result;

    if (catalog.combinations() == 1) {
        const std::vector<std::uint32_t> genes(catalog.blocks(), 0);
        result.best = decode(instance, catalog, genes, weights);
        result.evaluations = 1;
        return result;
    }

    Rng rng(params.rng_seed);
    std::vector<Individual> population;
    for (auto& chromosome : init_population(catalog, params, rng)) {
        Individual ind{std::move(chromosome), {}, 0.0};
        ind.evaluation = evaluator.evaluate(ind.chromosome.genes);
        ind.fitness = fitness(ind.evaluation.penalized, params.fitness_epsilon);
        population.push_back(std::move(ind));
    }
    result.evaluations = static_cast<long>(population.size());

    Chromosome best = population.front().chromosome;
    double best_value = population.front().evaluation.penalized;
    auto consider = [&](const Individual& ind) {
        if (ind.evaluation.penalized < best_value) {
            best_value = ind.evaluation.penalized;
            best = ind.chromosome;
        }
    };
    for (const auto& ind : population) consider(ind);

    std::vector<Individual> offspring;
    const auto temperatures = cooling_schedule(params);
    for (std::size_t step = 0; step < temperatures.size(); ++step) {
        const double temperature = temperatures[step];
        for (int generation = 0; generation < params.max_generations; ++generation) {
            run_generation(population, temperature, catalog, evaluator, params, rng, offspring);
            result.evaluations += static_cast<long>(offspring.size());
            for (const auto& child : offspring) consider(child);
            ++result.generations;
            result.trace.push_back({result.generations, static_cast<int>(step), temperature, best_value});
        }
        ++result.cooling_steps;
        spdlog::debug("T={:.4f} step {} best Z_pen={:.6f}", temperature, step, best_value);
    }

    result.best = decode(instance, catalog, best.genes, weights);
    spdlog::info("solve finished: {} generations, {} cooling steps, best Z_pen={:.6f}", result.generations,
                 result.cooling_steps, result.best.evaluation.penalized);
    return result;
}

SolveResult solve(const Instance& instance, const SolverParams& params) {
    return solve(instance, build_path_catalog(instance), params);
}

}  // namespace emu
