#include "doctest.h"

#include "fixtures.hpp"

#include "emu/catalog.hpp"
#include "emu/solver.hpp"

#include <cmath>
#include <stdexcept>

using namespace emu;
using namespace emu::testing;

namespace {

FeasiblePath dummy(std::string id, Day day) {
    return {std::move(id), std::nullopt, {{MaintenanceLevel::Third, day, day + 10, 0}}};
}

PathCatalog sized_catalog(std::vector<std::size_t> sizes) {
    PathCatalog c;
    for (std::size_t b = 0; b < sizes.size(); ++b) {
        std::vector<FeasiblePath> block;
        for (std::size_t i = 0; i < sizes[b]; ++i) block.push_back(dummy("B" + std::to_string(b), static_cast<Day>(i + 2)));
        c.paths.push_back(block);
    }
    return c;
}

}  // namespace

TEST_CASE("defaults and validation") {
    const SolverParams p;
    CHECK(p.cost_c == 0.0001);
    CHECK(p.lambda1 == 100.0);
    CHECK(p.lambda2 == 80.0);
    CHECK(p.sizepop == 30);
    CHECK(p.p_crossover == 0.88);
    CHECK(p.p_mutation == 0.08);
    CHECK(p.max_generations == 3000);
    CHECK(p.initial_temperature == 100.0);
    CHECK(p.final_temperature == 1.0);
    CHECK(p.cooling_rate == 0.8);
    CHECK_NOTHROW(p.check());
    CHECK(p.warnings().empty());

    auto bad = p;
    bad.cooling_rate = 1.0;
    CHECK_THROWS_AS(bad.check(), std::invalid_argument);
    bad = p;
    bad.sizepop = 1;
    CHECK_THROWS_AS(bad.check(), std::invalid_argument);
    bad = p;
    bad.final_temperature = 200.0;
    CHECK_THROWS_AS(bad.check(), std::invalid_argument);
    bad = p;
    bad.p_mutation = 1.5;
    CHECK_THROWS_AS(bad.check(), std::invalid_argument);
    bad = p;
    bad.lambda1 = 50.0;
    CHECK_FALSE(bad.warnings().empty());
}

TEST_CASE("cooling schedule") {
    const auto temps = cooling_schedule(SolverParams{});
    REQUIRE(temps.size() == 21);
    CHECK(temps.front() == 100.0);
    CHECK(temps.back() == doctest::Approx(100.0 * std::pow(0.8, 20)));
    CHECK(temps.back() >= 1.0);
}

TEST_CASE("init_population") {
    SolverParams p;
    Rng rng(3);
    const auto single = init_population(sized_catalog({1}), p, rng);
    REQUIRE(single.size() == 30);
    for (const auto& c : single) CHECK(c == single.front());

    const auto pop = init_population(sized_catalog({3, 4}), p, rng);
    for (const auto& c : pop) {
        CHECK(c.genes[0] < 3);
        CHECK(c.genes[1] < 4);
    }
    Rng a(99);
    Rng b(99);
    CHECK(init_population(sized_catalog({5, 6, 7}), p, a) == init_population(sized_catalog({5, 6, 7}), p, b));
    CHECK_THROWS((void)init_population(sized_catalog({2, 0}), p, rng));
}

TEST_CASE("fitness") {
    CHECK(fitness(4.0, 1e-9) == doctest::Approx(0.25));
    CHECK(std::isfinite(fitness(0.0, 1e-9)));
    CHECK(fitness(0.0, 1e-9) == doctest::Approx(1e9));
    CHECK(fitness(3.0, 1e-9) > fitness(3.5, 1e-9));
}

TEST_CASE("roulette selection") {
    Population pop{{{0}}, {{1}}, {{2}}};
    const std::vector<double> fits = {0.2, 0.3, 0.5};
    Rng rng(5);
    const auto chosen = select(pop, fits, rng, 100'000);
    std::array<int, 3> hits{};
    for (const auto& c : chosen) ++hits[c.genes[0]];
    CHECK(hits[0] / 1e5 == doctest::Approx(0.2).epsilon(0.05));
    CHECK(hits[1] / 1e5 == doctest::Approx(0.3).epsilon(0.05));
    CHECK(hits[2] / 1e5 == doctest::Approx(0.5).epsilon(0.05));

    const std::vector<double> equal = {1.0, 1.0, 1.0};
    const auto uniform = select(pop, equal, rng, 30'000);
    std::array<int, 3> u{};
    for (const auto& c : uniform) ++u[c.genes[0]];
    for (int n : u) CHECK(std::abs(n - 10'000) < 500);
    CHECK(select(pop, equal, rng).size() == 3);
}

TEST_CASE("crossover") {
    Chromosome a{{1, 2, 3}};
    Chromosome b{{7, 8, 9}};
    auto x = a;
    auto y = b;
    swap_blocks(x, y, 1, 1);
    CHECK(x.genes == std::vector<std::uint32_t>{1, 8, 3});
    CHECK(y.genes == std::vector<std::uint32_t>{7, 2, 9});
    x = a;
    y = b;
    swap_blocks(x, y, 0, 2);
    CHECK(x == b);
    CHECK(y == a);
    CHECK_THROWS_AS(swap_blocks(x, y, 2, 3), std::out_of_range);

    SolverParams always;
    always.p_crossover = 1.0;
    Rng rng(1);
    for (int i = 0; i < 50; ++i) {
        const auto [c, d] = crossover(a, a, always, rng);
        CHECK(c == a);
        CHECK(d == a);
        const auto [e, f] = crossover(a, b, always, rng);
        for (std::size_t k = 0; k < 3; ++k) {
            CHECK(e.genes[k] + f.genes[k] == a.genes[k] + b.genes[k]);
        }
    }
    SolverParams never;
    never.p_crossover = 0.0;
    const auto [g, h] = crossover(a, b, never, rng);
    CHECK(g == a);
    CHECK(h == b);
}

TEST_CASE("mutation") {
    SolverParams always;
    always.p_mutation = 1.0;
    Rng rng(2);
    CHECK(mutate(Chromosome{{0}}, sized_catalog({1}), always, rng) == Chromosome{{0}});
    CHECK(mutate(Chromosome{{0}}, sized_catalog({2}), always, rng) == Chromosome{{1}});
    const auto catalog = sized_catalog({3, 5, 2});
    Chromosome c{{0, 0, 0}};
    for (int i = 0; i < 200; ++i) {
        const auto m = mutate(c, catalog, always, rng);
        int changed = 0;
        for (std::size_t k = 0; k < 3; ++k) {
            CHECK(m.genes[k] < catalog.block_size(k));
            changed += m.genes[k] != c.genes[k];
        }
        CHECK(changed == 1);
        c = m;
    }
}

TEST_CASE("simulated-annealing acceptance") {
    CHECK(acceptance_probability(2.0, 1.0, 100.0) == 1.0);
    CHECK(acceptance_probability(1.0, 1.0, 100.0) == 1.0);
    CHECK(acceptance_probability(0.0, 1.0, 100.0) == doctest::Approx(0.99005).epsilon(1e-5));
    CHECK_THROWS_AS((void)acceptance_probability(0.0, 1.0, 0.0), std::invalid_argument);
    Rng rng(4);
    for (int i = 0; i < 100; ++i) CHECK(sa_accept(2.0, 1.0, 0.5, rng));
    int accepted = 0;
    for (int i = 0; i < 100'000; ++i) accepted += sa_accept(0.0, 1.0, 1.0, rng);
    CHECK(std::abs(accepted / 1e5 - std::exp(-1.0)) < 0.01);
}

TEST_CASE("sa_survival on a real instance") {
    const auto inst = load_fixture("toy3");
    const auto catalog = build_path_catalog(inst);
    const SolverParams p;
    const AssignmentEvaluator evaluator(inst, catalog, p.weights());
    Rng rng(8);
    const Chromosome good{{1, 6, 10}};   // days 41, 51, 78: optimal
    const Chromosome worse{{0, 0, 0}};  // days 40, 45, 68: overlaps and festival shortfall
    CHECK(&sa_survival(worse, good, 1.0, evaluator, p, rng) == &good);
}

TEST_CASE("singleton search space returns after one evaluation") {
    TrainSet ts;
    ts.id = "S";
    ts.type = toy_type(1000, 3000, 0, 0, {4, 6, 8});
    ts.initial_mileage = 1000;
    ts.initial_days = 1;
    ts.last_level = MaintenanceLevel::Fifth;
    const auto inst = make_instance({ts}, 8, 0, 1);
    const auto catalog = build_path_catalog(inst);
    REQUIRE(catalog.combinations() == 1);
    const auto result = solve(inst, catalog, SolverParams{});
    CHECK(result.evaluations == 1);
    CHECK(result.best.genes == std::vector<std::uint32_t>{0});
    CHECK(result.best.schedule.paths[0].dispatch_days() == std::vector<Day>{3});
}

TEST_CASE("short run is deterministic and never loses its best") {
    const auto inst = load_fixture("mixed4");
    SolverParams p;
    p.max_generations = 40;
    p.rng_seed = 17;
    const auto a = solve(inst, p);
    const auto b = solve(inst, p);
    CHECK(a.best.genes == b.best.genes);
    CHECK(a.evaluations == b.evaluations);
    CHECK(a.cooling_steps == 21);
    CHECK(a.generations == 21 * 40);
    REQUIRE(a.trace.size() == static_cast<std::size_t>(a.generations));
    for (std::size_t i = 1; i < a.trace.size(); ++i) {
        CHECK(a.trace[i].best_penalized <= a.trace[i - 1].best_penalized);
    }
    CHECK(a.best.evaluation.penalized == a.trace.back().best_penalized);
}
