// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include "brute_force.hpp"
#include "fixtures.hpp"

#include "emu/catalog.hpp"
#include "emu/errors.hpp"
#include "emu/evaluator.hpp"
#include "emu/export.hpp"
#include "emu/instance_io.hpp"
#include "emu/oracle.hpp"
#include "emu/paths.hpp"
#include "emu/solver.hpp"

#include <spdlog/spdlog.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace emu;
using namespace emu::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            if (pass) detail = what;
            pass = false;
        }
    }
};

Outcome regulation_fidelity() {
    Outcome out;
    const auto crh2a = find_bundled_type("CRH2A");
    out.require(crh2a.has_value(), "CRH2A missing");
    if (!crh2a) return out;
    out.require(crh2a->regulation(MaintenanceLevel::Third).window() == KilometerWindow{550'000, 620'000},
                "CRH2A third window");
    out.require(crh2a->regulation(MaintenanceLevel::Fourth).window() == KilometerWindow{1'100'000, 1'250'000},
                "CRH2A fourth window");
    out.require(crh2a->regulation(MaintenanceLevel::Fifth).window() == KilometerWindow{2'300'000, 2'500'000},
                "CRH2A fifth window");
    const std::vector<std::string> names = {"CRH2A", "CRH2B", "CRH2C-1", "CRH2C-2", "CRH380A", "CRH380AL"};
    const std::vector<Kilometers> daily = {1500, 1500, 1600, 1800, 1900, 1900};
    const auto& types = bundled_types();
    out.require(types.size() == names.size(), "bundled type count");
    for (std::size_t i = 0; i < names.size() && i < types.size(); ++i) {
        out.require(types[i].name == names[i], "type order at " + names[i]);
        out.require(types[i].daily_mileage == daily[i], "daily mileage of " + names[i]);
        for (auto level : kAllLevels) {
            out.require(types[i].regulation(level).window() == crh2a->regulation(level).window(),
                        "shared regulation of " + names[i]);
        }
    }
    if (out.pass) out.detail = "6 types, windows and daily mileages exact";
    return out;
}

Outcome dominance() {
    Outcome out;
    for (const auto& type : bundled_types()) {
        const auto base = type.regulation(MaintenanceLevel::Third).base_mileage;
        out.require(base < static_cast<Kilometers>(kThirdLevelDayLimit) * type.daily_mileage,
                    type.name + " reaches the calendar trigger first");
        out.require(mileage_trigger_dominates(type), type.name + " dominance helper disagrees");
    }
    const auto crh2a = *find_bundled_type("CRH2A");
    const auto base = crh2a.regulation(MaintenanceLevel::Third).base_mileage;
    out.require(base % crh2a.daily_mileage == 0 && base / crh2a.daily_mileage == 400, "CRH2A ratio is not 400");
    if (out.pass) out.detail = "CRH2A 600000/1500 = 400 < 548 days; all types dominated";
    return out;
}

Outcome path_oracle_equivalence() {
    Outcome out;
    Rng rng(20261018);
    const auto start = Clock::now();
    int instances = 0;
    int train_sets = 0;
    int paths = 0;
    while (instances < 60) {
        const int K = std::uniform_int_distribution<int>(1, 30)(rng);
        const auto type = random_toy_type(rng);
        for (int e = 0; e < 3; ++e) {
            const auto ts = random_train_set(type, "R" + std::to_string(instances) + "_" + std::to_string(e), rng);
            const auto expected = brute_force_paths(ts, K);
            std::set<std::string> actual;
            try {
                actual = signatures(generate_feasible_paths(ts, build_network(K)));
            } catch (const UnschedulableError&) {
            }
            out.require(actual == expected, "mismatch on " + ts.id + " K=" + std::to_string(K));
            paths += static_cast<int>(expected.size());
            ++train_sets;
        }
        ++instances;
    }
    const double elapsed = seconds_since(start);
    out.require(elapsed < 5.0, "took " + std::to_string(elapsed) + " s");
    if (out.pass) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%d instances, %d train-sets, %d paths agree; %.3f s", instances, train_sets,
                      paths, elapsed);
        out.detail = buf;
    }
    return out;
}

Outcome evaluator_identities() {
    Outcome out;
    Rng rng(4242);
    int checked = 0;
    int feasible = 0;
    for (const char* name : {"toy3", "mixed4"}) {
        const auto inst = load_fixture(name);
        const auto catalog = build_path_catalog(inst);
        const PenaltyWeights weights;
        for (int i = 0; i < 500; ++i) {
            std::vector<std::uint32_t> genes;
            for (std::size_t b = 0; b < catalog.blocks(); ++b) {
                genes.push_back(std::uniform_int_distribution<std::uint32_t>(
                    0, static_cast<std::uint32_t>(catalog.block_size(b) - 1))(rng));
            }
            const auto solution = decode(inst, catalog, genes, weights);
            const auto& ev = solution.evaluation;
            out.require(ev.penalized >= ev.objective, "Z_pen < Z");
            out.require((ev.penalized == ev.objective) == solution.report.feasible(), "equality iff feasible");
            for (Day d = 1; d <= inst.horizon_days; ++d) {
                const int total = solution.counts.at(d, 1) + solution.counts.in_maintenance(d);
                out.require(total == inst.fleet_size(), std::string(name) + " day " + std::to_string(d));
            }
            feasible += solution.report.feasible();
            ++checked;
        }
    }
    if (out.pass) {
        out.detail = std::to_string(checked) + " solutions (" + std::to_string(feasible) + " feasible), 0 violations";
    }
    return out;
}

Outcome monotonicity() {
    Outcome out;
    TrainSet ts;
    ts.id = "M";
    ts.type = *find_bundled_type("CRH2A");
    ts.initial_mileage = 550'000;
    ts.initial_days = 367;
    const auto inst = make_instance({ts}, 60, 0, 1);
    const auto catalog = build_path_catalog(inst);
    const auto window = due_window_days(ts, ts.initial_mileage);
    const auto& block = catalog.paths[0];
    out.require(!block.empty(), "no paths");
    double previous = INFINITY;
    double best = INFINITY;
    Day best_day = 0;
    Day last_day = 0;
    int swept = 0;
    for (std::size_t i = 0; i < block.size(); ++i) {
        const auto days = block[i].dispatch_days();
        out.require(days.size() == 1, "expected exactly one event");
        if (days.size() != 1) continue;
        const Schedule s{{block[i]}};
        const double z = objective(s, inst, 0.0001);
        out.require(z <= previous, "objective rose at day " + std::to_string(days[0]));
        out.require(days[0] > last_day, "paths not in dispatch order");
        previous = z;
        if (z <= best) {
            best = z;
            best_day = days[0];
        }
        last_day = days[0];
        ++swept;
    }
    out.require(last_day == window.latest, "sweep does not end at the latest day");
    out.require(best_day == window.latest, "minimum not at the latest day");
    if (out.pass) {
        out.detail = "swept days " + std::to_string(block.front().dispatch_days()[0]) + ".." +
                     std::to_string(last_day) + " (" + std::to_string(swept) + " paths), Z minimal at day " +
                     std::to_string(best_day);
    }
    return out;
}

struct SolverRuns {
    Instance instance;
    std::vector<SolveResult> runs;
};

Outcome solver_vs_oracle(SolverRuns& keep) {
    Outcome out;
    keep.instance = load_fixture("toy3");
    const auto& inst = keep.instance;
    const auto catalog = build_path_catalog(inst);
    out.require(catalog.combinations() <= 10'000, "search space too large");
    const SolverParams defaults;
    const auto oracle = enumerate_optimal(inst, catalog, defaults.weights());
    out.require(oracle.feasible, "oracle found no feasible solution");
    const double optimum = oracle.solution.evaluation.objective;
    std::string timings;
    for (std::uint64_t seed : {1u, 2u, 3u, 4u, 5u}) {
        auto params = defaults;
        params.rng_seed = seed;
        const auto start = Clock::now();
        auto result = solve(inst, catalog, params);
        const double elapsed = seconds_since(start);
        out.require(result.best.feasible(), "seed " + std::to_string(seed) + " infeasible");
        out.require(result.best.evaluation.objective == optimum,
                    "seed " + std::to_string(seed) + " Z=" + std::to_string(result.best.evaluation.objective) +
                        " vs optimum " + std::to_string(optimum));
        out.require(elapsed <= 60.0, "seed " + std::to_string(seed) + " took " + std::to_string(elapsed) + " s");
        char buf[32];
        std::snprintf(buf, sizeof buf, "%s%.2fs", timings.empty() ? "" : "/", elapsed);
        timings += buf;
        keep.runs.push_back(std::move(result));
    }
    if (out.pass) {
        char buf[200];
        std::snprintf(buf, sizeof buf, "Z=%.4f equals oracle over %llu combinations for seeds 1-5 (%s)", optimum,
                      static_cast<unsigned long long>(oracle.combinations), timings.c_str());
        out.detail = buf;
    }
    return out;
}

Outcome parameter_fidelity() {
    Outcome out;
    const SolverParams p;
    out.require(p.cost_c == 0.0001, "c");
    out.require(p.lambda1 == 100.0, "lambda1");
    out.require(p.lambda2 == 80.0, "lambda2");
    out.require(p.sizepop == 30, "sizepop");
    out.require(p.p_crossover == 0.88, "p_c");
    out.require(p.p_mutation == 0.08, "p_m");
    out.require(p.max_generations == 3000, "MAXT");
    out.require(p.initial_temperature == 100.0, "T0");
    out.require(p.final_temperature == 1.0, "T_end");
    out.require(p.cooling_rate == 0.8, "alpha");
    const auto steps = cooling_schedule(p).size();
    out.require(steps == 21, "cooling steps = " + std::to_string(steps));
    const auto file = load_params(data_path("default_params.json"));
    out.require(file == p, "default_params.json differs from the built-in defaults");
    if (out.pass) out.detail = "defaults exact, 21 cooling steps";
    return out;
}

Outcome operator_statistics() {
    Outcome out;
    Rng rng(8675309);
    const std::vector<double> fits = {0.05, 0.1, 0.15, 0.3, 0.4};
    Population pop;
    for (std::uint32_t i = 0; i < fits.size(); ++i) pop.push_back({{i}});
    const auto chosen = select(pop, fits, rng, 100'000);
    std::vector<int> hits(fits.size(), 0);
    for (const auto& c : chosen) ++hits[c.genes[0]];
    double worst = 0.0;
    for (std::size_t i = 0; i < fits.size(); ++i) {
        worst = std::max(worst, std::abs(hits[i] / 1e5 - fits[i]));
    }
    out.require(worst <= 0.01, "roulette deviation " + std::to_string(worst));

    double worst_sa = 0.0;
    for (double temperature : {100.0, 1.0}) {
        int accepted = 0;
        for (int i = 0; i < 100'000; ++i) accepted += sa_accept(0.0, 1.0, temperature, rng);
        const double expected = std::exp(-1.0 / temperature);
        worst_sa = std::max(worst_sa, std::abs(accepted / 1e5 - expected));
    }
    out.require(worst_sa <= 0.01, "SA deviation " + std::to_string(worst_sa));
    if (out.pass) {
        char buf[120];
        std::snprintf(buf, sizeof buf, "max roulette deviation %.4f, max SA deviation %.4f", worst, worst_sa);
        out.detail = buf;
    }
    return out;
}

Outcome determinism(const SolverRuns& previous) {
    Outcome out;
    const auto& inst = previous.instance;
    out.require(!previous.runs.empty(), "no earlier solver run");
    if (previous.runs.empty()) return out;
    SolverParams params;
    params.rng_seed = 1;
    const auto again = solve(inst, params);
    const auto render = [&](const SolveResult& r) {
        SolutionInfo info{"ga-sa", params.rng_seed, {{"generations", r.generations}, {"evaluations", r.evaluations}}};
        return std::make_pair(solution_to_json(r.best, inst, params.weights(), info).dump(2),
                              render_gantt(r.best.schedule, inst));
    };
    const auto a = render(previous.runs.front());
    const auto b = render(again);
    out.require(a.first == b.first, "solution JSON differs");
    out.require(a.second == b.second, "SVG differs");
    out.require(trace_csv(previous.runs.front().trace) == trace_csv(again.trace), "trace differs");
    if (out.pass) {
        out.detail = "seed 1 twice: " + std::to_string(a.first.size()) + " JSON bytes, " +
                     std::to_string(a.second.size()) + " SVG bytes identical";
    }
    return out;
}

}  // namespace

int main() {
    spdlog::set_level(spdlog::level::warn);
    int failures = 0;
    auto run = [&](int number, const char* title, const std::function<Outcome()>& check) {
        Outcome outcome;
        try {
            outcome = check();
        } catch (const std::exception& e) {
            outcome.pass = false;
            outcome.detail = std::string("exception: ") + e.what();
        }
        std::printf("[%s] %d. %s: %s\n", outcome.pass ? "PASS" : "FAIL", number, title, outcome.detail.c_str());
        std::fflush(stdout);
        failures += outcome.pass ? 0 : 1;
    };

    SolverRuns runs;
    run(1, "regulation fidelity", regulation_fidelity);
    run(2, "mileage dominance", dominance);
    run(3, "path generator vs brute force", path_oracle_equivalence);
    run(4, "evaluator identities", evaluator_identities);
    run(5, "monotonicity in dispatch day", monotonicity);
    run(6, "solver vs exact oracle", [&] { return solver_vs_oracle(runs); });
    run(7, "parameter fidelity", parameter_fidelity);
    run(8, "stochastic operator statistics", operator_statistics);
    run(9, "determinism", [&] { return determinism(runs); });

    std::printf("%d of 9 criteria passed\n", 9 - failures);
    return failures == 0 ? 0 : 1;
}
