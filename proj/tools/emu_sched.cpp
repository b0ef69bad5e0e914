// emu-sched: command-line front end for the maintenance scheduler.
#include "emu/catalog.hpp"
#include "emu/errors.hpp"
#include "emu/evaluator.hpp"
#include "emu/export.hpp"
#include "emu/instance_io.hpp"
#include "emu/network.hpp"
#include "emu/oracle.hpp"
#include "emu/paths.hpp"
#include "emu/solver.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kInvalidInput = 2, kUnschedulable = 3, kBudget = 4 };

void setup_logging() {
    auto logger = spdlog::stderr_color_mt("emu-sched");
    logger->set_pattern("[%l] %v");
    spdlog::set_default_logger(logger);
    spdlog::set_level(spdlog::level::warn);
    if (const char* env = std::getenv("EMU_SCHED_LOG"); env != nullptr && *env != '\0') {
        spdlog::set_level(spdlog::level::from_str(env));
    }
}

int report_error(std::string_view kind, const std::string& message, int code, const json& extra = json::object()) {
    json doc = {{"error", kind}, {"message", message}, {"exit_code", code}};
    for (const auto& [key, value] : extra.items()) doc[key] = value;
    std::cerr << doc.dump() << '\n';
    return code;
}

emu::Instance load_checked(const std::string& path) {
    auto instance = emu::load_instance(path);
    for (const auto& warning : emu::instance_warnings(instance)) spdlog::warn("{}", warning);
    return instance;
}

std::string describe(const emu::FeasiblePath& path) {
    if (path.events.empty()) return "(no maintenance)";
    std::string text;
    for (const auto& event : path.events) {
        if (!text.empty()) text += ' ';
        text += std::string(emu::to_string(event.level)) + '@' + std::to_string(event.dispatch_day) + "->" +
                std::to_string(event.return_day) + " [" + std::to_string(event.mileage_at_dispatch) + " km]";
    }
    return text;
}

void write_outputs(const emu::Solution& solution, const emu::Instance& instance, const fs::path& dir,
                   const emu::PenaltyWeights& weights, const emu::SolutionInfo& info) {
    emu::export_schedule(solution, instance, dir, weights, info);
    emu::write_text_file(dir / "report.json", emu::report_to_json(solution.report).dump(2) + "\n");
}

void print_summary(const emu::Solution& solution) {
    const auto& ev = solution.evaluation;
    std::cout << "objective " << ev.objective << " (" << ev.mileage_loss_km << " km)"
              << ", penalized " << ev.penalized << ", " << (solution.feasible() ? "feasible" : "infeasible")
              << '\n';
}

int cmd_validate(const std::string& instance_path, const std::string& solution_path, bool as_json) {
    const auto instance = load_checked(instance_path);
    if (solution_path.empty()) {
        if (as_json) {
            std::cout << json{{"instance", instance.name},
                              {"horizon_days", instance.horizon_days},
                              {"fleet_size", instance.fleet_size()},
                              {"warnings", emu::instance_warnings(instance)}}
                             .dump(2)
                      << '\n';
        } else {
            std::cout << instance.name << ": " << instance.fleet_size() << " train-sets, " << instance.horizon_days
                      << " days, ok\n";
        }
        return kOk;
    }
    const auto schedule = emu::load_schedule(solution_path, instance);
    const auto report = emu::validate(schedule, instance);
    if (as_json) {
        std::cout << emu::report_to_json(report).dump(2) << '\n';
    } else {
        std::cout << report.to_text();
        if (report.feasible()) std::cout << "feasible\n";
    }
    return kOk;
}

int cmd_paths(const std::string& instance_path, const std::string& train_set_id,
              const std::optional<std::string>& dot_target, bool as_json) {
    const auto instance = load_checked(instance_path);
    const auto network = emu::build_network(instance.horizon_days);
    if (dot_target) {
        if (dot_target->empty() || *dot_target == "-") {
            std::cout << network.to_dot();
        } else {
            emu::write_text_file(*dot_target, network.to_dot());
        }
    }
    if (train_set_id.empty()) return kOk;
    const auto* ts = instance.find_train_set(train_set_id);
    if (ts == nullptr) {
        return report_error("usage", "unknown train-set '" + train_set_id + "'", kUsage);
    }
    const auto paths = emu::generate_feasible_paths(*ts, network);
    if (as_json) {
        json list = json::array();
        for (std::size_t i = 0; i < paths.size(); ++i) {
            json events = json::array();
            for (const auto& e : paths[i].events) {
                events.push_back({{"level", std::string(emu::to_string(e.level))},
                                  {"dispatch_day", e.dispatch_day},
                                  {"return_day", e.return_day},
                                  {"mileage_at_dispatch_km", e.mileage_at_dispatch}});
            }
            list.push_back({{"index", i}, {"events", events}});
        }
        std::cout << json{{"train_set_id", train_set_id}, {"count", paths.size()}, {"paths", list}}.dump(2) << '\n';
    } else {
        std::cout << train_set_id << ": " << paths.size() << " feasible paths\n";
        for (std::size_t i = 0; i < paths.size(); ++i) std::cout << i << '\t' << describe(paths[i]) << '\n';
    }
    return kOk;
}

int cmd_solve(const std::string& instance_path, std::optional<std::uint64_t> seed, const std::string& params_path,
              const fs::path& out_dir) {
    const auto instance = load_checked(instance_path);
    auto params = params_path.empty() ? emu::SolverParams{} : emu::load_params(params_path);
    if (seed) params.rng_seed = *seed;
    for (const auto& warning : params.warnings()) spdlog::warn("{}", warning);

    const auto catalog = emu::build_path_catalog(instance);
    const auto started = std::chrono::steady_clock::now();
    const auto result = emu::solve(instance, catalog, params);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started;
    spdlog::info("solved in {:.3f} s ({} evaluations)", elapsed.count(), result.evaluations);

    emu::SolutionInfo info;
    info.method = "ga-sa";
    info.seed = params.rng_seed;
    info.stats = {{"cooling_steps", result.cooling_steps},
                  {"generations", result.generations},
                  {"evaluations", result.evaluations},
                  {"combinations", catalog.combinations()},
                  {"params", emu::params_to_json(params)}};
    write_outputs(result.best, instance, out_dir, params.weights(), info);
    emu::write_text_file(out_dir / "trace.csv", emu::trace_csv(result.trace));
    print_summary(result.best);
    return kOk;
}

int cmd_exact(const std::string& instance_path, const fs::path& out_dir, std::uint64_t budget,
              const std::string& params_path) {
    const auto instance = load_checked(instance_path);
    const auto params = params_path.empty() ? emu::SolverParams{} : emu::load_params(params_path);
    const auto catalog = emu::build_path_catalog(instance);
    const auto result = emu::enumerate_optimal(instance, catalog, params.weights(), {budget});
    emu::SolutionInfo info;
    info.method = "exact";
    info.stats = {{"combinations", result.combinations}};
    write_outputs(result.solution, instance, out_dir, params.weights(), info);
    print_summary(result.solution);
    return kOk;
}

int cmd_gantt(const std::string& instance_path, const std::string& solution_path, const fs::path& out) {
    const auto instance = load_checked(instance_path);
    const auto schedule = emu::load_schedule(solution_path, instance);
    if (out.has_parent_path()) fs::create_directories(out.parent_path());
    emu::write_text_file(out, emu::render_gantt(schedule, instance));
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    setup_logging();

    CLI::App app{"Major-maintenance scheduler for EMU train-set fleets"};
    app.require_subcommand(1);

    std::string instance_path;
    std::string solution_path;
    std::string params_path;
    std::string train_set_id;
    std::string out;
    std::optional<std::string> dot_target;
    std::optional<std::uint64_t> seed;
    std::uint64_t budget = emu::OracleBudget{}.max_combinations;
    bool as_json = false;

    auto* validate = app.add_subcommand("validate", "Check an instance, and optionally a solution against it");
    validate->add_option("instance", instance_path, "Instance JSON")->required();
    validate->add_option("solution", solution_path, "Solution JSON");
    validate->add_flag("--json", as_json, "Machine-readable output");

    auto* paths = app.add_subcommand("paths", "List the feasible paths of one train-set");
    paths->add_option("instance", instance_path, "Instance JSON")->required();
    paths->add_option("--train-set", train_set_id, "Train-set id");
    paths->add_option("--dump-network", dot_target, "Write the network as Graphviz DOT (stdout if no file)")
        ->expected(0, 1);
    paths->add_flag("--json", as_json, "Machine-readable output");

    auto* solve = app.add_subcommand("solve", "Run the GA/SA heuristic");
    solve->add_option("instance", instance_path, "Instance JSON")->required();
    solve->add_option("--seed", seed, "RNG seed (overrides the parameter file)");
    solve->add_option("--params", params_path, "Solver parameter JSON")->check(CLI::ExistingFile);
    solve->add_option("-o,--output", out, "Output directory")->required();

    auto* exact = app.add_subcommand("exact", "Exhaustive search for small instances");
    exact->add_option("instance", instance_path, "Instance JSON")->required();
    exact->add_option("-o,--output", out, "Output directory")->required();
    exact->add_option("--budget", budget, "Maximum number of combinations")->check(CLI::PositiveNumber);
    exact->add_option("--params", params_path, "Parameter JSON supplying the penalty weights")
        ->check(CLI::ExistingFile);

    auto* gantt = app.add_subcommand("gantt", "Render a solution as an SVG Gantt chart");
    gantt->add_option("instance", instance_path, "Instance JSON")->required();
    gantt->add_option("solution", solution_path, "Solution JSON")->required();
    gantt->add_option("-o,--output", out, "SVG file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kUsage;
    }

    try {
        if (validate->parsed()) return cmd_validate(instance_path, solution_path, as_json);
        if (paths->parsed()) {
            if (train_set_id.empty() && !dot_target) {
                return report_error("usage", "paths needs --train-set and/or --dump-network", kUsage);
            }
            return cmd_paths(instance_path, train_set_id, dot_target, as_json);
        }
        if (solve->parsed()) return cmd_solve(instance_path, seed, params_path, out);
        if (exact->parsed()) return cmd_exact(instance_path, out, budget, params_path);
        if (gantt->parsed()) return cmd_gantt(instance_path, solution_path, out);
    } catch (const emu::ParseError& e) {
        return report_error("parse", e.what(), kInvalidInput);
    } catch (const emu::InstanceError& e) {
        return report_error("invalid_instance", e.what(), kInvalidInput);
    } catch (const emu::UnschedulableError& e) {
        return report_error("unschedulable", e.what(), kUnschedulable, {{"train_set_id", e.train_set_id()}});
    } catch (const emu::BudgetExceededError& e) {
        return report_error("budget_exceeded", e.what(), kBudget);
    } catch (const std::exception& e) {
        return report_error("io", e.what(), kInvalidInput);
    }
    return kUsage;
}
