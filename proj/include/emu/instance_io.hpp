#pragma once

#include "emu/evaluator.hpp"
#include "emu/instance.hpp"
#include "emu/solver.hpp"

#include "json.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace emu {

/// Reads and fully validates an instance file. Throws ParseError or InstanceError.
[[nodiscard]] Instance load_instance(const std::filesystem::path& path);
[[nodiscard]] Instance parse_instance(std::string_view text, std::string_view source = "<memory>");
[[nodiscard]] Instance instance_from_json(const nlohmann::json& doc);
[[nodiscard]] nlohmann::json instance_to_json(const Instance& instance);

/// Missing keys keep their defaults. Throws ParseError on unknown keys or bad values.
[[nodiscard]] SolverParams load_params(const std::filesystem::path& path);
[[nodiscard]] SolverParams params_from_json(const nlohmann::json& doc);
[[nodiscard]] nlohmann::json params_to_json(const SolverParams& params);

/// Provenance written alongside a solution.
struct SolutionInfo {
    std::string method;  ///< "ga-sa" or "exact"
    std::optional<std::uint64_t> seed;
    nlohmann::json stats = nlohmann::json::object();
};

[[nodiscard]] nlohmann::json solution_to_json(const Solution& solution, const Instance& instance,
                                              const PenaltyWeights& weights, const SolutionInfo& info);
[[nodiscard]] nlohmann::json report_to_json(const ViolationReport& report);

/// Rebuilds the chosen paths of a solution file. Event fields missing from the file are
/// recomputed from the instance; present ones are kept so validate() can flag them.
[[nodiscard]] Schedule load_schedule(const std::filesystem::path& path, const Instance& instance);
[[nodiscard]] Schedule schedule_from_json(const nlohmann::json& doc, const Instance& instance);

/// ISO-8601 date of `day`, counting day 1 as `start_date`.
[[nodiscard]] std::string date_of_day(std::string_view start_date, Day day);

[[nodiscard]] std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace emu
