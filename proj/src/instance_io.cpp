#include "emu/instance_io.hpp"

#include "emu/errors.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <limits>
#include <map>
#include <sstream>

namespace emu {

using nlohmann::json;

namespace {

std::string join(std::string_view where, std::string_view key) {
    return std::string(where) + "." + std::string(key);
}

void expect_object(const json& j, std::string_view where) {
    if (!j.is_object()) throw ParseError(std::string(where) + ": expected an object");
}

void check_keys(const json& j, std::initializer_list<std::string_view> allowed, std::string_view where) {
    expect_object(j, where);
    for (const auto& [key, value] : j.items()) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            throw ParseError(join(where, key) + ": unknown key");
        }
    }
}

const json& field(const json& j, std::string_view key, std::string_view where) {
    const auto it = j.find(key);
    if (it == j.end()) throw ParseError(join(where, key) + ": missing required key");
    return *it;
}

std::int64_t as_integer(const json& v, const std::string& where) {
    if (!v.is_number_integer()) throw ParseError(where + ": expected an integer");
    return v.get<std::int64_t>();
}

int as_int(const json& v, const std::string& where) {
    const auto value = as_integer(v, where);
    if (value < std::numeric_limits<int>::min() || value > std::numeric_limits<int>::max()) {
        throw ParseError(where + ": integer out of range");
    }
    return static_cast<int>(value);
}

double as_number(const json& v, const std::string& where) {
    if (!v.is_number()) throw ParseError(where + ": expected a number");
    return v.get<double>();
}

std::string as_string(const json& v, const std::string& where) {
    if (!v.is_string()) throw ParseError(where + ": expected a string");
    return v.get<std::string>();
}

MaintenanceLevel as_level(const json& v, const std::string& where) {
    const auto text = as_string(v, where);
    const auto level = parse_level(text);
    if (!level) throw ParseError(where + ": unknown maintenance level '" + text + "'");
    return *level;
}

std::optional<std::chrono::year_month_day> parse_date(std::string_view text) {
    int y = 0;
    unsigned m = 0;
    unsigned d = 0;
    char tail = 0;
    if (text.size() != 10) return std::nullopt;
    const std::string buffer(text);
    if (std::sscanf(buffer.c_str(), "%4d-%2u-%2u%c", &y, &m, &d, &tail) != 3) return std::nullopt;
    const std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{m}, std::chrono::day{d}};
    if (!ymd.ok()) return std::nullopt;
    return ymd;
}

MaintenanceRegulation regulation_from_json(const json& j, MaintenanceLevel level, const std::string& where) {
    check_keys(j, {"base_km", "float_low_km", "float_high_km", "day_limit"}, where);
    MaintenanceRegulation reg;
    reg.level = level;
    reg.base_mileage = as_integer(field(j, "base_km", where), join(where, "base_km"));
    reg.float_low = as_integer(field(j, "float_low_km", where), join(where, "float_low_km"));
    reg.float_high = as_integer(field(j, "float_high_km", where), join(where, "float_high_km"));
    if (j.contains("day_limit")) reg.day_limit = as_int(j["day_limit"], join(where, "day_limit"));
    return reg;
}

TrainSetType type_from_json(const json& j, const std::string& where) {
    check_keys(j, {"name", "daily_mileage_km", "regulations"}, where);
    TrainSetType type;
    type.name = as_string(field(j, "name", where), join(where, "name"));
    type.daily_mileage = as_integer(field(j, "daily_mileage_km", where), join(where, "daily_mileage_km"));
    const auto& regs = field(j, "regulations", where);
    const auto regs_where = join(where, "regulations");
    check_keys(regs, {"third", "fourth", "fifth"}, regs_where);
    for (auto level : kAllLevels) {
        const std::string key(to_string(level));
        type.regulation(level) = regulation_from_json(field(regs, key, regs_where), level, join(regs_where, key));
    }
    return type;
}

std::vector<Day> period_days(const json& j, const std::string& where) {
    std::vector<Day> days;
    if (j.contains("days")) {
        const auto& list = j["days"];
        if (!list.is_array()) throw ParseError(join(where, "days") + ": expected an array");
        for (const auto& d : list) days.push_back(as_int(d, join(where, "days")));
    }
    if (j.contains("ranges")) {
        const auto& list = j["ranges"];
        const auto rw = join(where, "ranges");
        if (!list.is_array()) throw ParseError(rw + ": expected an array");
        for (const auto& range : list) {
            if (!range.is_array() || range.size() != 2) throw ParseError(rw + ": each range is [first, last]");
            const int first = as_int(range[0], rw);
            const int last = as_int(range[1], rw);
            if (first > last) throw ParseError(rw + ": range first > last");
            for (int d = first; d <= last; ++d) days.push_back(d);
        }
    }
    std::sort(days.begin(), days.end());
    return days;
}

json days_to_ranges(const std::vector<Day>& days) {
    std::vector<Day> sorted = days;
    std::sort(sorted.begin(), sorted.end());
    json ranges = json::array();
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j + 1 < sorted.size() && sorted[j + 1] == sorted[j] + 1) ++j;
        ranges.push_back({sorted[i], sorted[j]});
        i = j + 1;
    }
    return ranges;
}

json regulations_to_json(const TrainSetType& type) {
    json regs = json::object();
    for (auto level : kAllLevels) {
        const auto& reg = type.regulation(level);
        regs[std::string(to_string(level))] = {{"base_km", reg.base_mileage},
                                               {"float_low_km", reg.float_low},
                                               {"float_high_km", reg.float_high},
                                               {"day_limit", reg.day_limit}};
    }
    return regs;
}

json event_to_json(const MaintenanceEvent& event, const TrainSet& ts) {
    return {{"level", std::string(to_string(event.level))},
            {"dispatch_day", event.dispatch_day},
            {"return_day", event.return_day},
            {"mileage_at_dispatch_km", event.mileage_at_dispatch},
            {"mileage_slack_km", ts.type.regulation(event.level).base_mileage - event.mileage_at_dispatch}};
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path.string() + ": cannot open file");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error(path.string() + ": cannot open for writing");
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw std::runtime_error(path.string() + ": write failed");
}

std::string date_of_day(std::string_view start_date, Day day) {
    const auto start = parse_date(start_date);
    if (!start) throw InstanceError("start_date '" + std::string(start_date) + "' is not an ISO-8601 date");
    const std::chrono::year_month_day ymd{std::chrono::sys_days{*start} + std::chrono::days{day - 1}};
    char buffer[16];
    std::snprintf(buffer, sizeof buffer, "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                  static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
    return buffer;
}

Instance instance_from_json(const json& doc) {
    const std::string root = "instance";
    check_keys(doc, {"name", "start_date", "horizon_days", "durations", "capacities", "types", "demand_periods", "fleet"},
               root);
    Instance inst;
    if (doc.contains("name")) inst.name = as_string(doc["name"], join(root, "name"));
    inst.start_date = as_string(field(doc, "start_date", root), join(root, "start_date"));
    if (!parse_date(inst.start_date)) {
        throw InstanceError("start_date '" + inst.start_date + "' is not an ISO-8601 date (YYYY-MM-DD)");
    }
    inst.horizon_days = as_int(field(doc, "horizon_days", root), join(root, "horizon_days"));

    if (doc.contains("durations")) {
        const auto& d = doc["durations"];
        const auto w = join(root, "durations");
        check_keys(d, {"third", "fourth", "fifth"}, w);
        if (d.contains("third")) inst.durations.third = as_int(d["third"], join(w, "third"));
        if (d.contains("fourth")) inst.durations.fourth = as_int(d["fourth"], join(w, "fourth"));
        if (d.contains("fifth")) inst.durations.fifth = as_int(d["fifth"], join(w, "fifth"));
    }
    {
        const auto& c = field(doc, "capacities", root);
        const auto w = join(root, "capacities");
        check_keys(c, {"third", "fourth", "fifth"}, w);
        inst.capacities.third = as_int(field(c, "third", w), join(w, "third"));
        inst.capacities.fourth = as_int(field(c, "fourth", w), join(w, "fourth"));
        inst.capacities.fifth = as_int(field(c, "fifth", w), join(w, "fifth"));
    }

    auto apply_durations = [&](TrainSetType& type) {
        for (auto level : kAllLevels) type.regulation(level).duration_days = inst.durations.of(level);
    };

    if (doc.contains("types")) {
        const auto& types = doc["types"];
        if (!types.is_array()) throw ParseError("instance.types: expected an array");
        for (std::size_t i = 0; i < types.size(); ++i) {
            auto type = type_from_json(types[i], "instance.types[" + std::to_string(i) + "]");
            apply_durations(type);
            inst.types.push_back(std::move(type));
        }
    }

    const auto& periods = field(doc, "demand_periods", root);
    if (!periods.is_array()) throw ParseError("instance.demand_periods: expected an array");
    for (std::size_t i = 0; i < periods.size(); ++i) {
        const auto w = "instance.demand_periods[" + std::to_string(i) + "]";
        const auto& p = periods[i];
        check_keys(p, {"label", "min_available", "days", "ranges"}, w);
        DemandPeriod period;
        const auto label_text = as_string(field(p, "label", w), join(w, "label"));
        const auto label = parse_demand_label(label_text);
        if (!label) throw ParseError(join(w, "label") + ": unknown demand period '" + label_text + "'");
        period.label = *label;
        period.min_available = as_int(field(p, "min_available", w), join(w, "min_available"));
        period.days = period_days(p, w);
        inst.demand_periods.push_back(std::move(period));
    }

    const auto& fleet = field(doc, "fleet", root);
    if (!fleet.is_array()) throw ParseError("instance.fleet: expected an array");
    for (std::size_t i = 0; i < fleet.size(); ++i) {
        const auto w = "instance.fleet[" + std::to_string(i) + "]";
        const auto& f = fleet[i];
        check_keys(f, {"id", "type", "initial_mileage_km", "initial_days", "last_level", "cycle_position"}, w);
        TrainSet ts;
        ts.id = as_string(field(f, "id", w), join(w, "id"));
        const auto type_name = as_string(field(f, "type", w), join(w, "type"));
        const auto inline_type = std::find_if(inst.types.begin(), inst.types.end(),
                                              [&](const TrainSetType& t) { return t.name == type_name; });
        if (inline_type != inst.types.end()) {
            ts.type = *inline_type;
        } else if (auto bundled = find_bundled_type(type_name)) {
            ts.type = *bundled;
            apply_durations(ts.type);
        } else {
            throw InstanceError("train-set " + ts.id + ": unknown train-set type '" + type_name +
                                "' and no inline regulation supplied");
        }
        ts.initial_mileage = as_integer(field(f, "initial_mileage_km", w), join(w, "initial_mileage_km"));
        ts.initial_days = as_int(field(f, "initial_days", w), join(w, "initial_days"));
        ts.last_level = as_level(field(f, "last_level", w), join(w, "last_level"));
        ts.cycle_position = as_int(field(f, "cycle_position", w), join(w, "cycle_position"));
        inst.fleet.push_back(std::move(ts));
    }

    check_instance(inst);
    return inst;
}

Instance parse_instance(std::string_view text, std::string_view source) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(std::string(source) + ": " + e.what());
    }
    return instance_from_json(doc);
}

Instance load_instance(const std::filesystem::path& path) {
    return parse_instance(read_text_file(path), path.string());
}

json instance_to_json(const Instance& inst) {
    json doc;
    doc["name"] = inst.name;
    doc["start_date"] = inst.start_date;
    doc["horizon_days"] = inst.horizon_days;
    doc["durations"] = {{"third", inst.durations.third},
                        {"fourth", inst.durations.fourth},
                        {"fifth", inst.durations.fifth}};
    doc["capacities"] = {{"third", inst.capacities.third},
                         {"fourth", inst.capacities.fourth},
                         {"fifth", inst.capacities.fifth}};
    json types = json::array();
    for (const auto& type : inst.types) {
        types.push_back({{"name", type.name}, {"daily_mileage_km", type.daily_mileage},
                         {"regulations", regulations_to_json(type)}});
    }
    doc["types"] = types;
    json periods = json::array();
    for (const auto& period : inst.demand_periods) {
        periods.push_back({{"label", std::string(to_string(period.label))},
                           {"min_available", period.min_available},
                           {"ranges", days_to_ranges(period.days)}});
    }
    doc["demand_periods"] = periods;
    json fleet = json::array();
    for (const auto& ts : inst.fleet) {
        fleet.push_back({{"id", ts.id},
                         {"type", ts.type.name},
                         {"initial_mileage_km", ts.initial_mileage},
                         {"initial_days", ts.initial_days},
                         {"last_level", std::string(to_string(ts.last_level))},
                         {"cycle_position", ts.cycle_position}});
    }
    doc["fleet"] = fleet;
    return doc;
}

SolverParams params_from_json(const json& doc) {
    const std::string root = "params";
    check_keys(doc, {"cost_c", "lambda1", "lambda2", "sizepop", "p_crossover", "p_mutation", "max_generations",
                     "initial_temperature", "final_temperature", "cooling_rate", "fitness_epsilon", "rng_seed"},
               root);
    SolverParams p;
    auto number = [&](const char* key, double& target) {
        if (doc.contains(key)) target = as_number(doc[key], join(root, key));
    };
    auto integer = [&](const char* key, int& target) {
        if (doc.contains(key)) target = as_int(doc[key], join(root, key));
    };
    number("cost_c", p.cost_c);
    number("lambda1", p.lambda1);
    number("lambda2", p.lambda2);
    integer("sizepop", p.sizepop);
    number("p_crossover", p.p_crossover);
    number("p_mutation", p.p_mutation);
    integer("max_generations", p.max_generations);
    number("initial_temperature", p.initial_temperature);
    number("final_temperature", p.final_temperature);
    number("cooling_rate", p.cooling_rate);
    number("fitness_epsilon", p.fitness_epsilon);
    if (doc.contains("rng_seed")) {
        const auto seed = as_integer(doc["rng_seed"], join(root, "rng_seed"));
        if (seed < 0) throw ParseError("params.rng_seed: must be >= 0");
        p.rng_seed = static_cast<std::uint64_t>(seed);
    }
    try {
        p.check();
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("params: ") + e.what());
    }
    return p;
}

SolverParams load_params(const std::filesystem::path& path) {
    const auto text = read_text_file(path);
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
    return params_from_json(doc);
}

json params_to_json(const SolverParams& p) {
    return {{"cost_c", p.cost_c},
            {"lambda1", p.lambda1},
            {"lambda2", p.lambda2},
            {"sizepop", p.sizepop},
            {"p_crossover", p.p_crossover},
            {"p_mutation", p.p_mutation},
            {"max_generations", p.max_generations},
            {"initial_temperature", p.initial_temperature},
            {"final_temperature", p.final_temperature},
            {"cooling_rate", p.cooling_rate},
            {"fitness_epsilon", p.fitness_epsilon},
            {"rng_seed", p.rng_seed}};
}

json report_to_json(const ViolationReport& report) {
    json list = json::array();
    for (const auto& v : report.violations) {
        json item = {{"constraint", std::string(to_string(v.kind))},
                     {"required", v.required},
                     {"actual", v.actual},
                     {"message", v.message}};
        if (!v.train_set_id.empty()) item["train_set_id"] = v.train_set_id;
        if (v.day != 0) item["day"] = v.day;
        if (v.level) item["level"] = std::string(to_string(*v.level));
        if (v.period) item["period"] = std::string(to_string(*v.period));
        list.push_back(std::move(item));
    }
    return {{"feasible", report.feasible()}, {"violation_count", report.violations.size()}, {"violations", list}};
}

json solution_to_json(const Solution& solution, const Instance& instance, const PenaltyWeights& weights,
                      const SolutionInfo& info) {
    const auto& ev = solution.evaluation;
    json assignments = json::array();
    for (std::size_t e = 0; e < solution.schedule.paths.size(); ++e) {
        const auto& path = solution.schedule.paths[e];
        const auto* ts = instance.find_train_set(path.train_set_id);
        json events = json::array();
        for (const auto& event : path.events) events.push_back(event_to_json(event, *ts));
        json item = {{"train_set_id", path.train_set_id}, {"events", events}};
        if (e < solution.genes.size()) item["path_index"] = solution.genes[e];
        assignments.push_back(std::move(item));
    }
    json doc = {
        {"format", "emu-sched-solution/1"},
        {"instance", instance.name},
        {"method", info.method},
        {"genes", solution.genes},
        {"objective", ev.objective},
        {"objective_km", ev.mileage_loss_km},
        {"penalized_objective", ev.penalized},
        {"penalties",
         {{"availability_shortfall", ev.availability_shortfall},
          {"capacity_excess", ev.capacity_excess},
          {"availability_term", weights.lambda1 * static_cast<double>(ev.availability_shortfall)},
          {"capacity_term", weights.lambda2 * static_cast<double>(ev.capacity_excess)}}},
        {"weights", {{"cost_c", weights.cost_c}, {"lambda1", weights.lambda1}, {"lambda2", weights.lambda2}}},
        {"feasible", solution.feasible()},
        {"assignments", assignments},
        {"stats", info.stats},
    };
    if (info.seed) doc["seed"] = *info.seed;
    return doc;
}

Schedule schedule_from_json(const json& doc, const Instance& instance) {
    expect_object(doc, "solution");
    const auto& list = field(doc, "assignments", "solution");
    if (!list.is_array()) throw ParseError("solution.assignments: expected an array");
    Schedule schedule;
    for (std::size_t i = 0; i < list.size(); ++i) {
        const auto w = "solution.assignments[" + std::to_string(i) + "]";
        const auto& a = list[i];
        expect_object(a, w);
        FeasiblePath path;
        path.train_set_id = as_string(field(a, "train_set_id", w), join(w, "train_set_id"));
        const auto* ts = instance.find_train_set(path.train_set_id);
        if (ts != nullptr && ts->in_workshop_at_start()) {
            path.initial_stay = WorkshopStay{ts->last_level, ts->remaining_shop_days() + 1};
        }
        const auto& events = field(a, "events", w);
        if (!events.is_array()) throw ParseError(join(w, "events") + ": expected an array");
        std::optional<Day> reset;
        for (std::size_t k = 0; k < events.size(); ++k) {
            const auto ew = join(w, "events[" + std::to_string(k) + "]");
            const auto& ej = events[k];
            expect_object(ej, ew);
            MaintenanceEvent event;
            event.level = as_level(field(ej, "level", ew), join(ew, "level"));
            event.dispatch_day = as_int(field(ej, "dispatch_day", ew), join(ew, "dispatch_day"));
            if (ej.contains("return_day")) {
                event.return_day = as_int(ej["return_day"], join(ew, "return_day"));
            } else if (ts != nullptr) {
                event.return_day = event.dispatch_day + ts->type.regulation(event.level).duration_days;
            } else {
                event.return_day = event.dispatch_day + instance.durations.of(event.level);
            }
            if (ej.contains("mileage_at_dispatch_km")) {
                event.mileage_at_dispatch = as_integer(ej["mileage_at_dispatch_km"], join(ew, "mileage_at_dispatch_km"));
            } else if (ts != nullptr && event.dispatch_day >= 1 && (!reset || event.dispatch_day > *reset)) {
                event.mileage_at_dispatch = path_mileage_at_dispatch(*ts, event.dispatch_day, reset);
            }
            reset = event.return_day;
            path.events.push_back(event);
        }
        schedule.paths.push_back(std::move(path));
    }
    return schedule;
}

Schedule load_schedule(const std::filesystem::path& path, const Instance& instance) {
    const auto text = read_text_file(path);
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
    return schedule_from_json(doc, instance);
}

}  // namespace emu
