#include "emu/export.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace emu {
namespace {

constexpr const char* kAvailableColor = "#4caf50";
constexpr const char* kLevelColors[3] = {"#ff9800", "#e53935", "#3949ab"};

const char* period_color(DemandLabel label) {
    switch (label) {
        case DemandLabel::SpringFestival: return "#fde0dc";
        case DemandLabel::SummerHoliday: return "#fff3c4";
        case DemandLabel::NationalDay: return "#e1f0fd";
        case DemandLabel::Usual: break;
    }
    return "#ffffff";
}

std::string xml_escape(std::string_view text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string csv_field(std::string_view text) {
    if (text.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(text);
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string schedule_csv(const Schedule& schedule, const Instance& instance) {
    std::ostringstream out;
    out << "train_set_id,event_index,level,dispatch_day,dispatch_date,return_day,mileage_at_dispatch,"
           "mileage_slack_km\r\n";
    for (const auto& path : schedule.paths) {
        const auto* ts = instance.find_train_set(path.train_set_id);
        for (std::size_t i = 0; i < path.events.size(); ++i) {
            const auto& event = path.events[i];
            const Kilometers base = ts != nullptr ? ts->type.regulation(event.level).base_mileage : 0;
            out << csv_field(path.train_set_id) << ',' << i << ',' << to_string(event.level) << ','
                << event.dispatch_day << ',' << date_of_day(instance.start_date, event.dispatch_day) << ','
                << event.return_day << ',' << event.mileage_at_dispatch << ','
                << (base - event.mileage_at_dispatch) << "\r\n";
        }
    }
    return out.str();
}

std::string daily_counts_csv(const DailyCounts& counts) {
    std::ostringstream out;
    out << "day,available,third,fourth,fifth\r\n";
    for (Day day = 1; day <= counts.horizon_days(); ++day) {
        out << day << ',' << counts.at(day, 1) << ',' << counts.at(day, 2) << ',' << counts.at(day, 3) << ','
            << counts.at(day, 4) << "\r\n";
    }
    return out.str();
}

std::string trace_csv(const std::vector<TracePoint>& trace) {
    std::ostringstream out;
    out << "generation,cooling_step,temperature,best_penalized\r\n";
    char buffer[96];
    for (const auto& point : trace) {
        std::snprintf(buffer, sizeof buffer, "%ld,%d,%.6f,%.10g\r\n", point.generation, point.cooling_step,
                      point.temperature, point.best_penalized);
        out << buffer;
    }
    return out.str();
}

void export_schedule(const Solution& solution, const Instance& instance, const std::filesystem::path& directory,
                     const PenaltyWeights& weights, const SolutionInfo& info) {
    std::filesystem::create_directories(directory);
    write_text_file(directory / "schedule.csv", schedule_csv(solution.schedule, instance));
    write_text_file(directory / "solution.json", solution_to_json(solution, instance, weights, info).dump(2) + "\n");
    write_text_file(directory / "daily_counts.csv", daily_counts_csv(solution.counts));
}

std::string render_gantt(const Schedule& schedule, const Instance& instance) {
    const int horizon = instance.horizon_days;
    const int day_px = std::max(2, 1200 / horizon);
    const int label_w = 110;
    const int top = 40;
    const int lane_h = 22;
    const int lane_gap = 8;
    const int lanes = static_cast<int>(schedule.paths.size());
    const int chart_w = day_px * horizon;
    const int chart_h = lanes * (lane_h + lane_gap);
    const int width = label_w + chart_w + 20;
    const int height = top + chart_h + 50;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << ' ' << height << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
    svg << "<title>" << xml_escape(instance.name.empty() ? "maintenance schedule" : instance.name) << "</title>\n";
    svg << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"#ffffff\"/>\n";

    // Demand-period bands behind the lanes, one rect per contiguous run of days.
    for (const auto& period : instance.demand_periods) {
        if (period.label == DemandLabel::Usual) continue;
        std::vector<Day> days = period.days;
        std::sort(days.begin(), days.end());
        for (std::size_t i = 0; i < days.size();) {
            std::size_t j = i;
            while (j + 1 < days.size() && days[j + 1] == days[j] + 1) ++j;
            svg << "<rect class=\"period\" data-label=\"" << to_string(period.label) << "\" x=\""
                << label_w + (days[i] - 1) * day_px << "\" y=\"" << top - 6 << "\" width=\""
                << (days[j] - days[i] + 1) * day_px << "\" height=\"" << chart_h + 6 << "\" fill=\""
                << period_color(period.label) << "\"/>\n";
            i = j + 1;
        }
    }

    // Day axis.
    const int tick = horizon <= 60 ? 5 : horizon <= 200 ? 10 : 30;
    svg << "<g class=\"axis\" stroke=\"#999999\">\n";
    for (Day day = 1; day <= horizon + 1; day += (day == 1 ? tick - 1 : tick)) {
        const int x = label_w + (day - 1) * day_px;
        svg << "<line x1=\"" << x << "\" y1=\"" << top - 10 << "\" x2=\"" << x << "\" y2=\"" << top + chart_h
            << "\"/>\n";
        if (day <= horizon) {
            svg << "<text x=\"" << x + 2 << "\" y=\"" << top - 14 << "\" stroke=\"none\" fill=\"#333333\">" << day
                << "</text>\n";
        }
    }
    svg << "</g>\n";

    for (int lane = 0; lane < lanes; ++lane) {
        const auto& path = schedule.paths[static_cast<std::size_t>(lane)];
        const int y = top + lane * (lane_h + lane_gap);
        svg << "<g class=\"lane\" data-train-set=\"" << xml_escape(path.train_set_id) << "\">\n";
        svg << "<text x=\"4\" y=\"" << y + lane_h - 6 << "\">" << xml_escape(path.train_set_id) << "</text>\n";
        const auto rows = path.status_by_day(horizon);
        for (Day day = 1; day <= horizon;) {
            const int row = rows[static_cast<std::size_t>(day - 1)];
            Day end = day;
            while (end + 1 <= horizon && rows[static_cast<std::size_t>(end)] == row) ++end;
            const char* color = row == kAvailableRow ? kAvailableColor : kLevelColors[row - 2];
            const char* status = row == kAvailableRow ? "available" : to_string(*level_from_row(row)).data();
            svg << "<rect class=\"span " << status << "\" x=\"" << label_w + (day - 1) * day_px << "\" y=\"" << y
                << "\" width=\"" << (end - day + 1) * day_px << "\" height=\"" << lane_h << "\" fill=\"" << color
                << "\"><title>" << xml_escape(path.train_set_id) << ' ' << status << " days " << day << '-' << end
                << "</title></rect>\n";
            day = end + 1;
        }
        svg << "</g>\n";
    }

    // Legend.
    const int ly = top + chart_h + 20;
    const char* names[4] = {"available", "third", "fourth", "fifth"};
    const char* colors[4] = {kAvailableColor, kLevelColors[0], kLevelColors[1], kLevelColors[2]};
    svg << "<g class=\"legend\">\n";
    for (int i = 0; i < 4; ++i) {
        const int x = label_w + i * 100;
        svg << "<rect x=\"" << x << "\" y=\"" << ly << "\" width=\"12\" height=\"12\" fill=\"" << colors[i]
            << "\"/><text x=\"" << x + 16 << "\" y=\"" << ly + 10 << "\">" << names[i] << "</text>\n";
    }
    svg << "</g>\n</svg>\n";
    return svg.str();
}

}  // namespace emu
