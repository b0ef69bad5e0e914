#include "emu/network.hpp"

#include <sstream>
#include <stdexcept>

namespace emu {
namespace {

bool is_maintenance_row(int row) { return row >= 2 && row <= kStatusRows; }

std::string node(int row, int column) {
    return "v_" + std::to_string(row) + "_" + std::to_string(column);
}

}  // namespace

std::string to_string(const Arc& arc) {
    if (arc.is_time()) {
        return "t(" + std::to_string(arc.to_row) + "," + std::to_string(arc.day) + ")";
    }
    return "c(" + std::to_string(arc.from_row) + "->" + std::to_string(arc.to_row) + "," +
           std::to_string(arc.day) + ")";
}

TimeSpaceNetwork::TimeSpaceNetwork(int horizon_days) : horizon_(horizon_days) {
    if (horizon_days < 1) throw std::invalid_argument("horizon_days must be >= 1");
}

TimeSpaceNetwork build_network(int horizon_days) { return TimeSpaceNetwork(horizon_days); }

bool TimeSpaceNetwork::contains(const Arc& arc) const {
    if (arc.day < 1 || arc.day > horizon_) return false;
    if (arc.is_time()) {
        return arc.from_row == arc.to_row && arc.to_row >= kAvailableRow && arc.to_row <= kStatusRows;
    }
    return (arc.from_row == kAvailableRow && is_maintenance_row(arc.to_row)) ||
           (is_maintenance_row(arc.from_row) && arc.to_row == kAvailableRow);
}

SubsequentArcs TimeSpaceNetwork::subsequent_arcs(const Arc& arc) const {
    if (!contains(arc)) throw std::invalid_argument("arc " + to_string(arc) + " is not in the network");
    SubsequentArcs next;
    if (arc.is_time()) {
        if (arc.day == horizon_) {
            next.reaches_super_node = true;
            return next;
        }
        const Day tomorrow = arc.day + 1;
        next.arcs.push_back(Arc::time(arc.to_row, tomorrow));
        if (arc.to_row == kAvailableRow) {
            for (int row = 2; row <= kStatusRows; ++row) {
                next.arcs.push_back(Arc::connect(kAvailableRow, row, tomorrow));
            }
        } else {
            next.arcs.push_back(Arc::connect(arc.to_row, kAvailableRow, tomorrow));
        }
        return next;
    }
    // Zero-duration switch: continue in the destination row on the same day.
    next.arcs.push_back(Arc::time(arc.to_row, arc.day));
    return next;
}

std::vector<Arc> TimeSpaceNetwork::time_arcs() const {
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<std::size_t>(kStatusRows * horizon_));
    for (int row = kAvailableRow; row <= kStatusRows; ++row) {
        for (Day day = 1; day <= horizon_; ++day) arcs.push_back(Arc::time(row, day));
    }
    return arcs;
}

std::vector<Arc> TimeSpaceNetwork::connect_arcs() const {
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<std::size_t>(6 * horizon_));
    for (Day day = 1; day <= horizon_; ++day) {
        for (int row = 2; row <= kStatusRows; ++row) {
            arcs.push_back(Arc::connect(kAvailableRow, row, day));
            arcs.push_back(Arc::connect(row, kAvailableRow, day));
        }
    }
    return arcs;
}

std::string TimeSpaceNetwork::to_dot() const {
    std::ostringstream out;
    out << "digraph timespace {\n  rankdir=LR;\n";
    for (int row = kAvailableRow; row <= kStatusRows; ++row) {
        out << "  " << node(row, super_node_column()) << " [shape=doublecircle,label=\"S" << row
            << "\"];\n";
    }
    for (const auto& arc : time_arcs()) {
        out << "  " << node(arc.to_row, arc.day) << " -> " << node(arc.to_row, arc.day + 1)
            << " [style=dashed];\n";
    }
    for (const auto& arc : connect_arcs()) {
        out << "  " << node(arc.from_row, arc.day) << " -> " << node(arc.to_row, arc.day)
            << " [style=dashdot,color=blue];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace emu
