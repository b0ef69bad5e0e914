#pragma once

#include "emu/fleet.hpp"

#include <compare>
#include <string>
#include <vector>

namespace emu {

enum class ArcKind { Time, Connect };

/// Arc of the day x status network.
///
/// A time arc spans one day inside one status row (from_row == to_row). A connecting arc
/// switches rows with zero duration on `day`; the day of the switch belongs to the
/// destination row. Connecting arcs only join the available row with a maintenance row.
struct Arc {
    ArcKind kind = ArcKind::Time;
    int from_row = kAvailableRow;
    int to_row = kAvailableRow;
    Day day = 1;

    static constexpr Arc time(int row, Day day) { return {ArcKind::Time, row, row, day}; }
    static constexpr Arc connect(int from, int to, Day day) { return {ArcKind::Connect, from, to, day}; }

    [[nodiscard]] bool is_time() const { return kind == ArcKind::Time; }
    [[nodiscard]] int row() const { return to_row; }

    friend auto operator<=>(const Arc&, const Arc&) = default;
};

[[nodiscard]] std::string to_string(const Arc& arc);

struct SubsequentArcs {
    std::vector<Arc> arcs;
    /// The arc ends the horizon and runs into its row's super-node.
    bool reaches_super_node = false;
};

/// Status network over a horizon of K days. Column K+1 holds the per-row super-nodes.
/// Arcs are answered on demand; `time_arcs()` / `connect_arcs()` materialize them.
class TimeSpaceNetwork {
public:
    explicit TimeSpaceNetwork(int horizon_days);

    [[nodiscard]] int horizon_days() const { return horizon_; }
    [[nodiscard]] int super_node_column() const { return horizon_ + 1; }
    [[nodiscard]] int super_node_count() const { return kStatusRows; }

    [[nodiscard]] bool contains(const Arc& arc) const;
    [[nodiscard]] SubsequentArcs subsequent_arcs(const Arc& arc) const;

    [[nodiscard]] std::vector<Arc> time_arcs() const;
    [[nodiscard]] std::vector<Arc> connect_arcs() const;

    /// Graphviz rendering: nodes v_<row>_<column>, super-nodes in column K+1.
    [[nodiscard]] std::string to_dot() const;

private:
    int horizon_;
};

/// Throws std::invalid_argument for horizon_days < 1.
[[nodiscard]] TimeSpaceNetwork build_network(int horizon_days);

}  // namespace emu
