#pragma once

#include "emu/instance.hpp"
#include "emu/paths.hpp"

#include <cstdint>
#include <vector>

namespace emu {

/// Feasible path sets of the whole fleet, indexed like Instance::fleet.
struct PathCatalog {
    std::vector<std::vector<FeasiblePath>> paths;

    [[nodiscard]] std::size_t blocks() const { return paths.size(); }
    [[nodiscard]] std::size_t block_size(std::size_t block) const { return paths[block].size(); }
    /// Product of block sizes, saturating at UINT64_MAX.
    [[nodiscard]] std::uint64_t combinations() const;
};

/// Runs path generation for every train-set. Propagates UnschedulableError.
[[nodiscard]] PathCatalog build_path_catalog(const Instance& instance);

}  // namespace emu
