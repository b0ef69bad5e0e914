#include "emu/catalog.hpp"

#include <limits>

namespace emu {

std::uint64_t PathCatalog::combinations() const {
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t total = 1;
    for (const auto& block : paths) {
        const auto size = static_cast<std::uint64_t>(block.size());
        if (size == 0) return 0;
        if (total > kMax / size) return kMax;
        total *= size;
    }
    return total;
}

PathCatalog build_path_catalog(const Instance& instance) {
    const auto network = build_network(instance.horizon_days);
    PathCatalog catalog;
    catalog.paths.reserve(instance.fleet.size());
    for (const auto& train_set : instance.fleet) {
        catalog.paths.push_back(generate_feasible_paths(train_set, network));
    }
    return catalog;
}

}  // namespace emu
