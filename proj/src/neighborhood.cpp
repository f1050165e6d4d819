#include "sos/neighborhood.hpp"

#include <cmath>
#include <limits>

namespace sos {

std::vector<Offset> neighbor_offsets(double radius) {
    std::vector<Offset> out;
    if (!(radius > 0.0)) return out;
    const int reach = static_cast<int>(std::floor(radius));
    const double limit = radius * radius;
    for (int dy = -reach; dy <= reach; ++dy) {
        for (int dx = -reach; dx <= reach; ++dx) {
            if (dx == 0 && dy == 0) continue;
            if (static_cast<double>(dx * dx + dy * dy) <= limit) out.push_back({dx, dy});
        }
    }
    return out;
}

NeighborLists::NeighborLists(int width, int height, std::span<const Patch> positions,
                             double radius) {
    constexpr auto kEmpty = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> occupant(static_cast<std::size_t>(width) * height, kEmpty);
    for (std::size_t i = 0; i < positions.size(); ++i) {
        const auto& p = positions[i];
        occupant[static_cast<std::size_t>(p.y) * width + p.x] = static_cast<std::uint32_t>(i);
    }

    const auto offsets = neighbor_offsets(radius);
    starts_.reserve(positions.size() + 1);
    starts_.push_back(0);
    for (const auto& p : positions) {
        for (const auto& o : offsets) {
            const int x = ((p.x + o.dx) % width + width) % width;
            const int y = ((p.y + o.dy) % height + height) % height;
            const auto j = occupant[static_cast<std::size_t>(y) * width + x];
            if (j != kEmpty) indices_.push_back(j);
        }
        starts_.push_back(indices_.size());
    }
}

}  // namespace sos
