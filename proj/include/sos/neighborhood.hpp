#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace sos {

struct Patch {
    int x = 0;
    int y = 0;

    auto operator<=>(const Patch&) const = default;
};

struct Offset {
    int dx = 0;
    int dy = 0;

    auto operator<=>(const Offset&) const = default;
};

/// All nonzero integer offsets with dx^2 + dy^2 <= radius^2, in row-major
/// order (dy outer, dx inner, both ascending).
std::vector<Offset> neighbor_offsets(double radius);

/// Per-agent neighbor indices in compressed row form. Agent i's neighbors
/// are indices[starts[i] .. starts[i+1]), listed in neighbor_offsets order.
class NeighborLists {
public:
    NeighborLists() = default;

    /// Builds lists for agents at `positions` on a width x height torus.
    NeighborLists(int width, int height, std::span<const Patch> positions, double radius);

    [[nodiscard]] std::span<const std::uint32_t> of(std::size_t agent) const {
        return {indices_.data() + starts_[agent], starts_[agent + 1] - starts_[agent]};
    }

    [[nodiscard]] std::size_t agent_count() const {
        return starts_.empty() ? 0 : starts_.size() - 1;
    }

    bool operator==(const NeighborLists&) const = default;

private:
    std::vector<std::size_t> starts_;
    std::vector<std::uint32_t> indices_;
};

}  // namespace sos
