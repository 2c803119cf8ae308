#pragma once

#include "chartroute/grid.hpp"
#include "chartroute/metrics.hpp"

#include <cstdint>
#include <span>
#include <string>

namespace chartroute {

namespace shade {
inline constexpr std::uint8_t blocked = 0;
inline constexpr std::uint8_t free = 255;
inline constexpr std::uint8_t hazard = 180; ///< navigable, w > 1
inline constexpr std::uint8_t raw_route = 100;
inline constexpr std::uint8_t smoothed_route = 30;
} // namespace shade

/// Binary PGM (P5) of the grid with both routes drawn over it, one pixel
/// per cell, north up.
inline std::string render_pgm(const OccupancyGrid& grid, const SafetyWeightField& weights,
                              std::span<const GridIndex> raw, std::span<const GridIndex> smoothed)
{
    const auto& spec = grid.spec();
    std::vector<std::uint8_t> px(spec.cell_count());
    for (std::size_t i = 0; i < px.size(); ++i) {
        const GridIndex idx = spec.index_at(i);
        px[i] = grid.blocked(idx) ? shade::blocked : weights.at(idx) > 1.0 ? shade::hazard : shade::free;
    }
    for (const GridIndex c : route_trace(raw))
        if (grid.in_bounds(c))
            px[spec.offset(c)] = shade::raw_route;
    for (const GridIndex c : route_trace(smoothed))
        if (grid.in_bounds(c))
            px[spec.offset(c)] = shade::smoothed_route;

    std::string out = "P5\n" + std::to_string(spec.cols) + " " + std::to_string(spec.rows) + "\n255\n";
    out.reserve(out.size() + px.size());
    for (int r = spec.rows - 1; r >= 0; --r)
        for (int c = 0; c < spec.cols; ++c)
            out.push_back(static_cast<char>(px[spec.offset({c, r})]));
    return out;
}

} // namespace chartroute
