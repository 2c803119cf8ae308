#pragma once

// Removal of redundant route nodes by grid line of sight (string pulling).

#include "chartroute/error.hpp"
#include "chartroute/grid.hpp"

#include <cstdint>
#include <cstdlib>
#include <span>
#include <vector>

namespace chartroute {

struct SmoothingOptions {
    /// Also refuse shortcuts through cells whose safety weight exceeds 1.
    bool strict_safety = false;
};

/// Every cell touched by the segment between the centers of `a` and `b`,
/// in traversal order.  Where the segment passes exactly through a grid
/// vertex, both cells beside the vertex are included as well.
inline std::vector<GridIndex> supercover(GridIndex a, GridIndex b)
{
    const std::int64_t nx = std::abs(b.col - a.col);
    const std::int64_t ny = std::abs(b.row - a.row);
    const int sx = b.col > a.col ? 1 : -1;
    const int sy = b.row > a.row ? 1 : -1;

    std::vector<GridIndex> cells;
    cells.reserve(static_cast<std::size_t>(nx + ny + 1));
    GridIndex p = a;
    cells.push_back(p);
    for (std::int64_t ix = 0, iy = 0; ix < nx || iy < ny;) {
        // Compare the parameters at which the segment crosses the next
        // vertical (x) and horizontal (y) grid lines.
        const std::int64_t tx = (1 + 2 * ix) * ny;
        const std::int64_t ty = (1 + 2 * iy) * nx;
        if (tx == ty) {
            cells.push_back({p.col + sx, p.row});
            cells.push_back({p.col, p.row + sy});
            p.col += sx;
            p.row += sy;
            ++ix;
            ++iy;
        } else if (tx < ty) {
            p.col += sx;
            ++ix;
        } else {
            p.row += sy;
            ++iy;
        }
        cells.push_back(p);
    }
    return cells;
}

inline bool line_of_sight(const OccupancyGrid& grid, const SafetyWeightField& weights, GridIndex a, GridIndex b,
                          const SmoothingOptions& opts = {})
{
    for (const GridIndex c : supercover(a, b)) {
        if (grid.blocked(c))
            return false;
        if (opts.strict_safety && weights.at(c) > 1.0)
            return false;
    }
    return true;
}

/// Greedy string pulling: from each anchor jump to the farthest later node
/// it can see, falling back to the next node when none is visible.
inline std::vector<GridIndex> smooth(std::span<const GridIndex> path, const OccupancyGrid& grid,
                                     const SafetyWeightField& weights, const SmoothingOptions& opts = {})
{
    if (path.empty())
        throw Error(ErrorCode::EmptyPath, "cannot smooth an empty path");
    std::vector<GridIndex> out{path.front()};
    const std::size_t last = path.size() - 1;
    std::size_t anchor = 0;
    while (anchor < last) {
        std::size_t j = last;
        while (j > anchor + 1 && !line_of_sight(grid, weights, path[anchor], path[j], opts))
            --j;
        out.push_back(path[j]);
        anchor = j;
    }
    return out;
}

} // namespace chartroute
