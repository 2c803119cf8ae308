#pragma once

// Occupancy grid over an obstacle document and the per-cell sailing safety
// weight derived from it.

#include "chartroute/error.hpp"
#include "chartroute/geo.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace chartroute {

inline constexpr std::uint64_t default_max_cells = 16'777'216;

/// (column, row) of a grid cell; column grows east, row grows north.
struct GridIndex {
    int col = 0;
    int row = 0;

    friend bool operator==(const GridIndex&, const GridIndex&) = default;
    friend auto operator<=>(const GridIndex&, const GridIndex&) = default;
};

struct GridSpec {
    GeoPoint origin; ///< south-west corner
    double cell_size = 0.0; ///< degrees per (square) cell edge
    int cols = 0;
    int rows = 0;

    std::size_t cell_count() const noexcept
    {
        return static_cast<std::size_t>(cols) * static_cast<std::size_t>(rows);
    }
    bool contains(GridIndex idx) const noexcept
    {
        return idx.col >= 0 && idx.row >= 0 && idx.col < cols && idx.row < rows;
    }
    /// Row-major offset (row 0 first).
    std::size_t offset(GridIndex idx) const noexcept
    {
        return static_cast<std::size_t>(idx.row) * static_cast<std::size_t>(cols)
            + static_cast<std::size_t>(idx.col);
    }
    GridIndex index_at(std::size_t offset) const noexcept
    {
        return GridIndex{static_cast<int>(offset % static_cast<std::size_t>(cols)),
                         static_cast<int>(offset / static_cast<std::size_t>(cols))};
    }

    friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

inline void check_spec(const GridSpec& spec)
{
    if (!(spec.cell_size > 0.0) || !std::isfinite(spec.cell_size))
        throw Error(ErrorCode::InvalidArgument, "cell size must be a positive number of degrees");
    if (spec.cols < 1 || spec.rows < 1)
        throw Error(ErrorCode::InvalidArgument, "grid needs at least one column and one row");
}

/// Center of cell `idx`.
inline GeoPoint cell_center(const GridSpec& spec, GridIndex idx)
{
    if (!spec.contains(idx))
        throw Error(ErrorCode::OutOfBounds,
                    "cell (" + std::to_string(idx.col) + "," + std::to_string(idx.row) + ") outside grid");
    return GeoPoint{spec.origin.lon + (idx.col + 0.5) * spec.cell_size,
                    spec.origin.lat + (idx.row + 0.5) * spec.cell_size};
}

/// Cell containing `p`; points on the far (east/north) edge of the grid map
/// to the last column/row.
inline GridIndex index_of(const GridSpec& spec, const GeoPoint& p)
{
    const double u = (p.lon - spec.origin.lon) / spec.cell_size;
    const double v = (p.lat - spec.origin.lat) / spec.cell_size;
    if (!(u >= 0.0 && v >= 0.0 && u <= spec.cols && v <= spec.rows))
        throw Error(ErrorCode::OutOfBounds, "position outside grid coverage");
    return GridIndex{std::min(static_cast<int>(std::floor(u)), spec.cols - 1),
                     std::min(static_cast<int>(std::floor(v)), spec.rows - 1)};
}

/// Navigable/blocked raster; immutable once built.
class OccupancyGrid {
public:
    OccupancyGrid() = default;

    OccupancyGrid(GridSpec spec, std::vector<std::uint8_t> blocked)
        : spec_(spec)
        , blocked_(std::move(blocked))
    {
        check_spec(spec_);
        if (blocked_.size() != spec_.cell_count())
            throw Error(ErrorCode::InvariantViolation,
                        "grid holds " + std::to_string(blocked_.size()) + " cells, spec needs "
                            + std::to_string(spec_.cell_count()));
    }

    const GridSpec& spec() const noexcept { return spec_; }
    int cols() const noexcept { return spec_.cols; }
    int rows() const noexcept { return spec_.rows; }
    bool in_bounds(GridIndex idx) const noexcept { return spec_.contains(idx); }

    /// Out-of-bounds cells read as blocked.
    bool blocked(GridIndex idx) const noexcept { return !in_bounds(idx) || blocked_[spec_.offset(idx)] != 0; }
    bool navigable(GridIndex idx) const noexcept { return !blocked(idx); }

    const std::vector<std::uint8_t>& cells() const noexcept { return blocked_; }

    std::size_t blocked_count() const noexcept
    {
        return static_cast<std::size_t>(std::count(blocked_.begin(), blocked_.end(), std::uint8_t{1}));
    }

    friend bool operator==(const OccupancyGrid&, const OccupancyGrid&) = default;

private:
    GridSpec spec_;
    std::vector<std::uint8_t> blocked_;
};

namespace detail {

/// Even-odd crossing test in cell units.
inline bool point_in_ring(double x, double y, const std::vector<std::pair<double, double>>& ring) noexcept
{
    bool inside = false;
    for (std::size_t i = 0, j = ring.size() - 1; i < ring.size(); j = i++) {
        const auto [xi, yi] = ring[i];
        const auto [xj, yj] = ring[j];
        if ((yi > y) != (yj > y) && x < (xj - xi) * (y - yi) / (yj - yi) + xi)
            inside = !inside;
    }
    return inside;
}

/// True iff segment a-b has a point strictly inside the open box
/// (x0,x1)x(y0,y1).  Liang-Barsky clip to the closed box, then test the
/// midpoint of the clipped piece: it is interior unless the piece lies on
/// the boundary.
inline bool segment_hits_open_box(double ax, double ay, double bx, double by, double x0, double y0, double x1,
                                  double y1) noexcept
{
    double t0 = 0.0;
    double t1 = 1.0;
    const double dx = bx - ax;
    const double dy = by - ay;
    const std::array<std::pair<double, double>, 4> pq{{{-dx, ax - x0}, {dx, x1 - ax}, {-dy, ay - y0}, {dy, y1 - ay}}};
    for (const auto& [p, q] : pq) {
        if (p == 0.0) {
            if (q < 0.0)
                return false;
            continue;
        }
        const double r = q / p;
        if (p < 0.0)
            t0 = std::max(t0, r);
        else
            t1 = std::min(t1, r);
        if (t0 > t1)
            return false;
    }
    const double tm = 0.5 * (t0 + t1);
    const double mx = ax + tm * dx;
    const double my = ay + tm * dy;
    return mx > x0 && mx < x1 && my > y0 && my < y1;
}

} // namespace detail

/// Grid covering `extent` with square cells of `cell_size` degrees.
inline GridSpec grid_spec_for(const Extent& extent, double cell_size)
{
    if (!(cell_size > 0.0) || !std::isfinite(cell_size))
        throw Error(ErrorCode::InvalidArgument, "cell size must be a positive number of degrees");
    // The slack keeps 0.5 / 0.005 at 100 columns despite representation error.
    auto count = [cell_size](double span) {
        const double n = std::ceil(span / cell_size - 1e-9);
        return std::max(1.0, n);
    };
    const double cols = count(extent.width());
    const double rows = count(extent.height());
    if (cols > std::numeric_limits<int>::max() || rows > std::numeric_limits<int>::max())
        throw Error(ErrorCode::GridTooLarge, "grid dimensions overflow");
    return GridSpec{extent.min, cell_size, static_cast<int>(cols), static_cast<int>(rows)};
}

/// Rasterizes `doc`.  A cell is blocked iff its interior meets a polygon:
/// the cell center lies inside the ring, a ring vertex lies inside the cell,
/// or a ring edge crosses the cell.  The document's rectangular extent is
/// the whole region, so the padding rule (bounding-rectangle cells outside
/// the region are obstacles) never adds cells here.
inline OccupancyGrid rasterize(const ObstacleDocument& doc, double cell_size,
                               std::uint64_t max_cells = default_max_cells)
{
    const GridSpec spec = grid_spec_for(doc.extent, cell_size);
    const auto cells = static_cast<std::uint64_t>(spec.cols) * static_cast<std::uint64_t>(spec.rows);
    if (cells > max_cells)
        throw Error(ErrorCode::GridTooLarge,
                    std::to_string(spec.cols) + "x" + std::to_string(spec.rows) + " = " + std::to_string(cells)
                        + " cells exceeds the limit of " + std::to_string(max_cells));

    std::vector<std::uint8_t> blocked(spec.cell_count(), 0);
    std::vector<std::pair<double, double>> ring;
    for (const auto& poly : doc.polygons) {
        if (poly.ring.empty())
            continue;
        ring.clear();
        double umin = std::numeric_limits<double>::infinity();
        double vmin = umin;
        double umax = -umin;
        double vmax = -umin;
        for (const auto& p : poly.ring) {
            const double u = (p.lon - spec.origin.lon) / cell_size;
            const double v = (p.lat - spec.origin.lat) / cell_size;
            ring.emplace_back(u, v);
            umin = std::min(umin, u);
            umax = std::max(umax, u);
            vmin = std::min(vmin, v);
            vmax = std::max(vmax, v);
        }
        const int c0 = std::max(0, static_cast<int>(std::floor(umin)) - 1);
        const int c1 = std::min(spec.cols - 1, static_cast<int>(std::floor(umax)) + 1);
        const int r0 = std::max(0, static_cast<int>(std::floor(vmin)) - 1);
        const int r1 = std::min(spec.rows - 1, static_cast<int>(std::floor(vmax)) + 1);

        for (int r = r0; r <= r1; ++r) {
            for (int c = c0; c <= c1; ++c) {
                auto& cell = blocked[spec.offset({c, r})];
                if (cell)
                    continue;
                const double x0 = c;
                const double x1 = c + 1.0;
                const double y0 = r;
                const double y1 = r + 1.0;
                bool hit = detail::point_in_ring(c + 0.5, r + 0.5, ring);
                for (std::size_t i = 0; !hit && i < ring.size(); ++i) {
                    const auto [ax, ay] = ring[i];
                    const auto [bx, by] = ring[(i + 1) % ring.size()];
                    hit = (ax > x0 && ax < x1 && ay > y0 && ay < y1)
                        || detail::segment_hits_open_box(ax, ay, bx, by, x0, y0, x1, y1);
                }
                if (hit)
                    cell = 1;
            }
        }
    }
    return OccupancyGrid(spec, std::move(blocked));
}

inline constexpr std::array<GridIndex, 8> moore_offsets{{
    {0, 1}, {1, 1}, {1, 0}, {1, -1}, {0, -1}, {-1, -1}, {-1, 0}, {-1, 1},
}};

/// Blocked cells among the 8 neighbours of `idx`; off-grid neighbours count
/// as blocked.
inline int blocked_neighbor_count(const OccupancyGrid& grid, GridIndex idx)
{
    if (!grid.in_bounds(idx))
        throw Error(ErrorCode::OutOfBounds,
                    "cell (" + std::to_string(idx.col) + "," + std::to_string(idx.row) + ") outside grid");
    int n = 0;
    for (const auto& d : moore_offsets)
        n += grid.blocked({idx.col + d.col, idx.row + d.row}) ? 1 : 0;
    return n;
}

/// w = 1 + 2^(n-1) / 2 for n >= 1 blocked neighbours; 1 for hazard-free
/// cells.
inline double safety_weight(int n)
{
    if (n < 0 || n > 8)
        throw Error(ErrorCode::InvalidArgument, "blocked neighbour count must be in [0, 8]");
    return n == 0 ? 1.0 : 1.0 + std::ldexp(1.0, n - 2);
}

/// Per-cell sailing safety weight; blocked cells hold +infinity.
class SafetyWeightField {
public:
    static constexpr double blocked_weight = std::numeric_limits<double>::infinity();

    SafetyWeightField() = default;
    SafetyWeightField(GridSpec spec, std::vector<double> w)
        : spec_(spec)
        , w_(std::move(w))
    {
    }

    const GridSpec& spec() const noexcept { return spec_; }
    double at(GridIndex idx) const { return w_.at(spec_.offset(idx)); }
    const std::vector<double>& values() const noexcept { return w_; }

    /// Weight in half units (2w); every finite weight is a multiple of 1/2.
    std::int64_t half_units(GridIndex idx) const { return static_cast<std::int64_t>(2.0 * at(idx)); }

    friend bool operator==(const SafetyWeightField&, const SafetyWeightField&) = default;

private:
    GridSpec spec_;
    std::vector<double> w_;
};

inline SafetyWeightField compute_weight_field(const OccupancyGrid& grid)
{
    const auto& spec = grid.spec();
    std::vector<double> w(spec.cell_count(), SafetyWeightField::blocked_weight);
    for (int r = 0; r < spec.rows; ++r) {
        for (int c = 0; c < spec.cols; ++c) {
            const GridIndex idx{c, r};
            if (grid.navigable(idx))
                w[spec.offset(idx)] = safety_weight(blocked_neighbor_count(grid, idx));
        }
    }
    return SafetyWeightField(spec, std::move(w));
}

} // namespace chartroute
