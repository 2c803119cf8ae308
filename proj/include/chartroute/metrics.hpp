#pragma once

// Route evaluation: sailing distance, node counts, potential hazards and
// turns, plus a side-by-side comparison table.

#include "chartroute/error.hpp"
#include "chartroute/grid.hpp"
#include "chartroute/json_io.hpp"
#include "chartroute/search.hpp"
#include "chartroute/smoothing.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace chartroute {

inline constexpr double nm_per_degree = 60.0;

struct RouteMetrics {
    GridSpec grid;
    double distance_nm = 0.0;
    std::size_t route_nodes = 0;
    std::size_t expanded_nodes = 0;
    std::size_t potential_hazards = 0;
    std::size_t turn_count = 0;

    friend bool operator==(const RouteMetrics&, const RouteMetrics&) = default;
};

/// Equirectangular sailing distance between consecutive cell centers, with
/// east-west offsets scaled by the cosine of the segment's mean latitude.
inline double route_distance_nm(std::span<const GridIndex> path, const GridSpec& spec)
{
    if (path.empty())
        throw Error(ErrorCode::EmptyPath, "route has no nodes");
    double total = 0.0;
    for (std::size_t i = 1; i < path.size(); ++i) {
        const auto& a = path[i - 1];
        const auto& b = path[i];
        const double mean_lat = spec.origin.lat + (0.5 * (a.row + b.row) + 0.5) * spec.cell_size;
        const double dcol = (b.col - a.col) * std::cos(mean_lat * std::numbers::pi / 180.0);
        const double drow = b.row - a.row;
        total += nm_per_degree * spec.cell_size * std::sqrt(drow * drow + dcol * dcol);
    }
    return total;
}

/// Cells traced by the polyline through `path`, each segment by supercover.
inline std::vector<GridIndex> route_trace(std::span<const GridIndex> path)
{
    std::vector<GridIndex> trace;
    if (path.empty())
        return trace;
    trace.push_back(path.front());
    for (std::size_t i = 1; i < path.size(); ++i) {
        const auto seg = supercover(path[i - 1], path[i]);
        trace.insert(trace.end(), seg.begin() + 1, seg.end());
    }
    return trace;
}

/// Distinct blocked cells within one cell (Chebyshev) of the traced route.
inline std::size_t potential_hazards(std::span<const GridIndex> path, const OccupancyGrid& grid)
{
    const auto& spec = grid.spec();
    std::vector<std::uint8_t> counted(spec.cell_count(), 0);
    std::size_t hazards = 0;
    for (const GridIndex c : route_trace(path)) {
        for (int dr = -1; dr <= 1; ++dr) {
            for (int dc = -1; dc <= 1; ++dc) {
                const GridIndex n{c.col + dc, c.row + dr};
                if (!grid.in_bounds(n) || !grid.blocked(n))
                    continue;
                auto& mark = counted[spec.offset(n)];
                if (!mark) {
                    mark = 1;
                    ++hazards;
                }
            }
        }
    }
    return hazards;
}

/// Interior nodes where the heading's sign pattern changes.  Repeated nodes
/// carry no heading and are ignored.
inline std::size_t turn_count(std::span<const GridIndex> path)
{
    auto sign = [](int v) { return (v > 0) - (v < 0); };
    std::size_t turns = 0;
    bool have_heading = false;
    std::pair<int, int> heading{0, 0};
    for (std::size_t i = 1; i < path.size(); ++i) {
        const std::pair<int, int> d{sign(path[i].col - path[i - 1].col), sign(path[i].row - path[i - 1].row)};
        if (d == std::pair<int, int>{0, 0})
            continue;
        if (have_heading && d != heading)
            ++turns;
        heading = d;
        have_heading = true;
    }
    return turns;
}

inline RouteMetrics evaluate(std::span<const GridIndex> path, std::size_t expanded, const OccupancyGrid& grid)
{
    RouteMetrics m;
    m.grid = grid.spec();
    m.distance_nm = route_distance_nm(path, grid.spec());
    m.route_nodes = path.size();
    m.expanded_nodes = expanded;
    m.potential_hazards = potential_hazards(path, grid);
    m.turn_count = turn_count(path);
    return m;
}

inline RouteMetrics evaluate(const PlanResult& result, const OccupancyGrid& grid)
{
    return evaluate(result.path, result.expanded, grid);
}

inline Json metrics_json(const RouteMetrics& m)
{
    return Json{{"distance_nm", round9(m.distance_nm)},
                {"route_nodes", m.route_nodes},
                {"expanded_nodes", m.expanded_nodes},
                {"potential_hazards", m.potential_hazards},
                {"turn_count", m.turn_count}};
}

/// Metrics of several routes over one grid, in the row order of the
/// usual route-comparison table.
class ComparisonTable {
public:
    using Column = std::pair<std::string, RouteMetrics>;

    static constexpr std::array<const char*, 6> row_labels{
        "grid accuracy (degrees)",     "sailing distance (Nautical mile)", "number of route nodes",
        "number of nodes traversed",   "number of potential hazards",      "route turn times",
    };

    explicit ComparisonTable(std::vector<Column> columns)
        : columns_(std::move(columns))
    {
        if (columns_.empty())
            throw Error(ErrorCode::InvalidArgument, "comparison needs at least one route");
        for (const auto& [label, m] : columns_) {
            if (m.grid != columns_.front().second.grid)
                throw Error(ErrorCode::MixedGrids, "route \"" + label + "\" was evaluated on a different grid");
        }
    }

    const std::vector<Column>& columns() const noexcept { return columns_; }

    /// Cell text for row `row` of column `col`.
    std::string cell(std::size_t row, std::size_t col) const
    {
        const auto& m = columns_.at(col).second;
        char buf[64];
        switch (row) {
        case 0: std::snprintf(buf, sizeof buf, "%g*%g", m.grid.cell_size, m.grid.cell_size); break;
        case 1: std::snprintf(buf, sizeof buf, "%.2f", m.distance_nm); break;
        case 2: std::snprintf(buf, sizeof buf, "%zu", m.route_nodes); break;
        case 3: std::snprintf(buf, sizeof buf, "%zu", m.expanded_nodes); break;
        case 4: std::snprintf(buf, sizeof buf, "%zu", m.potential_hazards); break;
        case 5: std::snprintf(buf, sizeof buf, "%zu", m.turn_count); break;
        default: throw Error(ErrorCode::InvalidArgument, "no such comparison row");
        }
        return buf;
    }

    std::string to_text() const
    {
        std::size_t label_w = 0;
        for (const char* l : row_labels)
            label_w = std::max(label_w, std::string_view(l).size());
        std::vector<std::size_t> widths;
        for (std::size_t c = 0; c < columns_.size(); ++c) {
            std::size_t w = columns_[c].first.size();
            for (std::size_t r = 0; r < row_labels.size(); ++r)
                w = std::max(w, cell(r, c).size());
            widths.push_back(w);
        }
        auto pad = [](std::string s, std::size_t w, bool right) {
            const std::string fill(w > s.size() ? w - s.size() : 0, ' ');
            return right ? fill + s : s + fill;
        };
        std::string out = pad("", label_w, false);
        for (std::size_t c = 0; c < columns_.size(); ++c)
            out += "  " + pad(columns_[c].first, widths[c], true);
        out += '\n';
        for (std::size_t r = 0; r < row_labels.size(); ++r) {
            out += pad(row_labels[r], label_w, false);
            for (std::size_t c = 0; c < columns_.size(); ++c)
                out += "  " + pad(cell(r, c), widths[c], true);
            out += '\n';
        }
        return out;
    }

    Json to_json() const
    {
        Json labels = Json::array();
        for (const auto& col : columns_)
            labels.push_back(col.first);
        Json rows = Json::array();
        auto row = [&](std::size_t r, auto&& value_of) {
            Json values = Json::array();
            for (const auto& col : columns_)
                values.push_back(value_of(col.second));
            rows.push_back(Json{{"metric", row_labels[r]}, {"values", std::move(values)}});
        };
        row(0, [](const RouteMetrics& m) { return round9(m.grid.cell_size); });
        row(1, [](const RouteMetrics& m) { return round9(m.distance_nm); });
        row(2, [](const RouteMetrics& m) { return m.route_nodes; });
        row(3, [](const RouteMetrics& m) { return m.expanded_nodes; });
        row(4, [](const RouteMetrics& m) { return m.potential_hazards; });
        row(5, [](const RouteMetrics& m) { return m.turn_count; });
        return Json{{"columns", std::move(labels)}, {"rows", std::move(rows)}};
    }

private:
    std::vector<Column> columns_;
};

inline ComparisonTable compare(std::vector<ComparisonTable::Column> columns)
{
    return ComparisonTable(std::move(columns));
}

} // namespace chartroute
