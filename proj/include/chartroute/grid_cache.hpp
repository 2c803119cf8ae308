#pragma once

// Grid cache file: the grid spec plus a row-major run-length encoding of the
// blocked flags, [[value, count], ...].

#include "chartroute/grid.hpp"
#include "chartroute/json_io.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace chartroute {

inline Json grid_spec_json(const GridSpec& spec)
{
    return Json{{"origin", point_json(spec.origin)},
                {"cell_size", spec.cell_size},
                {"cols", spec.cols},
                {"rows", spec.rows}};
}

inline Json grid_cache_json(const OccupancyGrid& grid)
{
    Json runs = Json::array();
    const auto& cells = grid.cells();
    std::size_t i = 0;
    while (i < cells.size()) {
        std::size_t j = i;
        while (j < cells.size() && cells[j] == cells[i])
            ++j;
        runs.push_back(Json::array({static_cast<int>(cells[i]), j - i}));
        i = j;
    }
    Json out;
    out["spec"] = grid_spec_json(grid.spec());
    out["blocked"] = std::move(runs);
    return out;
}

inline std::string emit_grid_cache(const OccupancyGrid& grid) { return grid_cache_json(grid).dump() + "\n"; }

inline GridSpec grid_spec_from_json(const Json& j)
{
    GridSpec spec;
    spec.origin = detail::parse_point(detail::require(j, "origin", "spec"), "spec.origin");
    spec.cell_size = detail::require_number(detail::require(j, "cell_size", "spec"), "spec.cell_size");
    const Json& cols = detail::require(j, "cols", "spec");
    const Json& rows = detail::require(j, "rows", "spec");
    if (!cols.is_number_integer() || !rows.is_number_integer())
        throw Error(ErrorCode::SchemaError, "spec.cols/spec.rows: expected integers");
    spec.cols = cols.get<int>();
    spec.rows = rows.get<int>();
    check_spec(spec);
    return spec;
}

inline OccupancyGrid grid_cache_from_json(const Json& j, std::uint64_t max_cells = default_max_cells)
{
    const GridSpec spec = grid_spec_from_json(detail::require(j, "spec", "grid cache"));
    if (static_cast<std::uint64_t>(spec.cols) * static_cast<std::uint64_t>(spec.rows) > max_cells)
        throw Error(ErrorCode::GridTooLarge, "grid cache exceeds the cell limit");
    const Json& runs = detail::require(j, "blocked", "grid cache");
    if (!runs.is_array())
        throw Error(ErrorCode::SchemaError, "blocked: expected an array of [value, count] runs");
    std::vector<std::uint8_t> cells;
    cells.reserve(spec.cell_count());
    for (const auto& run : runs) {
        if (!run.is_array() || run.size() != 2 || !run[0].is_number_integer() || !run[1].is_number_unsigned())
            throw Error(ErrorCode::SchemaError, "blocked: each run must be [0|1, count]");
        const auto value = run[0].get<int>();
        const auto count = run[1].get<std::uint64_t>();
        if (value != 0 && value != 1)
            throw Error(ErrorCode::SchemaError, "blocked: run value must be 0 or 1");
        if (count > spec.cell_count() - cells.size())
            throw Error(ErrorCode::SchemaError, "blocked: runs exceed cols*rows");
        cells.insert(cells.end(), count, static_cast<std::uint8_t>(value));
    }
    if (cells.size() != spec.cell_count())
        throw Error(ErrorCode::SchemaError, "blocked: runs cover " + std::to_string(cells.size())
                                                + " cells, expected " + std::to_string(spec.cell_count()));
    return OccupancyGrid(spec, std::move(cells));
}

inline OccupancyGrid load_grid_cache(std::string_view text, std::uint64_t max_cells = default_max_cells)
{
    return grid_cache_from_json(parse_json_text(text), max_cells);
}

} // namespace chartroute
