#pragma once

// End-to-end runs used by the command-line tool: load a grid, plan,
// smooth, evaluate, and serialize the results.

#include "chartroute/grid.hpp"
#include "chartroute/grid_cache.hpp"
#include "chartroute/json_io.hpp"
#include "chartroute/metrics.hpp"
#include "chartroute/search.hpp"
#include "chartroute/smoothing.hpp"

#include <cstdint>
#include <future>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace chartroute {

inline constexpr std::string_view version = "chartroute 1.0.0";

/// Named region preset: the South China Sea cell at 0.005 degree cells.
struct RegionPreset {
    Extent extent;
    double cell_size;
};

inline constexpr RegionPreset scs_preset{{{109.35, 18.10}, {109.85, 18.40}}, 0.005};

inline std::optional<Algorithm> parse_algorithm(std::string_view name)
{
    if (name == "dijkstra")
        return Algorithm::Dijkstra;
    if (name == "astar")
        return Algorithm::AStar;
    if (name == "improved")
        return Algorithm::ImprovedAStar;
    return std::nullopt;
}

inline std::optional<CostModel> parse_cost_model(std::string_view name)
{
    if (name == "plain")
        return CostModel::PlainDistance;
    if (name == "weighted")
        return CostModel::SafetyWeighted;
    return std::nullopt;
}

struct PlanningGrid {
    OccupancyGrid grid;
    SafetyWeightField weights;
};

/// Accepts either a grid cache (has "spec") or an obstacle document (has
/// "extent"); documents are rasterized at `cell_size`.
inline PlanningGrid load_planning_grid(std::string_view text, std::optional<double> cell_size,
                                       std::uint64_t max_cells = default_max_cells)
{
    const Json j = parse_json_text(text);
    OccupancyGrid grid;
    if (j.is_object() && j.contains("spec")) {
        grid = grid_cache_from_json(j, max_cells);
    } else if (j.is_object() && j.contains("extent")) {
        if (!cell_size)
            throw Error(ErrorCode::InvalidArgument, "an obstacle document needs --cell-size (or --preset)");
        grid = rasterize(obstacle_document_from_json(j), *cell_size, max_cells);
    } else {
        throw Error(ErrorCode::SchemaError, "input is neither a grid cache nor an obstacle document");
    }
    auto weights = compute_weight_field(grid);
    return PlanningGrid{std::move(grid), std::move(weights)};
}

/// Grid cell of a lon/lat endpoint; outside the grid or on land is an
/// InvalidEndpoint.
inline GridIndex endpoint_cell(const OccupancyGrid& grid, const GeoPoint& p, const char* which)
{
    GridIndex idx;
    try {
        idx = index_of(grid.spec(), p);
    } catch (const Error&) {
        throw Error(ErrorCode::InvalidEndpoint, std::string(which) + " lies outside the chart");
    }
    if (grid.blocked(idx))
        throw Error(ErrorCode::InvalidEndpoint, std::string(which) + " lies in a non-navigable cell");
    return idx;
}

struct RouteRun {
    Algorithm algorithm = Algorithm::ImprovedAStar;
    CostModel cost_model = CostModel::SafetyWeighted;
    PlanResult result;
    std::vector<GridIndex> smoothed;
    RouteMetrics raw_metrics;
    RouteMetrics smoothed_metrics;
};

inline RouteRun run_route(const PlanningGrid& pg, GridIndex start, GridIndex goal, Algorithm algorithm,
                          CostModel cost_model, const SmoothingOptions& smoothing)
{
    RouteRun run;
    run.algorithm = algorithm;
    run.cost_model = cost_model;
    run.result = plan(pg.grid, pg.weights, PlanRequest{start, goal, algorithm, cost_model});
    run.smoothed = smooth(run.result.path, pg.grid, pg.weights, smoothing);
    run.raw_metrics = evaluate(run.result, pg.grid);
    run.smoothed_metrics = evaluate(run.smoothed, run.result.expanded, pg.grid);
    return run;
}

/// Runs every algorithm on the same grid and endpoints.  With `threads` > 1
/// the plans run concurrently; results are returned in `algorithms` order
/// either way.
inline std::vector<RouteRun> run_comparison(const PlanningGrid& pg, GridIndex start, GridIndex goal,
                                            const std::vector<Algorithm>& algorithms,
                                            std::optional<CostModel> cost_override,
                                            const SmoothingOptions& smoothing, unsigned threads = 1)
{
    auto one = [&](Algorithm a) {
        return run_route(pg, start, goal, a, cost_override.value_or(default_cost_model(a)), smoothing);
    };
    std::vector<RouteRun> runs;
    runs.reserve(algorithms.size());
    if (threads <= 1) {
        for (const auto a : algorithms)
            runs.push_back(one(a));
        return runs;
    }
    for (std::size_t begin = 0; begin < algorithms.size(); begin += threads) {
        std::vector<std::future<RouteRun>> batch;
        for (std::size_t i = begin; i < std::min(algorithms.size(), begin + threads); ++i)
            batch.push_back(std::async(std::launch::async, one, algorithms[i]));
        for (auto& f : batch)
            runs.push_back(f.get());
    }
    return runs;
}

inline Json path_json(std::span<const GridIndex> path, const GridSpec& spec)
{
    Json out = Json::array();
    for (const auto idx : path)
        out.push_back(point_json9(cell_center(spec, idx)));
    return out;
}

inline Json run_metrics_json(const RouteRun& run, bool smoothed)
{
    Json raw = metrics_json(run.raw_metrics);
    raw["generated_nodes"] = run.result.generated;
    raw["total_cost"] = round9(run.result.total_cost);
    Json out;
    out["raw"] = std::move(raw);
    out["smoothed"] = smoothed ? metrics_json(run.smoothed_metrics) : Json(nullptr);
    return out;
}

/// RouteOutput document for one planned route.
inline Json route_output_json(const Json& config, const RouteRun& run, const GridSpec& spec, bool smoothed)
{
    Json out;
    out["config"] = config;
    out["raw_path"] = path_json(run.result.path, spec);
    out["smoothed_path"] = smoothed ? path_json(run.smoothed, spec) : Json(nullptr);
    out["metrics"] = run_metrics_json(run, smoothed);
    out["version"] = version;
    return out;
}

inline ComparisonTable comparison_table(const std::vector<RouteRun>& runs, bool smoothed)
{
    std::vector<ComparisonTable::Column> cols;
    for (const auto& r : runs)
        cols.emplace_back(std::string(to_string(r.algorithm)), smoothed ? r.smoothed_metrics : r.raw_metrics);
    return compare(std::move(cols));
}

inline Json comparison_json(const Json& config, const std::vector<RouteRun>& runs)
{
    Json routes = Json::array();
    for (const auto& r : runs) {
        routes.push_back(Json{{"algorithm", to_string(r.algorithm)},
                              {"cost", to_string(r.cost_model)},
                              {"total_cost", round9(r.result.total_cost)},
                              {"generated_nodes", r.result.generated}});
    }
    Json out;
    out["config"] = config;
    out["routes"] = std::move(routes);
    out["raw"] = comparison_table(runs, false).to_json();
    out["smoothed"] = comparison_table(runs, true).to_json();
    out["version"] = version;
    return out;
}

inline std::string comparison_text(const std::vector<RouteRun>& runs)
{
    return "raw routes\n" + comparison_table(runs, false).to_text() + "\nsmoothed routes\n"
        + comparison_table(runs, true).to_text();
}

} // namespace chartroute
