#pragma once

// Best-first route search over the weighted occupancy grid: Dijkstra, plain
// A* and the safety-weighted A* with a pilot-quantity heuristic.  All three
// share one search core.

#include "chartroute/cost.hpp"
#include "chartroute/error.hpp"
#include "chartroute/grid.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <queue>
#include <string>
#include <string_view>
#include <vector>

namespace chartroute {

enum class Algorithm { Dijkstra, AStar, ImprovedAStar };
enum class CostModel { PlainDistance, SafetyWeighted };

inline constexpr std::string_view to_string(Algorithm a) noexcept
{
    switch (a) {
    case Algorithm::Dijkstra: return "dijkstra";
    case Algorithm::AStar: return "astar";
    case Algorithm::ImprovedAStar: return "improved";
    }
    return "?";
}

inline constexpr std::string_view to_string(CostModel m) noexcept
{
    return m == CostModel::PlainDistance ? "plain" : "weighted";
}

/// Baselines run on plain distance, the improved planner on weighted cost.
inline constexpr CostModel default_cost_model(Algorithm a) noexcept
{
    return a == Algorithm::ImprovedAStar ? CostModel::SafetyWeighted : CostModel::PlainDistance;
}

struct PlanRequest {
    GridIndex start;
    GridIndex goal;
    Algorithm algorithm = Algorithm::ImprovedAStar;
    CostModel cost_model = CostModel::SafetyWeighted;
};

struct PlanResult {
    std::vector<GridIndex> path;
    double total_cost = 0.0;
    SailingCost exact_cost;
    std::size_t expanded = 0; ///< nodes settled (non-stale pops)
    std::size_t generated = 0; ///< queue insertions

    friend bool operator==(const PlanResult&, const PlanResult&) = default;
};

/// Up to eight neighbours, in emission order.
class NeighborList {
public:
    void push_back(GridIndex idx) noexcept { items_[size_++] = idx; }
    std::size_t size() const noexcept { return size_; }
    const GridIndex* begin() const noexcept { return items_.data(); }
    const GridIndex* end() const noexcept { return items_.data() + size_; }
    const GridIndex& operator[](std::size_t i) const noexcept { return items_[i]; }

private:
    std::array<GridIndex, 8> items_{};
    std::size_t size_ = 0;
};

/// Navigable Moore neighbours in N, NE, E, SE, S, SW, W, NW order.  A
/// diagonal is dropped when either orthogonal cell beside it is blocked.
inline NeighborList neighbors(const OccupancyGrid& grid, GridIndex idx)
{
    NeighborList out;
    for (const auto& d : moore_offsets) {
        const GridIndex n{idx.col + d.col, idx.row + d.row};
        if (grid.blocked(n))
            continue;
        if (d.col != 0 && d.row != 0
            && (grid.blocked({idx.col + d.col, idx.row}) || grid.blocked({idx.col, idx.row + d.row})))
            continue;
        out.push_back(n);
    }
    return out;
}

inline bool are_adjacent(GridIndex a, GridIndex b) noexcept
{
    const int dc = std::abs(a.col - b.col);
    const int dr = std::abs(a.row - b.row);
    return dc <= 1 && dr <= 1 && (dc + dr) > 0;
}

namespace detail {

inline void require_adjacent(GridIndex from, GridIndex to)
{
    if (!are_adjacent(from, to))
        throw Error(ErrorCode::NotAdjacent, "cells (" + std::to_string(from.col) + "," + std::to_string(from.row)
                                                + ") and (" + std::to_string(to.col) + "," + std::to_string(to.row)
                                                + ") are not 8-neighbours");
}

} // namespace detail

/// Exact cost of one step into `to`: length times w(to) under
/// SafetyWeighted, plain length otherwise.
inline SailingCost step_cost_exact(GridIndex from, GridIndex to, CostModel model, const SafetyWeightField& weights)
{
    detail::require_adjacent(from, to);
    const std::int64_t halves = model == CostModel::SafetyWeighted ? weights.half_units(to) : 2;
    const bool diagonal = from.col != to.col && from.row != to.row;
    return diagonal ? SailingCost{0, halves} : SailingCost{halves, 0};
}

inline double step_cost(GridIndex from, GridIndex to, CostModel model, const SafetyWeightField& weights)
{
    detail::require_adjacent(from, to);
    const double length = (from.col != to.col && from.row != to.row) ? std::numbers::sqrt2 : 1.0;
    return model == CostModel::SafetyWeighted ? length * weights.at(to) : length;
}

inline double cell_distance(GridIndex a, GridIndex b) noexcept
{
    return std::hypot(static_cast<double>(a.col - b.col), static_cast<double>(a.row - b.row));
}

/// sin of the angle at `goal` between the start->goal baseline and the
/// current->goal vector, from the magnitude of their cross product.  Zero at
/// the goal itself.
inline double cross_sine(GridIndex start, GridIndex goal, GridIndex current)
{
    if (start == goal)
        throw Error(ErrorCode::DegenerateBaseline, "start and goal coincide");
    if (current == goal)
        return 0.0;
    const double cx = current.col - goal.col;
    const double cy = current.row - goal.row;
    const double sx = start.col - goal.col;
    const double sy = start.row - goal.row;
    const double cross = cx * sy - sx * cy;
    const double s = std::abs(cross) / (std::hypot(cx, cy) * std::hypot(sx, sy));
    return std::clamp(s, 0.0, 1.0);
}

/// Pilot quantity 3 / (4 - sin theta), in [0.75, 1].
inline double pilot_quantity(double sin_theta) { return 3.0 / (4.0 - sin_theta); }

inline double heuristic_plain(GridIndex i, GridIndex goal) { return cell_distance(i, goal); }

/// Straight-line distance to the goal scaled by the pilot quantity; never
/// above the plain distance, hence admissible for any weights >= 1.
inline double heuristic_improved(GridIndex i, GridIndex start, GridIndex goal)
{
    return cell_distance(i, goal) * pilot_quantity(cross_sine(start, goal, i));
}

/// Observer that ignores search events.
struct NullSearchObserver {
    void operator()(GridIndex, const SailingCost&) const noexcept {}
};

/// Best-first search from req.start to req.goal.
///
/// Queue order is f, then h, then insertion sequence.  Entries are never
/// updated in place: an improved g pushes a fresh entry and stale entries
/// are skipped on pop.  A settled node whose g later improves is reopened,
/// which keeps the result optimal when the heuristic is admissible but not
/// consistent.  `on_settle(idx, g)` fires for every settled node.
template <typename Observer = NullSearchObserver>
PlanResult plan(const OccupancyGrid& grid, const SafetyWeightField& weights, const PlanRequest& req,
                Observer&& on_settle = {})
{
    const auto& spec = grid.spec();
    if (weights.spec() != spec)
        throw Error(ErrorCode::InvalidArgument, "weight field does not belong to this grid");
    auto check_endpoint = [&](GridIndex idx, const char* which) {
        if (!grid.in_bounds(idx))
            throw Error(ErrorCode::InvalidEndpoint, std::string(which) + " lies outside the grid");
        if (grid.blocked(idx))
            throw Error(ErrorCode::InvalidEndpoint, std::string(which) + " lies in a non-navigable cell");
    };
    check_endpoint(req.start, "start");
    check_endpoint(req.goal, "goal");

    PlanResult result;
    if (req.start == req.goal) {
        on_settle(req.start, SailingCost{});
        result.path = {req.start};
        result.expanded = 1;
        result.generated = 1;
        return result;
    }

    auto heuristic = [&](GridIndex i) -> double {
        switch (req.algorithm) {
        case Algorithm::Dijkstra: return 0.0;
        case Algorithm::AStar: return heuristic_plain(i, req.goal);
        case Algorithm::ImprovedAStar: return heuristic_improved(i, req.start, req.goal);
        }
        return 0.0;
    };

    constexpr std::uint32_t none = std::numeric_limits<std::uint32_t>::max();
    const std::size_t n = spec.cell_count();
    std::vector<SailingCost> g(n);
    std::vector<std::uint8_t> reached(n, 0);
    std::vector<std::uint8_t> closed(n, 0);
    std::vector<std::uint32_t> parent(n, none);
    std::vector<double> h(n, std::numeric_limits<double>::quiet_NaN());

    struct Entry {
        double f;
        double h;
        std::uint64_t seq;
        std::uint32_t cell;
        SailingCost g;
    };
    auto later = [](const Entry& a, const Entry& b) {
        if (a.f != b.f)
            return a.f > b.f;
        if (a.h != b.h)
            return a.h > b.h;
        return a.seq > b.seq;
    };
    std::priority_queue<Entry, std::vector<Entry>, decltype(later)> open(later);
    std::uint64_t seq = 0;

    auto push = [&](std::uint32_t cell, SailingCost cost) {
        if (std::isnan(h[cell]))
            h[cell] = heuristic(spec.index_at(cell));
        open.push(Entry{cost.value() + h[cell], h[cell], seq++, cell, cost});
        ++result.generated;
    };

    const auto start = static_cast<std::uint32_t>(spec.offset(req.start));
    const auto goal = static_cast<std::uint32_t>(spec.offset(req.goal));
    g[start] = SailingCost{};
    reached[start] = 1;
    push(start, g[start]);

    while (!open.empty()) {
        const Entry top = open.top();
        open.pop();
        if (top.g != g[top.cell] || closed[top.cell])
            continue;
        closed[top.cell] = 1;
        ++result.expanded;
        const GridIndex here = spec.index_at(top.cell);
        on_settle(here, top.g);

        if (top.cell == goal) {
            for (std::uint32_t c = goal; c != none; c = parent[c])
                result.path.push_back(spec.index_at(c));
            std::reverse(result.path.begin(), result.path.end());
            result.exact_cost = top.g;
            result.total_cost = top.g.value();
            return result;
        }

        for (const GridIndex next : neighbors(grid, here)) {
            const auto cell = static_cast<std::uint32_t>(spec.offset(next));
            const SailingCost candidate = top.g + step_cost_exact(here, next, req.cost_model, weights);
            if (reached[cell] && !(candidate < g[cell]))
                continue;
            g[cell] = candidate;
            reached[cell] = 1;
            closed[cell] = 0;
            parent[cell] = top.cell;
            push(cell, candidate);
        }
    }
    throw Error(ErrorCode::NoPath, "goal is unreachable from start");
}

} // namespace chartroute
