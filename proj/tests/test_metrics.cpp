#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace chartroute;
using namespace chartroute::testing;

namespace {

// Great-circle distance on a sphere where one degree of arc is 60 NM.
double haversine_nm(GeoPoint a, GeoPoint b)
{
    const double rad = std::numbers::pi / 180.0;
    const double radius_nm = 60.0 / rad;
    const double dlat = (b.lat - a.lat) * rad;
    const double dlon = (b.lon - a.lon) * rad;
    const double h = std::pow(std::sin(dlat / 2), 2)
        + std::cos(a.lat * rad) * std::cos(b.lat * rad) * std::pow(std::sin(dlon / 2), 2);
    return 2.0 * radius_nm * std::asin(std::sqrt(h));
}

} // namespace

TEST(Distance, MeridianStepIsExact)
{
    const GridSpec spec{{109.35, 18.10}, 0.005, 100, 60};
    const std::vector<GridIndex> p{{10, 10}, {10, 11}};
    EXPECT_EQ(route_distance_nm(p, spec), 0.3);
    EXPECT_EQ(route_distance_nm(std::vector<GridIndex>{{4, 4}}, spec), 0.0);
    EXPECT_THROW(route_distance_nm(std::vector<GridIndex>{}, spec), Error);
}

TEST(Distance, EastWestStepMatchesHaversine)
{
    // Row 0 centers sit exactly on 18.25 N.
    const GridSpec spec{{109.35, 18.2475}, 0.005, 10, 10};
    const std::vector<GridIndex> p{{3, 0}, {4, 0}};
    const double got = route_distance_nm(p, spec);
    EXPECT_NEAR(got, 0.3 * std::cos(18.25 * std::numbers::pi / 180.0), 1e-12);
    EXPECT_NEAR(got, 0.2849097, 1e-7);
    const double oracle = haversine_nm(cell_center(spec, p[0]), cell_center(spec, p[1]));
    EXPECT_LT(std::abs(got - oracle) / oracle, 1e-3);
}

// Property: additive over concatenation and invariant under reversal.
TEST(Distance, AdditiveAndReversible)
{
    const GridSpec spec{{109.35, 18.10}, 0.005, 100, 60};
    std::mt19937_64 rng(60);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<GridIndex> path{{static_cast<int>(rng() % 100), static_cast<int>(rng() % 60)}};
        for (int k = 0; k < 20; ++k) {
            auto n = path.back();
            n.col = std::clamp(n.col + static_cast<int>(rng() % 3) - 1, 0, 99);
            n.row = std::clamp(n.row + static_cast<int>(rng() % 3) - 1, 0, 59);
            path.push_back(n);
        }
        const std::size_t cut = 1 + rng() % (path.size() - 1);
        const std::vector<GridIndex> head(path.begin(), path.begin() + static_cast<long>(cut) + 1);
        const std::vector<GridIndex> tail(path.begin() + static_cast<long>(cut), path.end());
        const double whole = route_distance_nm(path, spec);
        EXPECT_NEAR(whole, route_distance_nm(head, spec) + route_distance_nm(tail, spec), 1e-12);
        std::vector<GridIndex> rev(path.rbegin(), path.rend());
        EXPECT_NEAR(whole, route_distance_nm(rev, spec), 1e-12);
    }
}

TEST(Hazards, Examples)
{
    const auto open = empty_grid(6, 6);
    EXPECT_EQ(potential_hazards(std::vector<GridIndex>{{0, 2}, {5, 2}}, open), 0u);

    const auto single = grid_from_ascii({
        "......",
        "......",
        "......",
        "......",
        "..#...",
        "......",
    });
    EXPECT_EQ(potential_hazards(std::vector<GridIndex>{{0, 0}, {5, 0}}, single), 1u);

    // 3-cell wall on row 2; the route runs along row 1 beside it.
    const auto wall = grid_from_ascii({
        "......",
        "......",
        "......",
        ".###..",
        "......",
        "......",
    });
    EXPECT_EQ(potential_hazards(std::vector<GridIndex>{{0, 1}, {5, 1}}, wall), 3u);
    EXPECT_EQ(potential_hazards(std::vector<GridIndex>{{0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}}, wall), 3u);
    EXPECT_EQ(potential_hazards(std::vector<GridIndex>{{0, 5}, {5, 5}}, wall), 0u);
}

TEST(Turns, Examples)
{
    EXPECT_EQ(turn_count(std::vector<GridIndex>{{0, 0}, {1, 0}, {2, 0}}), 0u);
    EXPECT_EQ(turn_count(std::vector<GridIndex>{{0, 0}, {1, 0}, {1, 1}}), 1u);
    EXPECT_EQ(turn_count(std::vector<GridIndex>{{0, 0}, {1, 1}, {2, 0}, {3, 1}}), 2u);
    EXPECT_EQ(turn_count(std::vector<GridIndex>{{0, 0}}), 0u);
}

// Property: on smoothed routes, turns <= nodes - 2.
TEST(Turns, BoundedBySmoothedInteriorNodes)
{
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 30; ++trial) {
        const auto g = random_grid(rng, 30, 20, 0.2);
        const auto w = compute_weight_field(g);
        const auto s = random_free_cell(rng, g);
        const auto t = random_free_cell(rng, g);
        try {
            const auto r = plan(g, w, PlanRequest{s, t, Algorithm::AStar, CostModel::PlainDistance});
            const auto sm = smooth(r.path, g, w);
            if (sm.size() >= 3) {
                EXPECT_LE(turn_count(sm), sm.size() - 2);
            }
        } catch (const Error&) {
        }
    }
}

TEST(Comparison, TableLayout)
{
    const auto g = empty_grid(8, 8);
    const auto w = compute_weight_field(g);
    std::vector<ComparisonTable::Column> cols;
    for (const auto a : {Algorithm::Dijkstra, Algorithm::AStar, Algorithm::ImprovedAStar}) {
        const auto r = plan(g, w, PlanRequest{{1, 1}, {6, 3}, a, default_cost_model(a)});
        cols.emplace_back(std::string(to_string(a)), evaluate(r, g));
    }
    const auto one = compare({cols.front()});
    EXPECT_EQ(one.to_json()["columns"].size(), 1u);

    const auto table = compare(cols);
    const auto j = table.to_json();
    ASSERT_EQ(j["rows"].size(), 6u);
    EXPECT_EQ(j["rows"][0]["metric"], "grid accuracy (degrees)");
    EXPECT_EQ(j["rows"][1]["metric"], "sailing distance (Nautical mile)");
    EXPECT_EQ(j["rows"][5]["metric"], "route turn times");
    for (const auto& row : j["rows"])
        EXPECT_EQ(row["values"].size(), 3u);

    const auto text = table.to_text();
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 7);
    EXPECT_NE(text.find("number of nodes traversed"), std::string::npos);
    EXPECT_NE(text.find("improved"), std::string::npos);
}

TEST(Comparison, MixedGrids)
{
    const auto a = empty_grid(4, 4);
    const auto b = empty_grid(5, 4);
    std::vector<ComparisonTable::Column> cols{{"a", evaluate(std::vector<GridIndex>{{0, 0}}, 1, a)},
                                              {"b", evaluate(std::vector<GridIndex>{{0, 0}}, 1, b)}};
    try {
        compare(cols);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::MixedGrids);
    }
    EXPECT_THROW(compare({}), Error);
}

TEST(Evaluate, CollectsAllMetrics)
{
    const auto g = grid_from_ascii({
        "....",
        ".#..",
        "....",
    });
    const auto w = compute_weight_field(g);
    const auto r = plan(g, w, PlanRequest{{0, 0}, {3, 2}, Algorithm::AStar, CostModel::PlainDistance});
    const auto m = evaluate(r, g);
    EXPECT_EQ(m.route_nodes, r.path.size());
    EXPECT_EQ(m.expanded_nodes, r.expanded);
    EXPECT_EQ(m.potential_hazards, 1u);
    EXPECT_EQ(m.grid, g.spec());
    EXPECT_NEAR(m.distance_nm, route_distance_nm(r.path, g.spec()), 0.0);
}
