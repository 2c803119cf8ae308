#include "test_support.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

using namespace chartroute;
using namespace chartroute::testing;
namespace fs = std::filesystem;

namespace {

class Cli : public ::testing::Test {
protected:
    void SetUp() override
    {
        dir_ = fs::temp_directory_path()
            / ("chartroute-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    std::string put(const std::string& name, const std::string& content) const
    {
        std::ofstream(path(name), std::ios::binary) << content;
        return path(name);
    }

    std::string put(const std::string& name, const iso8211::Bytes& bytes) const
    {
        return put(name, std::string(bytes.begin(), bytes.end()));
    }

    std::string q(const std::string& p) const { return "\"" + p + "\""; }

    fs::path dir_;
};

} // namespace

TEST_F(Cli, ParseS57Fixture)
{
    for (const auto& f : valid_iso_fixtures()) {
        if (f.name != "multi-record")
            continue;
        const auto in = put("chart.000", f.bytes);
        ASSERT_EQ(run_cli("parse-s57 " + q(in) + " -o " + q(path("doc.json"))), 0);
        const auto doc = load_obstacle_document(read_file(path("doc.json")));
        EXPECT_EQ(doc.polygons.size(), 2u);
    }
}

TEST_F(Cli, ParseS57EmptyAndTruncated)
{
    const auto empty = put("empty.000", std::string());
    EXPECT_EQ(run_cli("parse-s57 " + q(empty) + " -o " + q(path("out.json")), path("log")), 0);
    EXPECT_FALSE(fs::exists(path("out.json")));
    EXPECT_NE(read_file(path("log")).find("NoGeometry"), std::string::npos);

    auto bytes = sg2d_record({{1, 2}});
    bytes.resize(30);
    const auto trunc = put("trunc.000", bytes);
    EXPECT_EQ(run_cli("parse-s57 " + q(trunc) + " -o " + q(path("out.json")), path("log")), 2);
    EXPECT_NE(read_file(path("log")).find("at byte"), std::string::npos);
    EXPECT_FALSE(fs::exists(path("out.json")));
}

TEST_F(Cli, Rasterize)
{
    const ObstacleDocument doc{{{109.35, 18.10}, {109.85, 18.40}}, {}};
    const auto in = put("doc.json", emit_obstacle_document(doc));
    ASSERT_EQ(run_cli("rasterize " + q(in) + " --cell-size 0.005 -o " + q(path("grid.json")), path("log")), 0);
    const auto grid = load_grid_cache(read_file(path("grid.json")));
    EXPECT_EQ(grid.cols(), 100);
    EXPECT_EQ(grid.rows(), 60);
    EXPECT_EQ(grid.blocked_count(), 0u);
    EXPECT_NE(read_file(path("log")).find("blocked: 0.00%"), std::string::npos);

    EXPECT_EQ(run_cli("rasterize " + q(in) + " --cell-size 0 -o " + q(path("g0.json"))), 2);
    EXPECT_EQ(run_cli("rasterize " + q(in) + " -o " + q(path("g0.json"))), 2);
    EXPECT_EQ(run_cli("rasterize " + q(in) + " --cell-size 1e-6 -o " + q(path("g0.json"))), 2);
}

TEST_F(Cli, PlanEmptyMap)
{
    const auto grid = put("grid.json", emit_grid_cache(empty_grid(8, 8)));
    ASSERT_EQ(run_cli("plan " + q(grid) + " --algo improved --start 2.5,2.5 --goal 5.5,5.5 -o "
                      + q(path("route.json"))),
              0);
    const auto out = parse_json_text(read_file(path("route.json")));
    const std::vector<std::string> keys{"config", "raw_path", "smoothed_path", "metrics", "version"};
    std::vector<std::string> got;
    for (const auto& [k, v] : out.items())
        got.push_back(k);
    EXPECT_EQ(got, keys);
    ASSERT_EQ(out["raw_path"].size(), 4u);
    for (int i = 0; i < 4; ++i) {
        EXPECT_EQ(out["raw_path"][i][0].get<double>(), 2.5 + i);
        EXPECT_EQ(out["raw_path"][i][1].get<double>(), 2.5 + i);
    }
    EXPECT_TRUE(out["smoothed_path"].is_null());
    EXPECT_NEAR(out["metrics"]["raw"]["total_cost"].get<double>(), 3 * std::sqrt(2.0), 1e-8);
}

TEST_F(Cli, PlanEdgeCases)
{
    const auto g = grid_from_ascii({
        "......",
        "..###.",
        "..#.#.",
        "..###.",
        "......",
    });
    const auto grid = put("grid.json", emit_grid_cache(g));
    ASSERT_EQ(run_cli("plan " + q(grid) + " --start 0.5,0.5 --goal 0.5,0.5 --smooth -o " + q(path("same.json"))), 0);
    const auto same = parse_json_text(read_file(path("same.json")));
    EXPECT_EQ(same["raw_path"].size(), 1u);
    EXPECT_EQ(same["smoothed_path"].size(), 1u);
    EXPECT_EQ(same["metrics"]["smoothed"]["distance_nm"].get<double>(), 0.0);

    EXPECT_EQ(run_cli("plan " + q(grid) + " --start 0.5,0.5 --goal 2.5,2.5 -o " + q(path("x.json"))), 2);
    EXPECT_EQ(run_cli("plan " + q(grid) + " --start 0.5,0.5 --goal 3.5,2.5 -o " + q(path("x.json"))), 3);
    EXPECT_EQ(run_cli("plan " + q(grid) + " --start 0.5,0.5 --goal 30,2 -o " + q(path("x.json"))), 2);
    EXPECT_EQ(run_cli("plan " + q(grid) + " --algo bogus --start 0.5,0.5 --goal 5.5,0.5 -o " + q(path("x.json"))),
              2);
    EXPECT_EQ(run_cli("plan " + q(grid) + " --cost heavy --start 0.5,0.5 --goal 5.5,0.5 -o " + q(path("x.json"))),
              2);
    EXPECT_EQ(run_cli("plan " + q(grid) + " --start 0.5 --goal 5.5,0.5 -o " + q(path("x.json"))), 2);
    EXPECT_FALSE(fs::exists(path("x.json")));
}

TEST_F(Cli, PlanRenderAndRoundTrip)
{
    const auto doc = generate_archipelago({.seed = 7, .cols = 40, .rows = 30, .islands = 4, .max_radius_cells = 4});
    const auto in = put("doc.json", emit_obstacle_document(doc));
    const auto pg = load_planning_grid(read_file(in), 0.005);
    std::mt19937_64 rng(1);
    GridIndex s, t;
    do {
        s = random_free_cell(rng, pg.grid);
        t = random_free_cell(rng, pg.grid);
    } while (s == t);
    const auto sp = cell_center(pg.grid.spec(), s);
    const auto tp = cell_center(pg.grid.spec(), t);
    char endpoints[128];
    std::snprintf(endpoints, sizeof endpoints, "--start %.9f,%.9f --goal %.9f,%.9f", sp.lon, sp.lat, tp.lon, tp.lat);
    const int code = run_cli("plan " + q(in) + " --cell-size 0.005 " + endpoints + " --smooth --render "
                             + q(path("map.pgm")) + " -o " + q(path("route.json")));
    if (code == 3)
        GTEST_SKIP() << "endpoints disconnected";
    ASSERT_EQ(code, 0);

    const auto out = parse_json_text(read_file(path("route.json")));
    const auto run = run_route(pg, s, t, Algorithm::ImprovedAStar, CostModel::SafetyWeighted, {});
    ASSERT_EQ(out["raw_path"].size(), run.result.path.size());
    for (std::size_t i = 0; i < run.result.path.size(); ++i) {
        const GeoPoint p{out["raw_path"][i][0].get<double>(), out["raw_path"][i][1].get<double>()};
        EXPECT_EQ(index_of(pg.grid.spec(), p), run.result.path[i]);
    }
    ASSERT_EQ(out["smoothed_path"].size(), run.smoothed.size());

    const auto pgm = read_file(path("map.pgm"));
    const std::string header = "P5\n40 30\n255\n";
    ASSERT_EQ(pgm.size(), header.size() + 40 * 30);
    EXPECT_EQ(pgm.substr(0, header.size()), header);
    // North up: the start cell lives at image row rows-1-s.row.
    const auto pixel = [&](GridIndex c) {
        return static_cast<unsigned char>(pgm[header.size() + static_cast<std::size_t>((29 - c.row) * 40 + c.col)]);
    };
    EXPECT_EQ(pixel(s), shade::smoothed_route);
}

TEST_F(Cli, CompareTables)
{
    const auto grid = put("grid.json", emit_grid_cache(empty_grid(12, 12)));
    ASSERT_EQ(run_cli("compare " + q(grid) + " --start 1.5,1.5 --goal 10.5,7.5 -o " + q(path("cmp.json")) + " --text "
                      + q(path("cmp.txt"))),
              0);
    const auto out = parse_json_text(read_file(path("cmp.json")));
    EXPECT_EQ(out["raw"]["rows"].size(), 6u);
    EXPECT_EQ(out["raw"]["columns"].size(), 3u);
    EXPECT_NE(read_file(path("cmp.txt")).find("route turn times"), std::string::npos);

    ASSERT_EQ(run_cli("compare " + q(grid) + " --algos astar --start 1.5,1.5 --goal 10.5,7.5 -o "
                      + q(path("one.json"))),
              0);
    EXPECT_EQ(parse_json_text(read_file(path("one.json")))["raw"]["columns"].size(), 1u);
    EXPECT_EQ(run_cli("compare " + q(grid) + " --algos astar,greedy --start 1.5,1.5 --goal 10.5,7.5 -o "
                      + q(path("bad.json"))),
              2);
}

TEST_F(Cli, GenmapDeterministicAndGolden)
{
    ASSERT_EQ(run_cli("genmap --seed 42 -o " + q(path("a.json"))), 0);
    ASSERT_EQ(run_cli("genmap --seed 42 -o " + q(path("b.json"))), 0);
    EXPECT_EQ(read_file(path("a.json")), read_file(path("b.json")));
    EXPECT_EQ(read_file(path("a.json")), read_file(std::string(CHARTROUTE_TEST_DATA) + "/genmap_seed42.json"));

    ASSERT_EQ(run_cli("genmap --seed 42 --islands 0 -o " + q(path("none.json"))), 0);
    EXPECT_TRUE(load_obstacle_document(read_file(path("none.json"))).polygons.empty());
    EXPECT_EQ(run_cli("genmap --seed 1 --cols 10 --rows 10 --radius 5 -o " + q(path("x.json"))), 2);
    EXPECT_EQ(run_cli("genmap --seed 1 --cols 20 --rows 20 --islands 500 --radius 4 -o " + q(path("x.json"))), 2);
}

TEST(Genmap, IslandsStayInsideExtent)
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto doc = generate_archipelago({.seed = seed});
        EXPECT_EQ(doc.polygons.size(), 8u);
        EXPECT_NO_THROW(validate(doc));
        EXPECT_EQ(emit_obstacle_document(generate_archipelago({.seed = seed})), emit_obstacle_document(doc));
    }
}

TEST(Pipeline, LoadPlanningGridDetectsFormat)
{
    const auto cache = emit_grid_cache(empty_grid(3, 2));
    EXPECT_EQ(load_planning_grid(cache, std::nullopt).grid.cols(), 3);
    const ObstacleDocument doc{{{0.0, 0.0}, {1.0, 1.0}}, {}};
    EXPECT_THROW(load_planning_grid(emit_obstacle_document(doc), std::nullopt), Error);
    EXPECT_EQ(load_planning_grid(emit_obstacle_document(doc), 0.25).grid.cols(), 4);
    EXPECT_THROW(load_planning_grid("[1,2]", 0.25), Error);
}

TEST(Pipeline, ComparisonThreadsDoNotChangeResults)
{
    const auto doc = generate_archipelago({.seed = 3});
    const auto pg = load_planning_grid(emit_obstacle_document(doc), 0.005);
    std::mt19937_64 rng(4);
    const auto s = random_free_cell(rng, pg.grid);
    const auto t = random_free_cell(rng, pg.grid);
    const std::vector<Algorithm> algos{Algorithm::Dijkstra, Algorithm::AStar, Algorithm::ImprovedAStar};
    try {
        const auto a = run_comparison(pg, s, t, algos, std::nullopt, {}, 1);
        const auto b = run_comparison(pg, s, t, algos, std::nullopt, {}, 3);
        EXPECT_EQ(comparison_json(Json::object(), a).dump(), comparison_json(Json::object(), b).dump());
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NoPath);
    }
}
