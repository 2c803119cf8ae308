// chartroute: chart ingestion, rasterization, route planning and comparison
// from the command line.
//
// Exit codes: 0 success, 2 input or validation error, 3 no path.

#include "chartroute/chartroute.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace cr = chartroute;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_input = 2;
constexpr int exit_no_path = 3;

std::uint64_t max_cells_from_env()
{
    const char* env = std::getenv("CHARTROUTE_MAX_CELLS");
    if (!env || !*env)
        return cr::default_max_cells;
    try {
        std::size_t used = 0;
        const auto v = std::stoull(env, &used);
        if (used != std::string_view(env).size() || v == 0)
            throw std::invalid_argument(env);
        return v;
    } catch (const std::exception&) {
        throw cr::Error(cr::ErrorCode::InvalidArgument, "CHARTROUTE_MAX_CELLS must be a positive integer");
    }
}

cr::GeoPoint parse_lonlat(const std::string& text, const char* what)
{
    std::istringstream in(text);
    double lon = 0.0;
    double lat = 0.0;
    char comma = 0;
    if (!(in >> lon >> comma >> lat) || comma != ',' || !(in >> std::ws).eof())
        throw cr::Error(cr::ErrorCode::InvalidArgument, std::string(what) + " must be LON,LAT, got \"" + text + "\"");
    return {lon, lat};
}

/// Cell size from --cell-size or --preset; nullopt when neither is given.
std::optional<double> resolve_cell_size(double cell_size, const std::string& preset)
{
    if (!preset.empty()) {
        if (preset != "scs")
            throw cr::Error(cr::ErrorCode::InvalidArgument, "unknown preset \"" + preset + "\"");
        if (cell_size == 0.0)
            return cr::scs_preset.cell_size;
    }
    if (cell_size != 0.0 || !preset.empty()) {
        if (!(cell_size > 0.0))
            throw cr::Error(cr::ErrorCode::InvalidArgument, "--cell-size must be positive");
        return cell_size;
    }
    return std::nullopt;
}

/// Applies --preset to an obstacle document (the preset fixes the region).
std::string apply_preset(std::string text, const std::string& preset)
{
    if (preset.empty())
        return text;
    auto j = cr::parse_json_text(text);
    if (!j.contains("extent"))
        return text;
    auto doc = cr::obstacle_document_from_json(j);
    doc.extent = cr::scs_preset.extent;
    cr::validate(doc);
    return cr::emit_obstacle_document(doc);
}

struct CommonPlanArgs {
    std::string input;
    std::string start;
    std::string goal;
    std::string cost;
    double cell_size = 0.0;
    std::string preset;
    bool smooth = false;
    bool strict_safety = false;
    std::string output;
};

void add_common(CLI::App* cmd, CommonPlanArgs& a)
{
    cmd->add_option("input", a.input, "grid cache or obstacle document")->required();
    cmd->add_option("--start", a.start, "start position LON,LAT")->required();
    cmd->add_option("--goal", a.goal, "goal position LON,LAT")->required();
    cmd->add_option("--cost", a.cost, "cost model: plain | weighted (default per algorithm)");
    cmd->add_option("--cell-size", a.cell_size, "cell size in degrees when the input is an obstacle document");
    cmd->add_option("--preset", a.preset, "named region preset (scs)");
    cmd->add_flag("--smooth", a.smooth, "remove redundant route nodes");
    cmd->add_flag("--strict-safety", a.strict_safety, "smoothing may not cross cells with weight > 1");
    cmd->add_option("-o,--output", a.output, "output JSON path")->required();
}

struct Prepared {
    cr::PlanningGrid pg;
    cr::GridIndex start;
    cr::GridIndex goal;
    std::optional<cr::CostModel> cost;
    cr::Json config;
};

Prepared prepare(const CommonPlanArgs& a)
{
    std::optional<cr::CostModel> cost;
    if (!a.cost.empty()) {
        cost = cr::parse_cost_model(a.cost);
        if (!cost)
            throw cr::Error(cr::ErrorCode::InvalidArgument, "unknown cost model \"" + a.cost + "\"");
    }
    const auto start_p = parse_lonlat(a.start, "--start");
    const auto goal_p = parse_lonlat(a.goal, "--goal");
    const auto cell = resolve_cell_size(a.cell_size, a.preset);
    auto pg = cr::load_planning_grid(apply_preset(cr::read_file(a.input), a.preset), cell, max_cells_from_env());
    const auto start = cr::endpoint_cell(pg.grid, start_p, "start");
    const auto goal = cr::endpoint_cell(pg.grid, goal_p, "goal");

    cr::Json config;
    config["input"] = a.input;
    config["cell_size"] = pg.grid.spec().cell_size;
    config["start"] = cr::point_json(start_p);
    config["goal"] = cr::point_json(goal_p);
    config["cost"] = a.cost.empty() ? cr::Json(nullptr) : cr::Json(a.cost);
    config["smooth"] = a.smooth;
    config["strict_safety"] = a.strict_safety;
    return Prepared{std::move(pg), start, goal, cost, std::move(config)};
}

int cmd_parse_s57(const std::string& input, std::optional<double> comf_flag, const std::string& output)
{
    const std::string text = cr::read_file(input);
    const std::span<const std::uint8_t> bytes(reinterpret_cast<const std::uint8_t*>(text.data()), text.size());
    const auto records = cr::iso8211::parse_file(bytes);
    std::cout << "records: " << records.size() << "\n";

    if (comf_flag && !(*comf_flag > 0.0))
        throw cr::Error(cr::ErrorCode::InvalidArgument, "--comf must be positive");
    const double comf = comf_flag.value_or(cr::s57::dataset_comf(records).value_or(cr::s57::default_comf));
    try {
        const auto doc = cr::s57::s57_to_obstacles(records, comf);
        cr::write_file_atomic(output, cr::emit_obstacle_document(doc));
        std::cout << "polygons: " << doc.polygons.size() << "\n";
    } catch (const cr::Error& e) {
        if (e.code() != cr::ErrorCode::NoGeometry)
            throw;
        std::cerr << "warning: " << e.what() << "; no output written\n";
        std::cout << "polygons: 0\n";
    }
    return exit_ok;
}

int cmd_rasterize(const std::string& input, double cell_size, const std::string& preset, const std::string& output)
{
    const auto cell = resolve_cell_size(cell_size, preset);
    if (!cell)
        throw cr::Error(cr::ErrorCode::InvalidArgument, "--cell-size must be positive");
    const auto doc = cr::load_obstacle_document(apply_preset(cr::read_file(input), preset));
    const auto grid = cr::rasterize(doc, *cell, max_cells_from_env());
    cr::write_file_atomic(output, cr::emit_grid_cache(grid));
    const double pct = 100.0 * static_cast<double>(grid.blocked_count()) / static_cast<double>(grid.spec().cell_count());
    std::printf("grid: %dx%d\nblocked: %.2f%%\n", grid.cols(), grid.rows(), pct);
    return exit_ok;
}

int cmd_plan(const CommonPlanArgs& a, const std::string& algo_name, const std::string& render)
{
    const auto algo = cr::parse_algorithm(algo_name);
    if (!algo)
        throw cr::Error(cr::ErrorCode::InvalidArgument, "unknown algorithm \"" + algo_name + "\"");
    auto p = prepare(a);
    p.config["algorithm"] = algo_name;
    const auto cost = p.cost.value_or(cr::default_cost_model(*algo));
    const auto run = cr::run_route(p.pg, p.start, p.goal, *algo, cost, {a.strict_safety});
    cr::write_file_atomic(a.output, cr::route_output_json(p.config, run, p.pg.grid.spec(), a.smooth).dump(1) + "\n");
    if (!render.empty()) {
        const std::vector<cr::GridIndex> none;
        cr::write_file_atomic(render, cr::render_pgm(p.pg.grid, p.pg.weights, run.result.path,
                                                     a.smooth ? std::span<const cr::GridIndex>(run.smoothed)
                                                              : std::span<const cr::GridIndex>(none)));
    }
    const auto& m = a.smooth ? run.smoothed_metrics : run.raw_metrics;
    std::printf("%s/%s: %zu nodes, %.4f NM, %zu expanded, %zu hazards, %zu turns\n", algo_name.c_str(),
                std::string(cr::to_string(cost)).c_str(), m.route_nodes, m.distance_nm, m.expanded_nodes,
                m.potential_hazards, m.turn_count);
    return exit_ok;
}

int cmd_compare(const CommonPlanArgs& a, const std::vector<std::string>& algo_names, unsigned threads,
                const std::string& text_out)
{
    std::vector<cr::Algorithm> algos;
    for (const auto& name : algo_names) {
        const auto algo = cr::parse_algorithm(name);
        if (!algo)
            throw cr::Error(cr::ErrorCode::InvalidArgument, "unknown algorithm \"" + name + "\"");
        algos.push_back(*algo);
    }
    if (algos.empty())
        throw cr::Error(cr::ErrorCode::InvalidArgument, "--algos needs at least one algorithm");
    auto p = prepare(a);
    p.config["algorithms"] = algo_names;
    const auto runs = cr::run_comparison(p.pg, p.start, p.goal, algos, p.cost, {a.strict_safety}, threads);
    cr::write_file_atomic(a.output, cr::comparison_json(p.config, runs).dump(1) + "\n");
    const auto text = cr::comparison_text(runs);
    if (!text_out.empty())
        cr::write_file_atomic(text_out, text);
    std::cout << text;
    return exit_ok;
}

int cmd_genmap(const cr::ArchipelagoOptions& opt, const std::string& output)
{
    const auto doc = cr::generate_archipelago(opt);
    cr::write_file_atomic(output, cr::emit_obstacle_document(doc));
    std::cout << "islands: " << doc.polygons.size() << "\n";
    return exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Chart-based global route planning for surface vessels"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(cr::version));

    std::string s57_input;
    std::optional<double> s57_comf;
    std::string s57_output;
    auto* parse_cmd = app.add_subcommand("parse-s57", "extract obstacle polygons from an ISO 8211 chart file");
    parse_cmd->add_option("file", s57_input, "ISO 8211 file")->required();
    parse_cmd->add_option("--comf", s57_comf, "coordinate multiplication factor (default: DSPM, else 1e7)");
    parse_cmd->add_option("-o,--output", s57_output, "obstacle document path")->required();

    std::string ras_input;
    double ras_cell = 0.0;
    std::string ras_preset;
    std::string ras_output;
    auto* ras_cmd = app.add_subcommand("rasterize", "rasterize an obstacle document into a grid cache");
    ras_cmd->add_option("doc", ras_input, "obstacle document")->required();
    ras_cmd->add_option("--cell-size", ras_cell, "cell size in degrees");
    ras_cmd->add_option("--preset", ras_preset, "named region preset (scs)");
    ras_cmd->add_option("-o,--output", ras_output, "grid cache path")->required();

    CommonPlanArgs plan_args;
    std::string plan_algo = "improved";
    std::string plan_render;
    auto* plan_cmd = app.add_subcommand("plan", "plan one route");
    add_common(plan_cmd, plan_args);
    plan_cmd->add_option("--algo", plan_algo, "dijkstra | astar | improved");
    plan_cmd->add_option("--render", plan_render, "write a PGM picture of the grid and routes");

    CommonPlanArgs cmp_args;
    std::vector<std::string> cmp_algos{"dijkstra", "astar", "improved"};
    unsigned cmp_threads = 1;
    std::string cmp_text;
    auto* cmp_cmd = app.add_subcommand("compare", "plan with several algorithms and tabulate the metrics");
    add_common(cmp_cmd, cmp_args);
    cmp_cmd->add_option("--algos", cmp_algos, "comma-separated algorithms")->delimiter(',');
    cmp_cmd->add_option("--threads", cmp_threads, "plans to run concurrently");
    cmp_cmd->add_option("--text", cmp_text, "also write the text table here");

    cr::ArchipelagoOptions gen;
    std::string gen_origin;
    std::string gen_output;
    auto* gen_cmd = app.add_subcommand("genmap", "generate a seeded synthetic archipelago");
    gen_cmd->add_option("--seed", gen.seed, "random seed")->required();
    gen_cmd->add_option("--cols", gen.cols, "columns");
    gen_cmd->add_option("--rows", gen.rows, "rows");
    gen_cmd->add_option("--islands", gen.islands, "number of islands");
    gen_cmd->add_option("--radius", gen.max_radius_cells, "largest island radius in cells");
    gen_cmd->add_option("--cell-size", gen.cell_size, "cell size in degrees");
    gen_cmd->add_option("--origin", gen_origin, "south-west corner LON,LAT");
    gen_cmd->add_option("-o,--output", gen_output, "obstacle document path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_input;
    }

    try {
        if (*parse_cmd)
            return cmd_parse_s57(s57_input, s57_comf, s57_output);
        if (*ras_cmd)
            return cmd_rasterize(ras_input, ras_cell, ras_preset, ras_output);
        if (*plan_cmd)
            return cmd_plan(plan_args, plan_algo, plan_render);
        if (*cmp_cmd)
            return cmd_compare(cmp_args, cmp_algos, cmp_threads, cmp_text);
        if (*gen_cmd) {
            if (!gen_origin.empty())
                gen.origin = parse_lonlat(gen_origin, "--origin");
            return cmd_genmap(gen, gen_output);
        }
    } catch (const cr::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == cr::ErrorCode::NoPath ? exit_no_path : exit_input;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    }
    return exit_input;
}
