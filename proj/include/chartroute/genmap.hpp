#pragma once

// Seeded synthetic archipelagos: convex islands scattered over a
// rectangular region, for exercising the planners without a real chart.

#include "chartroute/error.hpp"
#include "chartroute/geo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>

namespace chartroute {

struct ArchipelagoOptions {
    std::uint64_t seed = 0;
    int cols = 100;
    int rows = 60;
    int islands = 8;
    /// Largest island radius, in cells; radii are drawn from [r/2, r].
    double max_radius_cells = 6.0;
    double cell_size = 0.005;
    GeoPoint origin{109.35, 18.10};
};

namespace detail {

/// Uniform draw in [lo, hi) from the top 53 bits, so the sequence does not
/// depend on the standard library's distribution implementations.
inline double uniform(std::mt19937_64& rng, double lo, double hi)
{
    const double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
}

/// Rounds to 1e-7 degrees, the resolution of a 10^7 COMF.
inline double snap(double deg) { return static_cast<double>(std::llround(deg * 1e7)) / 1e7; }

} // namespace detail

inline ObstacleDocument generate_archipelago(const ArchipelagoOptions& opt)
{
    if (opt.cols < 1 || opt.rows < 1)
        throw Error(ErrorCode::InvalidArgument, "map needs at least one column and one row");
    if (!(opt.cell_size > 0.0))
        throw Error(ErrorCode::InvalidArgument, "cell size must be positive");
    if (opt.islands < 0)
        throw Error(ErrorCode::InvalidArgument, "island count cannot be negative");
    const double r_max = opt.max_radius_cells;
    if (opt.islands > 0) {
        if (!(r_max > 0.0))
            throw Error(ErrorCode::InvalidArgument, "island radius must be positive");
        if (2.0 * r_max >= std::min(opt.cols, opt.rows))
            throw Error(ErrorCode::InvalidArgument, "islands of radius " + std::to_string(r_max)
                                                        + " cells do not fit in the map");
        const double island_area = opt.islands * std::numbers::pi * r_max * r_max;
        if (island_area >= static_cast<double>(opt.cols) * opt.rows)
            throw Error(ErrorCode::InvalidArgument, "islands would cover the whole map");
    }

    ObstacleDocument doc;
    doc.extent.min = opt.origin;
    doc.extent.max = GeoPoint{detail::snap(opt.origin.lon + opt.cols * opt.cell_size),
                              detail::snap(opt.origin.lat + opt.rows * opt.cell_size)};

    std::mt19937_64 rng(opt.seed);
    for (int k = 0; k < opt.islands; ++k) {
        const double radius = detail::uniform(rng, 0.5 * r_max, r_max);
        const double cu = detail::uniform(rng, radius, opt.cols - radius);
        const double cv = detail::uniform(rng, radius, opt.rows - radius);
        const double squash = detail::uniform(rng, 0.55, 1.0);
        const double tilt = detail::uniform(rng, 0.0, std::numbers::pi);
        const int vertices = 5 + static_cast<int>(rng() % 5);
        const double phase = detail::uniform(rng, 0.0, 2.0 * std::numbers::pi);
        const double spacing = 2.0 * std::numbers::pi / vertices;

        // Points on a rotated ellipse in increasing angle form a convex ring.
        GeoPolygon poly;
        for (int v = 0; v < vertices; ++v) {
            const double a = phase + v * spacing + detail::uniform(rng, -0.3, 0.3) * spacing;
            const double ex = radius * std::cos(a);
            const double ey = radius * squash * std::sin(a);
            const double u = cu + ex * std::cos(tilt) - ey * std::sin(tilt);
            const double w = cv + ex * std::sin(tilt) + ey * std::cos(tilt);
            poly.ring.push_back(GeoPoint{detail::snap(opt.origin.lon + u * opt.cell_size),
                                         detail::snap(opt.origin.lat + w * opt.cell_size)});
        }
        doc.polygons.push_back(std::move(poly));
    }
    validate(doc);
    return doc;
}

} // namespace chartroute
