#pragma once

#include "chartroute/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

namespace chartroute {

/// Geographic position in decimal degrees.
struct GeoPoint {
    double lon = 0.0;
    double lat = 0.0;

    friend bool operator==(const GeoPoint&, const GeoPoint&) = default;
};

/// Closed ring; the last vertex connects back to the first.
struct GeoPolygon {
    std::vector<GeoPoint> ring;

    friend bool operator==(const GeoPolygon&, const GeoPolygon&) = default;
};

struct Extent {
    GeoPoint min;
    GeoPoint max;

    double width() const noexcept { return max.lon - min.lon; }
    double height() const noexcept { return max.lat - min.lat; }
    bool contains(const GeoPoint& p) const noexcept
    {
        return p.lon >= min.lon && p.lon <= max.lon && p.lat >= min.lat && p.lat <= max.lat;
    }

    friend bool operator==(const Extent&, const Extent&) = default;
};

/// Non-navigable areas of a region, the canonical planner input.
struct ObstacleDocument {
    Extent extent;
    std::vector<GeoPolygon> polygons;

    friend bool operator==(const ObstacleDocument&, const ObstacleDocument&) = default;
};

inline bool is_valid_position(const GeoPoint& p) noexcept
{
    return std::isfinite(p.lon) && std::isfinite(p.lat) && p.lon >= -180.0 && p.lon <= 180.0
        && p.lat >= -90.0 && p.lat <= 90.0;
}

/// Smallest extent holding every point; undefined for an empty range.
template <typename Points>
Extent bounding_box(const Points& points)
{
    Extent e{points.front(), points.front()};
    for (const GeoPoint& p : points) {
        e.min.lon = std::min(e.min.lon, p.lon);
        e.min.lat = std::min(e.min.lat, p.lat);
        e.max.lon = std::max(e.max.lon, p.lon);
        e.max.lat = std::max(e.max.lat, p.lat);
    }
    return e;
}

/// Throws InvariantViolation unless the document satisfies every structural
/// invariant: a positive-area extent on the globe, rings of at least three
/// vertices, all vertices inside the extent.
inline void validate(const ObstacleDocument& doc)
{
    const auto& e = doc.extent;
    if (!is_valid_position(e.min) || !is_valid_position(e.max))
        throw Error(ErrorCode::InvariantViolation, "extent corner outside lon [-180,180] / lat [-90,90]");
    if (!(e.min.lon < e.max.lon) || !(e.min.lat < e.max.lat))
        throw Error(ErrorCode::InvariantViolation, "extent min must be below max in both coordinates");
    for (std::size_t k = 0; k < doc.polygons.size(); ++k) {
        const auto& ring = doc.polygons[k].ring;
        if (ring.size() < 3)
            throw Error(ErrorCode::InvariantViolation,
                        "polygon " + std::to_string(k) + " has " + std::to_string(ring.size())
                            + " vertices, at least 3 required");
        for (std::size_t v = 0; v < ring.size(); ++v) {
            if (!is_valid_position(ring[v]) || !e.contains(ring[v]))
                throw Error(ErrorCode::InvariantViolation,
                            "polygon " + std::to_string(k) + " vertex " + std::to_string(v)
                                + " lies outside the extent");
        }
    }
}

} // namespace chartroute
