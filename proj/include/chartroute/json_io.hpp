#pragma once

// JSON plumbing shared by the document, grid cache and route writers.

#include "chartroute/error.hpp"
#include "chartroute/geo.hpp"

#include "json.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>
#include <string_view>

namespace chartroute {

using Json = nlohmann::ordered_json;

/// Rounds to 9 significant digits so reported values print identically
/// everywhere.  Geometry that must round-trip exactly is written unrounded.
inline double round9(double v)
{
    if (!std::isfinite(v) || v == 0.0)
        return v;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return std::stod(buf);
}

inline Json point_json(const GeoPoint& p) { return Json::array({p.lon, p.lat}); }

inline Json point_json9(const GeoPoint& p) { return Json::array({round9(p.lon), round9(p.lat)}); }

namespace detail {

inline const Json& require(const Json& obj, const char* key, const char* where)
{
    if (!obj.is_object() || !obj.contains(key))
        throw Error(ErrorCode::SchemaError, std::string(where) + ": missing key \"" + key + "\"");
    return obj.at(key);
}

inline double require_number(const Json& v, const std::string& where)
{
    if (!v.is_number())
        throw Error(ErrorCode::SchemaError, where + ": expected a number");
    return v.get<double>();
}

inline GeoPoint parse_point(const Json& v, const std::string& where)
{
    if (!v.is_array() || v.size() != 2)
        throw Error(ErrorCode::SchemaError, where + ": expected [lon, lat]");
    return GeoPoint{require_number(v[0], where), require_number(v[1], where)};
}

} // namespace detail

inline Json parse_json_text(std::string_view text)
{
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::SchemaError, std::string("malformed JSON: ") + e.what());
    }
}

inline Json obstacle_document_json(const ObstacleDocument& doc)
{
    Json polygons = Json::array();
    for (const auto& poly : doc.polygons) {
        Json ring = Json::array();
        for (const auto& p : poly.ring)
            ring.push_back(point_json(p));
        polygons.push_back(std::move(ring));
    }
    Json out;
    out["extent"] = Json{{"min", point_json(doc.extent.min)}, {"max", point_json(doc.extent.max)}};
    out["polygons"] = std::move(polygons);
    return out;
}

/// Serialized obstacle document: compact JSON, stable key order, shortest
/// round-trip number formatting, trailing newline.
inline std::string emit_obstacle_document(const ObstacleDocument& doc)
{
    return obstacle_document_json(doc).dump() + "\n";
}

inline ObstacleDocument obstacle_document_from_json(const Json& j)
{
    ObstacleDocument doc;
    const Json& extent = detail::require(j, "extent", "document");
    doc.extent.min = detail::parse_point(detail::require(extent, "min", "extent"), "extent.min");
    doc.extent.max = detail::parse_point(detail::require(extent, "max", "extent"), "extent.max");
    const Json& polygons = detail::require(j, "polygons", "document");
    if (!polygons.is_array())
        throw Error(ErrorCode::SchemaError, "polygons: expected an array");
    for (std::size_t k = 0; k < polygons.size(); ++k) {
        const std::string where = "polygons[" + std::to_string(k) + "]";
        if (!polygons[k].is_array())
            throw Error(ErrorCode::SchemaError, where + ": expected an array of points");
        GeoPolygon poly;
        for (const auto& v : polygons[k])
            poly.ring.push_back(detail::parse_point(v, where));
        doc.polygons.push_back(std::move(poly));
    }
    validate(doc);
    return doc;
}

inline ObstacleDocument load_obstacle_document(std::string_view text)
{
    return obstacle_document_from_json(parse_json_text(text));
}

inline std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::InvalidArgument, "cannot open " + path.string());
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

/// Writes to a sibling temporary file, then renames it over `path`.
inline void write_file_atomic(const std::filesystem::path& path, std::string_view contents)
{
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw Error(ErrorCode::InvalidArgument, "cannot write " + tmp.string());
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        if (!out)
            throw Error(ErrorCode::InvalidArgument, "write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

} // namespace chartroute
