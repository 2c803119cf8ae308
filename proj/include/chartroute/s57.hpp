#pragma once

// S-57 geometry extraction on top of the ISO 8211 record reader.
//
// Feature/spatial pointer chains are not followed: every data record that
// carries at least three SG2D coordinates is read as one closed obstacle
// ring.

#include "chartroute/error.hpp"
#include "chartroute/geo.hpp"
#include "chartroute/iso8211.hpp"

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace chartroute::s57 {

/// Coordinate multiplication factor used when the dataset carries no DSPM.
inline constexpr double default_comf = 10'000'000.0;

namespace detail {

inline std::int32_t read_i32_le(const std::uint8_t* p) noexcept
{
    const std::uint32_t u = static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8)
        | (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
    return static_cast<std::int32_t>(u);
}

inline std::uint32_t read_u32_le(const std::uint8_t* p) noexcept
{
    return static_cast<std::uint32_t>(read_i32_le(p));
}

} // namespace detail

/// Decodes every SG2D field of `record` as (Y, X) pairs of little-endian
/// int32 scaled by `comf`.  A trailing field terminator is dropped when the
/// payload is one byte past a whole number of pairs.
inline std::vector<GeoPoint> extract_coordinates(const iso8211::LogicalRecord& record, double comf)
{
    if (!(comf > 0.0))
        throw Error(ErrorCode::InvalidArgument, "coordinate multiplication factor must be positive");

    std::vector<GeoPoint> points;
    for (const auto& field : record.fields) {
        if (field.tag != "SG2D")
            continue;
        std::span<const std::uint8_t> payload(field.bytes);
        if (payload.size() % 8 == 1 && payload.back() == iso8211::field_terminator)
            payload = payload.first(payload.size() - 1);
        if (payload.size() % 8 != 0)
            throw Error(ErrorCode::OddByteCount,
                        "SG2D payload of " + std::to_string(payload.size()) + " bytes is not a multiple of 8");
        for (std::size_t at = 0; at < payload.size(); at += 8) {
            const auto y = detail::read_i32_le(payload.data() + at);
            const auto x = detail::read_i32_le(payload.data() + at + 4);
            points.push_back(GeoPoint{static_cast<double>(x) / comf, static_cast<double>(y) / comf});
        }
    }
    return points;
}

/// COMF from the first DSPM field found, if any.  DSPM binary layout: RCNM
/// b11, RCID b14, HDAT/VDAT/SDAT b11, CSCL b14, DUNI/HUNI/PUNI/COUN b11,
/// COMF b14, so COMF sits at byte 16.
inline std::optional<double> dataset_comf(std::span<const iso8211::LogicalRecord> records)
{
    for (const auto& rec : records) {
        if (rec.leader.leader_identifier == 'L')
            continue;
        for (const auto& field : rec.fields) {
            if (field.tag != "DSPM" || field.bytes.size() < 20)
                continue;
            const auto comf = detail::read_u32_le(field.bytes.data() + 16);
            if (comf > 0)
                return static_cast<double>(comf);
        }
    }
    return std::nullopt;
}

/// One obstacle ring per data record with at least three coordinates.
/// Descriptive records (leader id 'L') are skipped: their SG2D entries are
/// format controls, not coordinates.
inline ObstacleDocument s57_to_obstacles(std::span<const iso8211::LogicalRecord> records, double comf)
{
    ObstacleDocument doc;
    std::vector<GeoPoint> all;
    for (const auto& rec : records) {
        if (rec.leader.leader_identifier == 'L')
            continue;
        auto points = extract_coordinates(rec, comf);
        if (points.size() < 3)
            continue;
        all.insert(all.end(), points.begin(), points.end());
        doc.polygons.push_back(GeoPolygon{std::move(points)});
    }
    if (doc.polygons.empty())
        throw Error(ErrorCode::NoGeometry, "no record carries three or more SG2D coordinates");
    doc.extent = bounding_box(all);
    validate(doc);
    return doc;
}

/// Encodes points as an SG2D payload (with terminator); the inverse of
/// extract_coordinates for points representable at `comf`.
inline iso8211::Bytes encode_sg2d(std::span<const GeoPoint> points, double comf)
{
    iso8211::Bytes out;
    auto put = [&out](std::int32_t v) {
        const auto u = static_cast<std::uint32_t>(v);
        for (int s = 0; s < 32; s += 8)
            out.push_back(static_cast<std::uint8_t>((u >> s) & 0xFF));
    };
    for (const auto& p : points) {
        put(static_cast<std::int32_t>(std::llround(p.lat * comf)));
        put(static_cast<std::int32_t>(std::llround(p.lon * comf)));
    }
    out.push_back(iso8211::field_terminator);
    return out;
}

} // namespace chartroute::s57
