#pragma once

// Structural reader/writer for ISO/IEC 8211 logical records, the container
// format S-57 charts are packaged in.  Only the record framing is handled
// here (leader, directory, raw field slices); subfield semantics live in
// s57.hpp.

#include "chartroute/error.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace chartroute::iso8211 {

inline constexpr std::uint8_t field_terminator = 0x1E;
inline constexpr std::uint8_t unit_terminator = 0x1F;
inline constexpr std::size_t leader_size = 24;

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

/// Widths of the directory entry parts, leader positions 20..23.
struct EntryMap {
    int size_of_length = 3;
    int size_of_position = 4;
    int reserved = 0;
    int size_of_tag = 4;

    int entry_width() const noexcept { return size_of_length + size_of_position + size_of_tag; }
    friend bool operator==(const EntryMap&, const EntryMap&) = default;
};

struct RecordLeader {
    std::size_t record_length = 0;
    char interchange_level = ' ';
    char leader_identifier = ' ';
    int field_control_length = 0;
    std::size_t base_address = 0;
    EntryMap entry_map;
    /// Verbatim leader bytes; serialization writes these back unchanged.
    std::array<std::uint8_t, leader_size> raw{};
};

struct DirectoryEntry {
    std::string tag;
    std::size_t field_length = 0;
    /// Relative to the record's base address.
    std::size_t field_position = 0;

    friend bool operator==(const DirectoryEntry&, const DirectoryEntry&) = default;
};

struct Field {
    std::string tag;
    Bytes bytes;

    friend bool operator==(const Field&, const Field&) = default;
};

struct LogicalRecord {
    RecordLeader leader;
    std::vector<DirectoryEntry> directory;
    std::vector<Field> fields;
};

namespace detail {

inline std::size_t parse_digits(ByteView bytes, std::size_t pos, std::size_t len)
{
    std::size_t value = 0;
    for (std::size_t i = pos; i < pos + len; ++i) {
        const auto c = bytes[i];
        if (c < '0' || c > '9')
            throw Error(ErrorCode::NonDigit, "expected ASCII digit, found byte " + std::to_string(c), i);
        value = value * 10 + static_cast<std::size_t>(c - '0');
    }
    return value;
}

inline void write_digits(Bytes& out, std::size_t value, int width)
{
    std::string s = std::to_string(value);
    if (static_cast<int>(s.size()) > width)
        throw Error(ErrorCode::InvalidArgument,
                    "value " + s + " does not fit in " + std::to_string(width) + " digits");
    out.insert(out.end(), static_cast<std::size_t>(width) - s.size(), '0');
    out.insert(out.end(), s.begin(), s.end());
}

} // namespace detail

/// Decodes the 24-byte leader at the front of `bytes`.  Offsets in thrown
/// errors are relative to the start of `bytes`.
inline RecordLeader parse_leader(ByteView bytes)
{
    if (bytes.size() < leader_size)
        throw Error(ErrorCode::TruncatedLeader,
                    "leader needs 24 bytes, " + std::to_string(bytes.size()) + " available", 0);

    RecordLeader leader;
    std::copy_n(bytes.begin(), leader_size, leader.raw.begin());
    leader.record_length = detail::parse_digits(bytes, 0, 5);
    leader.interchange_level = static_cast<char>(bytes[5]);
    leader.leader_identifier = static_cast<char>(bytes[6]);
    // Data records usually leave the field control length blank.
    if (bytes[10] == ' ' && bytes[11] == ' ')
        leader.field_control_length = 0;
    else
        leader.field_control_length = static_cast<int>(detail::parse_digits(bytes, 10, 2));
    leader.base_address = detail::parse_digits(bytes, 12, 5);
    leader.entry_map.size_of_length = static_cast<int>(detail::parse_digits(bytes, 20, 1));
    leader.entry_map.size_of_position = static_cast<int>(detail::parse_digits(bytes, 21, 1));
    leader.entry_map.reserved = static_cast<int>(detail::parse_digits(bytes, 22, 1));
    leader.entry_map.size_of_tag = static_cast<int>(detail::parse_digits(bytes, 23, 1));

    if (leader.record_length < leader_size)
        throw Error(ErrorCode::InvalidLeader,
                    "record length " + std::to_string(leader.record_length) + " is below 24", 0);
    if (leader.base_address < leader_size || leader.base_address > leader.record_length)
        throw Error(ErrorCode::InvalidLeader,
                    "base address " + std::to_string(leader.base_address) + " outside [24, record length]", 12);
    if (leader.entry_map.size_of_length == 0)
        throw Error(ErrorCode::InvalidLeader, "size of field length is 0", 20);
    if (leader.entry_map.size_of_position == 0)
        throw Error(ErrorCode::InvalidLeader, "size of field position is 0", 21);
    if (leader.entry_map.size_of_tag == 0)
        throw Error(ErrorCode::InvalidLeader, "size of field tag is 0", 23);
    return leader;
}

/// Decodes a directory block, including its trailing field terminator.
/// Offsets in thrown errors are relative to the start of `bytes`.
inline std::vector<DirectoryEntry> parse_directory(ByteView bytes, const EntryMap& map)
{
    const auto width = static_cast<std::size_t>(map.entry_width());
    const bool terminated = !bytes.empty() && bytes.back() == field_terminator;
    const std::size_t payload = bytes.size() - (terminated ? 1 : 0);
    if (payload % width != 0)
        throw Error(ErrorCode::MisalignedDirectory,
                    std::to_string(payload) + " directory bytes are not a multiple of entry width "
                        + std::to_string(width),
                    payload - payload % width);
    if (!terminated)
        throw Error(ErrorCode::MissingTerminator, "directory does not end with a field terminator",
                    bytes.size());

    const auto tag_w = static_cast<std::size_t>(map.size_of_tag);
    const auto len_w = static_cast<std::size_t>(map.size_of_length);
    const auto pos_w = static_cast<std::size_t>(map.size_of_position);

    std::vector<DirectoryEntry> entries;
    entries.reserve(payload / width);
    for (std::size_t at = 0; at < payload; at += width) {
        DirectoryEntry e;
        e.tag.assign(reinterpret_cast<const char*>(bytes.data() + at), tag_w);
        e.field_length = detail::parse_digits(bytes, at + tag_w, len_w);
        e.field_position = detail::parse_digits(bytes, at + tag_w + len_w, pos_w);
        entries.push_back(std::move(e));
    }
    return entries;
}

/// Parses one record from the front of `bytes`; consumes exactly
/// leader.record_length bytes.  Offsets are relative to the record start.
inline LogicalRecord parse_record(ByteView bytes)
{
    LogicalRecord rec;
    rec.leader = parse_leader(bytes);
    const auto& leader = rec.leader;
    if (bytes.size() < leader.record_length)
        throw Error(ErrorCode::TruncatedRecord,
                    "record declares " + std::to_string(leader.record_length) + " bytes, "
                        + std::to_string(bytes.size()) + " available",
                    0);

    if (leader.base_address > leader_size) {
        try {
            rec.directory = parse_directory(bytes.subspan(leader_size, leader.base_address - leader_size),
                                            leader.entry_map);
        } catch (const Error& e) {
            throw e.rebased(leader_size);
        }
    }

    const std::size_t area = leader.record_length - leader.base_address;
    const auto width = static_cast<std::size_t>(leader.entry_map.entry_width());
    rec.fields.reserve(rec.directory.size());
    for (std::size_t k = 0; k < rec.directory.size(); ++k) {
        const auto& e = rec.directory[k];
        if (e.field_position > area || e.field_length > area - e.field_position)
            throw Error(ErrorCode::FieldOutOfBounds,
                        "field " + e.tag + " spans [" + std::to_string(e.field_position) + ", "
                            + std::to_string(e.field_position + e.field_length) + ") of a "
                            + std::to_string(area) + "-byte field area",
                        leader_size + k * width);
        const auto slice = bytes.subspan(leader.base_address + e.field_position, e.field_length);
        rec.fields.push_back(Field{e.tag, Bytes(slice.begin(), slice.end())});
    }
    return rec;
}

/// Parses back-to-back records until the input is exhausted.  Errors carry
/// absolute file offsets.
inline std::vector<LogicalRecord> parse_file(ByteView bytes)
{
    std::vector<LogicalRecord> records;
    std::size_t offset = 0;
    while (offset < bytes.size()) {
        try {
            records.push_back(parse_record(bytes.subspan(offset)));
        } catch (const Error& e) {
            throw e.rebased(offset);
        }
        offset += records.back().leader.record_length;
    }
    return records;
}

/// Writes a record back out: the verbatim leader, a re-encoded directory and
/// every field slice at its directory offset.  Bytes of the field area not
/// covered by any field are written as 0x00.
inline Bytes serialize_record(const LogicalRecord& rec)
{
    const auto& leader = rec.leader;
    const auto& map = leader.entry_map;
    Bytes out(leader.raw.begin(), leader.raw.end());
    for (const auto& e : rec.directory) {
        std::string tag = e.tag;
        tag.resize(static_cast<std::size_t>(map.size_of_tag), ' ');
        out.insert(out.end(), tag.begin(), tag.end());
        detail::write_digits(out, e.field_length, map.size_of_length);
        detail::write_digits(out, e.field_position, map.size_of_position);
    }
    if (!rec.directory.empty() || leader.base_address > leader_size)
        out.push_back(field_terminator);
    if (out.size() != leader.base_address)
        throw Error(ErrorCode::InvariantViolation,
                    "directory re-encodes to " + std::to_string(out.size()) + " bytes, base address is "
                        + std::to_string(leader.base_address));
    out.resize(leader.record_length, 0);
    for (std::size_t k = 0; k < rec.fields.size() && k < rec.directory.size(); ++k) {
        const auto& bytes = rec.fields[k].bytes;
        std::copy(bytes.begin(), bytes.end(),
                  out.begin() + static_cast<std::ptrdiff_t>(leader.base_address + rec.directory[k].field_position));
    }
    return out;
}

/// Assembles a data record with contiguous fields.  Field payloads are
/// stored as given, so callers append the 0x1E terminator themselves.
inline Bytes build_record(std::span<const Field> fields, char leader_identifier = 'D',
                          EntryMap map = EntryMap{})
{
    Bytes directory;
    std::size_t position = 0;
    for (const auto& f : fields) {
        std::string tag = f.tag;
        tag.resize(static_cast<std::size_t>(map.size_of_tag), ' ');
        directory.insert(directory.end(), tag.begin(), tag.end());
        detail::write_digits(directory, f.bytes.size(), map.size_of_length);
        detail::write_digits(directory, position, map.size_of_position);
        position += f.bytes.size();
    }
    if (!fields.empty())
        directory.push_back(field_terminator);

    const std::size_t base = leader_size + directory.size();
    const std::size_t total = base + position;

    Bytes out;
    out.reserve(total);
    detail::write_digits(out, total, 5);
    out.push_back(' ');
    out.push_back(static_cast<std::uint8_t>(leader_identifier));
    for (char c : std::string_view("     ")) // positions 7..11
        out.push_back(static_cast<std::uint8_t>(c));
    detail::write_digits(out, base, 5);
    for (char c : std::string_view("   ")) // 17..19
        out.push_back(static_cast<std::uint8_t>(c));
    detail::write_digits(out, static_cast<std::size_t>(map.size_of_length), 1);
    detail::write_digits(out, static_cast<std::size_t>(map.size_of_position), 1);
    detail::write_digits(out, static_cast<std::size_t>(map.reserved), 1);
    detail::write_digits(out, static_cast<std::size_t>(map.size_of_tag), 1);
    out.insert(out.end(), directory.begin(), directory.end());
    for (const auto& f : fields)
        out.insert(out.end(), f.bytes.begin(), f.bytes.end());
    return out;
}

} // namespace chartroute::iso8211
