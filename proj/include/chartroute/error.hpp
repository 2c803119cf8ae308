#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace chartroute {

/// Failure categories shared by every module.  The CLI maps them onto exit
/// codes (see exit_code_for).
enum class ErrorCode {
    // ISO 8211 container
    TruncatedLeader,
    NonDigit,
    InvalidLeader,
    MisalignedDirectory,
    MissingTerminator,
    FieldOutOfBounds,
    TruncatedRecord,
    // S-57 payloads
    OddByteCount,
    NoGeometry,
    // documents
    SchemaError,
    InvariantViolation,
    // grid
    GridTooLarge,
    OutOfBounds,
    // search / smoothing / metrics
    NotAdjacent,
    DegenerateBaseline,
    InvalidEndpoint,
    NoPath,
    EmptyPath,
    MixedGrids,
    // generic input validation (CLI arguments, generator parameters)
    InvalidArgument,
};

inline constexpr std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::TruncatedLeader: return "TruncatedLeader";
    case ErrorCode::NonDigit: return "NonDigit";
    case ErrorCode::InvalidLeader: return "InvalidLeader";
    case ErrorCode::MisalignedDirectory: return "MisalignedDirectory";
    case ErrorCode::MissingTerminator: return "MissingTerminator";
    case ErrorCode::FieldOutOfBounds: return "FieldOutOfBounds";
    case ErrorCode::TruncatedRecord: return "TruncatedRecord";
    case ErrorCode::OddByteCount: return "OddByteCount";
    case ErrorCode::NoGeometry: return "NoGeometry";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::GridTooLarge: return "GridTooLarge";
    case ErrorCode::OutOfBounds: return "OutOfBounds";
    case ErrorCode::NotAdjacent: return "NotAdjacent";
    case ErrorCode::DegenerateBaseline: return "DegenerateBaseline";
    case ErrorCode::InvalidEndpoint: return "InvalidEndpoint";
    case ErrorCode::NoPath: return "NoPath";
    case ErrorCode::EmptyPath: return "EmptyPath";
    case ErrorCode::MixedGrids: return "MixedGrids";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

/// Exception carrying an ErrorCode and, for binary parsing failures, the
/// absolute byte offset at which the defect was detected.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what, std::optional<std::size_t> offset = std::nullopt)
        : std::runtime_error(compose(code, what, offset))
        , code_(code)
        , offset_(offset)
        , detail_(what)
    {
    }

    ErrorCode code() const noexcept { return code_; }
    std::optional<std::size_t> offset() const noexcept { return offset_; }
    const std::string& detail() const noexcept { return detail_; }

    /// Same error, offset shifted by `base` (used when a record parser's
    /// relative offsets are lifted into file coordinates).
    Error rebased(std::size_t base) const
    {
        return Error(code_, detail_, base + offset_.value_or(0));
    }

private:
    static std::string compose(ErrorCode code, const std::string& what, std::optional<std::size_t> offset)
    {
        std::string s(to_string(code));
        if (offset)
            s += " at byte " + std::to_string(*offset);
        s += ": ";
        s += what;
        return s;
    }

    ErrorCode code_;
    std::optional<std::size_t> offset_;
    std::string detail_;
};

} // namespace chartroute
