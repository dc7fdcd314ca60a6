#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gti {

enum class ErrorKind {
    InvalidCurve,
    ZeroSurvival,
    NonpositiveCutoff,
    DegenerateInterval,
    CutoffOutOfDomain,
    SingularOrigin,
    NonpositiveShape,
    ShapeOutOfRange,
    InvalidScale,
    MalformedHeader,
    MalformedRow,
    MissingDatum,
    NonContiguousAges,
    NonMonotoneLx,
    UnitProbability,
    ZeroRadix,
    MedianNotReached,
    YearNotFound,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// True for errors raised while reading an input file (as opposed to
/// errors in the numerical domain of an otherwise valid input).
bool is_parse_error(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message, std::optional<int> line = std::nullopt);

    ErrorKind kind() const noexcept { return kind_; }
    /// 1-based input line the error refers to, when there is one.
    std::optional<int> line() const noexcept { return line_; }

private:
    ErrorKind kind_;
    std::optional<int> line_;
};

} // namespace gti
