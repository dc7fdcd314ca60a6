#include "gti/error.hpp"

namespace gti {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::InvalidCurve: return "InvalidCurve";
    case ErrorKind::ZeroSurvival: return "ZeroSurvival";
    case ErrorKind::NonpositiveCutoff: return "NonpositiveCutoff";
    case ErrorKind::DegenerateInterval: return "DegenerateInterval";
    case ErrorKind::CutoffOutOfDomain: return "CutoffOutOfDomain";
    case ErrorKind::SingularOrigin: return "SingularOrigin";
    case ErrorKind::NonpositiveShape: return "NonpositiveShape";
    case ErrorKind::ShapeOutOfRange: return "ShapeOutOfRange";
    case ErrorKind::InvalidScale: return "InvalidScale";
    case ErrorKind::MalformedHeader: return "MalformedHeader";
    case ErrorKind::MalformedRow: return "MalformedRow";
    case ErrorKind::MissingDatum: return "MissingDatum";
    case ErrorKind::NonContiguousAges: return "NonContiguousAges";
    case ErrorKind::NonMonotoneLx: return "NonMonotoneLx";
    case ErrorKind::UnitProbability: return "UnitProbability";
    case ErrorKind::ZeroRadix: return "ZeroRadix";
    case ErrorKind::MedianNotReached: return "MedianNotReached";
    case ErrorKind::YearNotFound: return "YearNotFound";
    }
    return "Unknown";
}

bool is_parse_error(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::MalformedHeader:
    case ErrorKind::MalformedRow:
    case ErrorKind::MissingDatum:
    case ErrorKind::NonContiguousAges:
    case ErrorKind::NonMonotoneLx:
    case ErrorKind::ZeroRadix:
    case ErrorKind::YearNotFound:
        return true;
    default:
        return false;
    }
}

namespace {

std::string with_line(const std::string& message, std::optional<int> line) {
    if (!line) return message;
    return "line " + std::to_string(*line) + ": " + message;
}

} // namespace

Error::Error(ErrorKind kind, const std::string& message, std::optional<int> line)
    : std::runtime_error(with_line(message, line)), kind_(kind), line_(line) {}

} // namespace gti
