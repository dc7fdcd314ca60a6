#pragma once

#include "gti/index.hpp"
#include "gti/life_table.hpp"

#include <json.hpp>

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gti {

struct ComputeReport {
    std::string source_file;
    int year = 0;
    Sex sex = Sex::Total;
    HazardSource hazard_source = HazardSource::MxDirect;
    std::vector<GtiResult> rows; // ascending cutoff
    /// Empty when lx never falls to half the radix.
    std::optional<double> median_age_at_death;
};

inline constexpr double kDefaultCutoffs[] = {25.0, 65.0, 105.0};

ComputeReport make_report(std::string source_file, const LifeTable& table,
                          std::span<const double> cutoffs, HazardSource source,
                          double epsilon = kDefaultClassifyEpsilon);

/// {"file", "year", "sex", "hazard_source", "rows": [{"T", "gti", "survival",
/// "h_eff", "class"}], "median_age_at_death"}
nlohmann::json to_json(const ComputeReport& report);

/// One line per cutoff with every report field; header first.
std::string to_csv(const ComputeReport& report);

/// Shortest decimal that reads back to the same double.
std::string format_exact(double value);

/// Table cells: six significant digits.
std::string format_table(double value);

/// Figure-1 style data: t, H(t) and the chord h_eff * t at every knot up to
/// the cutoff (plus the cutoff itself).
std::string chord_csv(const CumulativeHazardCurve& cumulative, double cutoff);

struct RateColumn {
    std::string name;
    std::vector<int> ages;
    std::vector<double> rates;
};

/// Figure-2 style data: age followed by one rate column per input. All inputs
/// must share the same age grid.
std::string rates_csv(std::span<const RateColumn> columns);

} // namespace gti
