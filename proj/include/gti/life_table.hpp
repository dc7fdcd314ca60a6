#pragma once

#include "gti/curves.hpp"
#include "gti/index.hpp"

#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace gti {

enum class Sex { Female, Male, Total };

std::string_view to_string(Sex sex) noexcept;
std::optional<Sex> parse_sex(std::string_view text) noexcept;

struct LifeTableRow {
    int age = 0;             // start of the age interval
    bool open_ended = false; // the terminal "110+" interval
    double mx = 0.0;
    double qx = 0.0;
    double ax = 0.0;
    double lx = 0.0;
    double dx = 0.0;
    double Lx = 0.0;
    double Tx = 0.0;
    double ex = 0.0;
    int line = 0; // source line, 0 when not read from a file
};

/// One calendar year of a period life table for one sex.
///
/// Invariants, checked on construction: ages run 0, 1, 2, ... with exactly
/// one open-ended final row; mx, lx >= 0; qx in [0, 1]; lx nonincreasing
/// with lx[0] > 0.
class LifeTable {
public:
    LifeTable(int year, Sex sex, std::vector<LifeTableRow> rows);

    int year() const noexcept { return year_; }
    Sex sex() const noexcept { return sex_; }
    std::span<const LifeTableRow> rows() const noexcept { return rows_; }
    double radix() const noexcept { return rows_.front().lx; }
    /// Start age of the open-ended interval; the closed ages are [0, open_age()).
    int open_age() const noexcept { return rows_.back().age; }

private:
    int year_;
    Sex sex_;
    std::vector<LifeTableRow> rows_;
};

struct MortalityRateRow {
    int age = 0;
    bool open_ended = false;
    double female = 0.0;
    double male = 0.0;
    double total = 0.0;
    int line = 0;
};

/// Compares values only; the source line is ignored.
bool operator==(const MortalityRateRow& a, const MortalityRateRow& b) noexcept;

/// Death rates by single year of age for one calendar year, all three series.
class MortalityRateSeries {
public:
    MortalityRateSeries(int year, std::vector<MortalityRateRow> rows);

    int year() const noexcept { return year_; }
    std::span<const MortalityRateRow> rows() const noexcept { return rows_; }
    std::vector<double> rates(Sex sex) const;

    friend bool operator==(const MortalityRateSeries&, const MortalityRateSeries&) = default;

private:
    int year_;
    std::vector<MortalityRateRow> rows_;
};

enum class HazardSource { MxDirect, QxImplied };

std::string_view to_string(HazardSource source) noexcept;

/// Piecewise-constant hazard on [0, open_age()). MxDirect uses the central
/// death rate as the within-year hazard; QxImplied uses -ln(1 - qx), the
/// constant hazard that yields qx over one year. The open-ended row is not
/// part of the curve. QxImplied throws UnitProbability on qx = 1.
HazardCurve hazard_from_life_table(const LifeTable& table,
                                   HazardSource source = HazardSource::MxDirect);

struct LifeTableSurvival {
    SurvivalCurve curve;
    /// First age with lx = 0, when the table's tail was dropped.
    std::optional<int> truncated_at;
};

/// S(x) = lx / l0 for x = 0 .. open_age(), minus any trailing lx = 0 ages.
LifeTableSurvival survival_from_life_table(const LifeTable& table);

/// Age where lx falls to half the radix, linear in lx between whole ages.
/// Throws MedianNotReached if lx stays above l0 / 2 through open_age().
double median_age_at_death(const LifeTable& table);

std::vector<GtiResult> gti_from_life_table(const LifeTable& table,
                                           std::span<const double> cutoffs,
                                           HazardSource source = HazardSource::MxDirect,
                                           double epsilon = kDefaultClassifyEpsilon);

} // namespace gti
