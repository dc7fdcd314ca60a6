#include "gti/life_table.hpp"

#include "gti/error.hpp"

#include <fmt/format.h>

#include <cmath>
#include <string>

namespace gti {

std::string_view to_string(Sex sex) noexcept {
    switch (sex) {
    case Sex::Female: return "female";
    case Sex::Male: return "male";
    case Sex::Total: return "total";
    }
    return "total";
}

std::optional<Sex> parse_sex(std::string_view text) noexcept {
    if (text == "female") return Sex::Female;
    if (text == "male") return Sex::Male;
    if (text == "total") return Sex::Total;
    return std::nullopt;
}

std::string_view to_string(HazardSource source) noexcept {
    return source == HazardSource::MxDirect ? "mx" : "qx";
}

namespace {

std::optional<int> line_of(int line) {
    return line > 0 ? std::optional<int>(line) : std::nullopt;
}

std::string in_year(int year) { return " (year " + std::to_string(year) + ")"; }

// Shared age-grid rules: 0, 1, 2, ... and a single open-ended last row.
template <class Row>
void check_age_grid(int year, std::span<const Row> rows) {
    if (rows.empty())
        throw Error(ErrorKind::NonContiguousAges, "no rows" + in_year(year));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Row& r = rows[i];
        if (r.age != static_cast<int>(i))
            throw Error(ErrorKind::NonContiguousAges,
                        "expected age " + std::to_string(i) + ", found " + std::to_string(r.age) +
                            in_year(year),
                        line_of(r.line));
        if (r.open_ended && i + 1 != rows.size())
            throw Error(ErrorKind::NonContiguousAges,
                        "open-ended age interval is not the last row" + in_year(year),
                        line_of(r.line));
    }
    if (!rows.back().open_ended)
        throw Error(ErrorKind::NonContiguousAges,
                    "missing open-ended final age interval" + in_year(year),
                    line_of(rows.back().line));
}

bool nonnegative(double v) { return std::isfinite(v) && v >= 0.0; }

} // namespace

LifeTable::LifeTable(int year, Sex sex, std::vector<LifeTableRow> rows)
    : year_(year), sex_(sex), rows_(std::move(rows)) {
    check_age_grid<LifeTableRow>(year_, rows_);
    for (const auto& r : rows_) {
        if (!nonnegative(r.mx) || !nonnegative(r.lx) || !nonnegative(r.qx) || r.qx > 1.0)
            throw Error(ErrorKind::MalformedRow,
                        "age " + std::to_string(r.age) + ": mx, lx must be >= 0 and qx in [0, 1]" +
                            in_year(year_),
                        line_of(r.line));
    }
    if (!(rows_.front().lx > 0.0))
        throw Error(ErrorKind::ZeroRadix, "lx at age 0 must be positive" + in_year(year_),
                    line_of(rows_.front().line));
    for (std::size_t i = 1; i < rows_.size(); ++i) {
        if (rows_[i].lx > rows_[i - 1].lx)
            throw Error(ErrorKind::NonMonotoneLx,
                        "lx increases at age " + std::to_string(rows_[i].age) + in_year(year_),
                        line_of(rows_[i].line));
    }
}

bool operator==(const MortalityRateRow& a, const MortalityRateRow& b) noexcept {
    return a.age == b.age && a.open_ended == b.open_ended && a.female == b.female &&
           a.male == b.male && a.total == b.total;
}

MortalityRateSeries::MortalityRateSeries(int year, std::vector<MortalityRateRow> rows)
    : year_(year), rows_(std::move(rows)) {
    check_age_grid<MortalityRateRow>(year_, rows_);
    for (const auto& r : rows_) {
        if (!nonnegative(r.female) || !nonnegative(r.male) || !nonnegative(r.total))
            throw Error(ErrorKind::MalformedRow,
                        "age " + std::to_string(r.age) + ": rates must be >= 0" + in_year(year_),
                        line_of(r.line));
    }
}

std::vector<double> MortalityRateSeries::rates(Sex sex) const {
    std::vector<double> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) {
        switch (sex) {
        case Sex::Female: out.push_back(r.female); break;
        case Sex::Male: out.push_back(r.male); break;
        case Sex::Total: out.push_back(r.total); break;
        }
    }
    return out;
}

HazardCurve hazard_from_life_table(const LifeTable& table, HazardSource source) {
    const int n = table.open_age();
    if (n == 0)
        throw Error(ErrorKind::InvalidCurve,
                    "life table has no closed age intervals" + in_year(table.year()));
    std::vector<double> knots(n + 1);
    std::vector<double> rates(n);
    for (int x = 0; x <= n; ++x) knots[x] = x;
    auto rows = table.rows();
    for (int x = 0; x < n; ++x) {
        const auto& r = rows[x];
        if (source == HazardSource::MxDirect) {
            rates[x] = r.mx;
        } else {
            if (r.qx == 1.0)
                throw Error(ErrorKind::UnitProbability,
                            "qx = 1 at age " + std::to_string(r.age) + in_year(table.year()),
                            line_of(r.line));
            rates[x] = -std::log1p(-r.qx);
        }
    }
    return {std::move(knots), std::move(rates)};
}

LifeTableSurvival survival_from_life_table(const LifeTable& table) {
    const double l0 = table.radix();
    if (!(l0 > 0.0)) throw Error(ErrorKind::ZeroRadix, "zero radix" + in_year(table.year()));
    std::vector<double> knots;
    std::vector<double> values;
    std::optional<int> truncated_at;
    for (const auto& r : table.rows()) {
        if (r.lx == 0.0) {
            truncated_at = r.age;
            break;
        }
        knots.push_back(r.age);
        values.push_back(r.age == 0 ? 1.0 : r.lx / l0);
    }
    return {SurvivalCurve(std::move(knots), std::move(values)), truncated_at};
}

double median_age_at_death(const LifeTable& table) {
    const double l0 = table.radix();
    auto rows = table.rows();
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double s = rows[i].lx / l0;
        if (s > 0.5) continue;
        const double prev = rows[i - 1].lx / l0;
        if (s == 0.5) return rows[i].age;
        return rows[i - 1].age + (prev - 0.5) / (prev - s);
    }
    throw Error(ErrorKind::MedianNotReached,
                "lx never falls to half the radix" + in_year(table.year()));
}

std::vector<GtiResult> gti_from_life_table(const LifeTable& table,
                                           std::span<const double> cutoffs,
                                           HazardSource source, double epsilon) {
    const auto cumulative = cumulative_hazard(hazard_from_life_table(table, source));
    std::vector<GtiResult> out;
    out.reserve(cutoffs.size());
    for (double t : cutoffs) {
        if (t > cumulative.domain_end())
            throw Error(ErrorKind::CutoffOutOfDomain,
                        "cut-off " + fmt::format("{}", t) + " is beyond the table's last closed age " +
                            std::to_string(table.open_age()) + in_year(table.year()));
        out.push_back(gini_type_index(cumulative, t, epsilon));
    }
    return out;
}

} // namespace gti
