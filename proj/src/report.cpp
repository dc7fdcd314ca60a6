#include "gti/report.hpp"

#include "gti/error.hpp"

#include <fmt/format.h>

#include <algorithm>

namespace gti {

ComputeReport make_report(std::string source_file, const LifeTable& table,
                          std::span<const double> cutoffs, HazardSource source,
                          double epsilon) {
    std::vector<double> sorted(cutoffs.begin(), cutoffs.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    ComputeReport report;
    report.source_file = std::move(source_file);
    report.year = table.year();
    report.sex = table.sex();
    report.hazard_source = source;
    report.rows = gti_from_life_table(table, sorted, source, epsilon);
    try {
        report.median_age_at_death = median_age_at_death(table);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::MedianNotReached) throw;
    }
    return report;
}

nlohmann::json to_json(const ComputeReport& report) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : report.rows) {
        rows.push_back({{"T", r.cutoff},
                        {"gti", r.gti},
                        {"survival", r.survival_at_cutoff},
                        {"h_eff", r.h_eff},
                        {"class", std::string(to_string(r.classification))}});
    }
    nlohmann::json j;
    j["file"] = report.source_file;
    j["year"] = report.year;
    j["sex"] = std::string(to_string(report.sex));
    j["hazard_source"] = std::string(to_string(report.hazard_source));
    j["rows"] = std::move(rows);
    j["median_age_at_death"] = report.median_age_at_death
                                   ? nlohmann::json(*report.median_age_at_death)
                                   : nlohmann::json(nullptr);
    return j;
}

namespace {

std::string csv_field(std::string_view text) {
    if (text.find_first_of(",\"\n") == std::string_view::npos) return std::string(text);
    std::string quoted = "\"";
    for (char c : text) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + '"';
}

} // namespace

std::string to_csv(const ComputeReport& report) {
    std::string out = "file,year,sex,hazard_source,T,gti,survival,h_eff,class,median_age_at_death\n";
    const std::string median =
        report.median_age_at_death ? format_exact(*report.median_age_at_death) : "";
    for (const auto& r : report.rows) {
        out += fmt::format("{},{},{},{},{},{},{},{},{},{}\n", csv_field(report.source_file),
                           report.year, to_string(report.sex), to_string(report.hazard_source),
                           format_exact(r.cutoff), format_exact(r.gti),
                           format_exact(r.survival_at_cutoff), format_exact(r.h_eff),
                           to_string(r.classification), median);
    }
    return out;
}

std::string format_exact(double value) { return fmt::format("{}", value); }

std::string format_table(double value) { return fmt::format("{:.6g}", value); }

std::string chord_csv(const CumulativeHazardCurve& cumulative, double cutoff) {
    chord_areas(cumulative, cutoff); // validates the window
    const double h_eff = cumulative.value_at(cutoff) / cutoff;
    std::string out = "t,H,h_eff_t\n";
    auto knots = cumulative.knots();
    auto values = cumulative.values();
    for (std::size_t i = 0; i < knots.size() && knots[i] < cutoff; ++i)
        out += fmt::format("{},{},{}\n", knots[i], values[i], h_eff * knots[i]);
    out += fmt::format("{},{},{}\n", cutoff, cumulative.value_at(cutoff), h_eff * cutoff);
    return out;
}

std::string rates_csv(std::span<const RateColumn> columns) {
    if (columns.empty()) throw Error(ErrorKind::InvalidCurve, "no rate series to plot");
    for (const auto& c : columns) {
        if (c.ages != columns.front().ages || c.rates.size() != c.ages.size())
            throw Error(ErrorKind::InvalidCurve,
                        "rate series " + c.name + " does not share the age grid of " +
                            columns.front().name);
    }
    std::string out = "age";
    for (const auto& c : columns) out += "," + csv_field(c.name);
    out += '\n';
    const auto& ages = columns.front().ages;
    for (std::size_t i = 0; i < ages.size(); ++i) {
        out += std::to_string(ages[i]);
        for (const auto& c : columns) out += "," + format_exact(c.rates[i]);
        out += '\n';
    }
    return out;
}

} // namespace gti
