#include "gti/cli.hpp"

#include "gti/error.hpp"
#include "gti/hmd.hpp"
#include "gti/report.hpp"
#include "gti/weibull.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>

namespace gti::cli {

namespace {

// The reference table prints the seventh shape as "0.3"; its index -0.5 and
// its pairing with shape 3 under beta -> 1/beta make it 1/3.
const std::vector<double> kTable1Betas = {5, 4, 3, 2, 1, 0.5, 1.0 / 3.0, 0.25, 0.2};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Failure to read or write a file, outside the gti::Error taxonomy.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::vector<std::string> files;
    std::vector<int> years;
    std::string sex = "total";
    bool sex_given = false;
    std::vector<double> cutoffs;
    std::string hazard_source = "mx";
    std::string format;
    std::string out_path;
    double epsilon = kDefaultClassifyEpsilon;
    std::vector<double> betas;
    double eta = 1.0;
    std::size_t steps = 10000;
    std::string kind;
};

std::string_view distribution_label(Classification c) {
    switch (c) {
    case Classification::Ageing: return "Ageing";
    case Classification::Rejuvenating: return "Rejuvenating";
    case Classification::NonAgeing: return "Constant mortality rate";
    }
    return "";
}

HazardSource hazard_source_of(const Options& o) {
    return o.hazard_source == "qx" ? HazardSource::QxImplied : HazardSource::MxDirect;
}

std::vector<double> cutoffs_of(const Options& o) {
    std::vector<double> cutoffs = o.cutoffs;
    if (cutoffs.empty()) cutoffs.assign(std::begin(kDefaultCutoffs), std::end(kDefaultCutoffs));
    for (double t : cutoffs) {
        if (!(t > 0.0) || !std::isfinite(t))
            throw UsageError(fmt::format("cut-off must be positive, got {}", t));
    }
    return cutoffs;
}

void check_epsilon(const Options& o) {
    if (!(o.epsilon >= 0.0)) throw UsageError("--epsilon must be nonnegative");
}

// Rethrows with the input named, keeping the error kind (and so the exit code).
template <class F>
auto tagged(const std::string& tag, F&& f) {
    try {
        return f();
    } catch (const Error& e) {
        throw Error(e.kind(), tag + ": " + e.what());
    } catch (const IoError& e) {
        throw IoError(tag + ": " + e.what());
    }
}

std::string read_input(const std::string& path) {
    try {
        return hmd::read_file(path);
    } catch (const std::runtime_error& e) {
        throw IoError(e.what());
    }
}

LifeTable load_life_table(const std::string& path, int year) {
    auto tables = hmd::parse_life_table(read_input(path));
    auto it = std::find_if(tables.begin(), tables.end(),
                           [year](const LifeTable& t) { return t.year() == year; });
    if (it == tables.end())
        throw Error(ErrorKind::YearNotFound, fmt::format("year {} not found in {}", year, path));
    return *it;
}

ComputeReport compute_one(const Options& o, const std::string& path, int year,
                          std::span<const double> cutoffs) {
    LifeTable table = load_life_table(path, year);
    if (o.sex_given && to_string(table.sex()) != o.sex)
        throw UsageError(fmt::format("{} holds the {} series, not {}", path,
                                     to_string(table.sex()), o.sex));
    return make_report(path, table, cutoffs, hazard_source_of(o), o.epsilon);
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
    if (o.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file) throw IoError("cannot write " + o.out_path);
    file << text;
    if (!file) throw IoError("cannot write " + o.out_path);
}

std::string pad(std::string_view s, std::size_t width) {
    std::string out(s);
    if (out.size() < width) out.append(width - out.size(), ' ');
    return out;
}

// Left-aligned columns separated by two spaces, no trailing whitespace.
std::string render_table(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> widths;
    for (const auto& row : rows) {
        widths.resize(std::max(widths.size(), row.size()), 0);
        for (std::size_t i = 0; i < row.size(); ++i)
            widths[i] = std::max(widths[i], row[i].size());
    }
    std::string out;
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i)
            line += i + 1 < row.size() ? pad(row[i], widths[i] + 2) : row[i];
        out += line + '\n';
    }
    return out;
}

int cmd_weibull(const Options& o, std::ostream& out) {
    check_epsilon(o);
    const std::vector<double>& betas = o.betas.empty() ? kTable1Betas : o.betas;
    for (double b : betas) {
        if (!(b > 0.0) || !std::isfinite(b))
            throw UsageError(fmt::format("shape parameter must be positive, got {}", b));
    }
    const std::string format = o.format.empty() ? "table" : o.format;
    if (format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (double b : betas) {
            double c = weibull_gti_closed(b);
            Classification cls = classify(c, o.epsilon);
            rows.push_back({{"beta", b},
                            {"gti", c},
                            {"class", std::string(to_string(cls))},
                            {"distribution", std::string(distribution_label(cls))}});
        }
        emit(o, nlohmann::json{{"rows", rows}}.dump(2) + "\n", out);
    } else if (format == "csv") {
        std::string text = "beta,gti,class,distribution\n";
        for (double b : betas) {
            double c = weibull_gti_closed(b);
            Classification cls = classify(c, o.epsilon);
            text += fmt::format("{},{},{},{}\n", format_exact(b), format_exact(c), to_string(cls),
                                distribution_label(cls));
        }
        emit(o, text, out);
    } else {
        std::vector<std::vector<std::string>> rows = {{"beta", "GTI", "Lifetime distribution"}};
        for (double b : betas) {
            double c = weibull_gti_closed(b);
            rows.push_back({format_table(b), format_table(c),
                            std::string(distribution_label(classify(c, o.epsilon)))});
        }
        emit(o, render_table(rows), out);
    }
    return kOk;
}

int cmd_compute(const Options& o, std::ostream& out) {
    check_epsilon(o);
    if (o.files.size() != 1) throw UsageError("compute takes exactly one --file");
    if (o.years.size() != 1) throw UsageError("compute takes exactly one --year");
    auto cutoffs = cutoffs_of(o);
    ComputeReport report = compute_one(o, o.files[0], o.years[0], cutoffs);
    if (o.format == "csv")
        emit(o, to_csv(report), out);
    else
        emit(o, to_json(report).dump(2) + "\n", out);
    return kOk;
}

int cmd_compare(const Options& o, std::ostream& out) {
    check_epsilon(o);
    if (o.files.empty() || o.files.size() > 2)
        throw UsageError("compare takes one --file (both years) or two");
    if (o.years.size() != 2) throw UsageError("compare takes exactly two --year");
    auto cutoffs = cutoffs_of(o);
    const std::string& file_a = o.files[0];
    const std::string& file_b = o.files.size() == 2 ? o.files[1] : o.files[0];
    ComputeReport a = tagged(fmt::format("input A ({}, year {})", file_a, o.years[0]),
                             [&] { return compute_one(o, file_a, o.years[0], cutoffs); });
    ComputeReport b = tagged(fmt::format("input B ({}, year {})", file_b, o.years[1]),
                             [&] { return compute_one(o, file_b, o.years[1], cutoffs); });

    const std::string col_a = std::to_string(a.year);
    const std::string col_b = std::to_string(b.year);
    if (o.format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t i = 0; i < a.rows.size(); ++i) {
            rows.push_back({{"T", a.rows[i].cutoff},
                            {"gti_a", a.rows[i].gti},
                            {"gti_b", b.rows[i].gti},
                            {"delta", b.rows[i].gti - a.rows[i].gti}});
        }
        nlohmann::json j{{"a", to_json(a)}, {"b", to_json(b)}, {"rows", rows}};
        emit(o, j.dump(2) + "\n", out);
    } else if (o.format == "csv") {
        std::string text = "T,gti_a,survival_a,gti_b,survival_b,delta\n";
        for (std::size_t i = 0; i < a.rows.size(); ++i) {
            const auto &ra = a.rows[i], &rb = b.rows[i];
            text += fmt::format("{},{},{},{},{},{}\n", format_exact(ra.cutoff),
                                format_exact(ra.gti), format_exact(ra.survival_at_cutoff),
                                format_exact(rb.gti), format_exact(rb.survival_at_cutoff),
                                format_exact(rb.gti - ra.gti));
        }
        emit(o, text, out);
    } else {
        std::vector<std::vector<std::string>> rows = {
            {"T", "GTI " + col_a, "S(T) " + col_a, "GTI " + col_b, "S(T) " + col_b, "delta"}};
        for (std::size_t i = 0; i < a.rows.size(); ++i) {
            const auto &ra = a.rows[i], &rb = b.rows[i];
            rows.push_back({format_table(ra.cutoff), format_table(ra.gti),
                            format_table(ra.survival_at_cutoff), format_table(rb.gti),
                            format_table(rb.survival_at_cutoff), format_table(rb.gti - ra.gti)});
        }
        auto median = [](const ComputeReport& r) {
            return r.median_age_at_death ? format_table(*r.median_age_at_death) : "-";
        };
        rows.push_back({"median", median(a), "", median(b), "", ""});
        emit(o, render_table(rows), out);
    }
    return kOk;
}

int cmd_plot_chord(const Options& o, std::ostream& out) {
    if (o.cutoffs.size() != 1) throw UsageError("plot chord takes exactly one --cutoff");
    const double cutoff = cutoffs_of(o).front();

    auto curve = [&]() -> CumulativeHazardCurve {
        if (!o.files.empty()) {
            if (o.files.size() != 1 || o.years.size() != 1)
                throw UsageError("plot chord takes one --file and one --year");
            return cumulative_hazard(
                hazard_from_life_table(load_life_table(o.files[0], o.years[0]),
                                       hazard_source_of(o)));
        }
        if (o.betas.size() != 1) throw UsageError("plot chord needs --file or one --beta");
        if (o.steps == 0) throw UsageError("--steps must be positive");
        if (!(o.betas[0] > 0.0)) throw UsageError("shape parameter must be positive");
        if (!(o.eta > 0.0)) throw UsageError("--eta must be positive");
        return cumulative_hazard(discretize_hazard(WeibullParams(o.betas[0], o.eta), cutoff, o.steps));
    }();

    const ChordAreas areas = chord_areas(curve, cutoff);
    emit(o, chord_csv(curve, cutoff), out);
    out << "T " << format_exact(areas.cutoff) << '\n'
        << "A " << format_exact(areas.under_curve) << '\n'
        << "B " << format_exact(areas.between) << '\n'
        << "A+B " << format_exact(areas.under_chord) << '\n'
        << "GTI " << format_exact(areas.gti) << '\n';
    return kOk;
}

int cmd_plot_rates(const Options& o, std::ostream& out) {
    if (o.files.empty() || o.years.empty())
        throw UsageError("plot rates needs --file and at least one --year");
    if (o.files.size() != 1 && o.files.size() != o.years.size())
        throw UsageError("plot rates takes one --file, or one per --year");
    const Sex sex = *parse_sex(o.sex);

    std::vector<RateColumn> columns;
    for (std::size_t i = 0; i < o.years.size(); ++i) {
        const std::string& path = o.files.size() == 1 ? o.files[0] : o.files[i];
        const int year = o.years[i];
        RateColumn column = tagged(fmt::format("{} (year {})", path, year), [&] {
            std::string text = read_input(path);
            RateColumn c;
            c.name = fmt::format("mx_{}", year);
            if (hmd::detect_format(text) == hmd::Format::DeathRates) {
                for (const auto& s : hmd::parse_mx(text)) {
                    if (s.year() != year) continue;
                    for (const auto& r : s.rows()) c.ages.push_back(r.age);
                    c.rates = s.rates(sex);
                    return c;
                }
            } else {
                for (const auto& t : hmd::parse_life_table(text)) {
                    if (t.year() != year) continue;
                    for (const auto& r : t.rows()) {
                        c.ages.push_back(r.age);
                        c.rates.push_back(r.mx);
                    }
                    return c;
                }
            }
            throw Error(ErrorKind::YearNotFound,
                        fmt::format("year {} not found in {}", year, path));
        });
        columns.push_back(std::move(column));
    }
    emit(o, rates_csv(columns), out);
    return kOk;
}

int cmd_plot(const Options& o, std::ostream& out) {
    if (o.out_path.empty()) throw UsageError("plot requires --out");
    return o.kind == "chord" ? cmd_plot_chord(o, out) : cmd_plot_rates(o, out);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Gini-type ageing/rejuvenating index for life tables and Weibull lifetimes",
                 "gti"};
    app.require_subcommand(1);
    Options o;

    auto add_epsilon = [&](CLI::App* sub) {
        sub->add_option("--epsilon", o.epsilon, "Classification tolerance around 0")
            ->capture_default_str();
    };
    auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed) {
        sub->add_option("--format", o.format, "Output format")
            ->check(CLI::IsMember(std::move(allowed)));
    };
    auto add_life_table_flags = [&](CLI::App* sub) {
        sub->add_option("--file", o.files, "HMD 1x1 life-table file")->required();
        sub->add_option("--year", o.years, "Calendar year")->required();
        sub->add_option("--sex", o.sex, "Sex series held by the file")
            ->check(CLI::IsMember({"female", "male", "total"}));
        sub->add_option("--cutoff", o.cutoffs, "Cut-off age T in years (repeatable)");
        sub->add_option("--hazard-source", o.hazard_source, "Hazard from mx or from qx")
            ->check(CLI::IsMember({"mx", "qx"}))
            ->capture_default_str();
        sub->add_option("--out", o.out_path, "Write output to this file");
        add_epsilon(sub);
    };

    auto* weibull = app.add_subcommand("weibull", "Closed-form index for Weibull shapes");
    weibull->add_option("--beta", o.betas, "Shape parameter (repeatable)");
    weibull->add_option("--out", o.out_path, "Write output to this file");
    add_format(weibull, {"table", "json", "csv"});
    add_epsilon(weibull);

    auto* compute = app.add_subcommand("compute", "Index at cut-off ages for one life table");
    add_life_table_flags(compute);
    add_format(compute, {"json", "csv"});

    auto* compare = app.add_subcommand("compare", "Side-by-side index for two years");
    add_life_table_flags(compare);
    add_format(compare, {"table", "json", "csv"});

    auto* plot = app.add_subcommand("plot", "Plot data: chord (areas of the index) or rates");
    plot->add_option("kind", o.kind, "chord or rates")
        ->required()
        ->check(CLI::IsMember({"chord", "rates"}));
    plot->add_option("--file", o.files, "HMD file (life table or Mx_1x1)");
    plot->add_option("--year", o.years, "Calendar year (repeatable for rates)");
    plot->add_option("--sex", o.sex, "Series for Mx_1x1 inputs")
        ->check(CLI::IsMember({"female", "male", "total"}));
    plot->add_option("--cutoff", o.cutoffs, "Cut-off age for chord");
    plot->add_option("--hazard-source", o.hazard_source, "Hazard from mx or from qx")
        ->check(CLI::IsMember({"mx", "qx"}));
    plot->add_option("--beta", o.betas, "Weibull shape for a synthetic chord");
    plot->add_option("--eta", o.eta, "Weibull scale")->capture_default_str();
    plot->add_option("--steps", o.steps, "Discretization steps")->capture_default_str();
    plot->add_option("--out", o.out_path, "CSV output file")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }
    for (auto* sub : {compute, compare, plot}) {
        if (sub->parsed() && sub->count("--sex") > 0) o.sex_given = true;
    }

    try {
        if (weibull->parsed()) return cmd_weibull(o, out);
        if (compute->parsed()) return cmd_compute(o, out);
        if (compare->parsed()) return cmd_compare(o, out);
        return cmd_plot(o, out);
    } catch (const UsageError& e) {
        err << "gti: " << e.what() << '\n';
        return kUsage;
    } catch (const IoError& e) {
        err << "gti: " << e.what() << '\n';
        return kParseFailure;
    } catch (const Error& e) {
        err << "gti: " << to_string(e.kind()) << ": " << e.what() << '\n';
        return is_parse_error(e.kind()) ? kParseFailure : kDomain;
    }
}

} // namespace gti::cli
