#include "gti/hmd.hpp"

#include "gti/error.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace gti::hmd {

namespace {

constexpr std::string_view kLifeTableColumns[] = {"Year", "Age", "mx", "qx", "ax",
                                                  "lx",   "dx",  "Lx", "Tx", "ex"};
constexpr std::string_view kMxColumns[] = {"Year", "Age", "Female", "Male", "Total"};

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        start = end + 1;
    }
    return lines;
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\v' || c == '\f'; }

std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && is_space(line[i])) ++i;
        std::size_t j = i;
        while (j < line.size() && !is_space(line[j])) ++j;
        if (j > i) tokens.push_back(line.substr(i, j - i));
        i = j;
    }
    return tokens;
}

bool is_blank(std::string_view line) { return tokenize(line).empty(); }

// Title, blank line, then a header matching `columns`; returns the index of
// the first data line.
std::size_t check_preamble(const std::vector<std::string_view>& lines,
                           std::span<const std::string_view> columns) {
    if (lines.size() < 3) throw Error(ErrorKind::MalformedHeader, "file has fewer than 3 lines");
    if (!is_blank(lines[1]))
        throw Error(ErrorKind::MalformedHeader, "expected a blank line after the title", 2);
    auto header = tokenize(lines[2]);
    if (!std::equal(header.begin(), header.end(), columns.begin(), columns.end())) {
        std::string want;
        for (auto c : columns) want += (want.empty() ? "" : " ") + std::string(c);
        throw Error(ErrorKind::MalformedHeader, "expected column header \"" + want + "\"", 3);
    }
    return 3;
}

int parse_int(std::string_view token, int line, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw Error(ErrorKind::MalformedRow,
                    fmt::format("cannot parse {} \"{}\"", what, token), line);
    return value;
}

struct Age {
    int start;
    bool open_ended;
};

Age parse_age(std::string_view token, int line) {
    if (token == ".") throw Error(ErrorKind::MissingDatum, "missing age", line);
    bool open = !token.empty() && token.back() == '+';
    if (open) token.remove_suffix(1);
    int age = parse_int(token, line, "age");
    if (age < 0) throw Error(ErrorKind::MalformedRow, "negative age", line);
    return {age, open};
}

// Fixed or scientific decimal; "." is HMD's missing-datum marker.
double parse_value(std::string_view token, int line, std::string_view column) {
    if (token == ".")
        throw Error(ErrorKind::MissingDatum, fmt::format("missing value in column {}", column),
                    line);
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || !std::isfinite(value))
        throw Error(ErrorKind::MalformedRow,
                    fmt::format("cannot parse {} value \"{}\"", column, token), line);
    if (value < 0.0)
        throw Error(ErrorKind::MalformedRow,
                    fmt::format("negative {} value \"{}\"", column, token), line);
    return value;
}

template <class Row, class RowParser>
std::map<int, std::vector<Row>> parse_rows(std::string_view text,
                                           std::span<const std::string_view> columns,
                                           RowParser parse_row) {
    auto lines = split_lines(text);
    std::size_t first = check_preamble(lines, columns);
    std::map<int, std::vector<Row>> by_year;
    for (std::size_t i = first; i < lines.size(); ++i) {
        const int line_no = static_cast<int>(i) + 1;
        auto tokens = tokenize(lines[i]);
        if (tokens.empty()) continue;
        if (tokens.size() != columns.size())
            throw Error(ErrorKind::MalformedRow,
                        fmt::format("expected {} columns, found {}", columns.size(),
                                    tokens.size()),
                        line_no);
        int year = parse_int(tokens[0], line_no, "year");
        Age age = parse_age(tokens[1], line_no);
        Row row = parse_row(tokens, line_no);
        row.age = age.start;
        row.open_ended = age.open_ended;
        row.line = line_no;
        by_year[year].push_back(row);
    }
    return by_year;
}

Sex sex_from_title(std::string_view title) {
    if (title.find("Female") != std::string_view::npos) return Sex::Female;
    if (title.find("Male") != std::string_view::npos) return Sex::Male;
    return Sex::Total;
}

} // namespace

Format detect_format(std::string_view text) {
    auto lines = split_lines(text);
    if (lines.size() < 3) throw Error(ErrorKind::MalformedHeader, "file has fewer than 3 lines");
    auto header = tokenize(lines[2]);
    if (std::equal(header.begin(), header.end(), std::begin(kLifeTableColumns),
                   std::end(kLifeTableColumns)))
        return Format::LifeTable;
    if (std::equal(header.begin(), header.end(), std::begin(kMxColumns), std::end(kMxColumns)))
        return Format::DeathRates;
    throw Error(ErrorKind::MalformedHeader, "unrecognized column header", 3);
}

std::vector<LifeTable> parse_life_table(std::string_view text) {
    auto by_year = parse_rows<LifeTableRow>(
        text, kLifeTableColumns, [](const std::vector<std::string_view>& t, int line) {
            LifeTableRow r;
            r.mx = parse_value(t[2], line, "mx");
            r.qx = parse_value(t[3], line, "qx");
            if (r.qx > 1.0)
                throw Error(ErrorKind::MalformedRow, fmt::format("qx {} exceeds 1", r.qx), line);
            r.ax = parse_value(t[4], line, "ax");
            r.lx = parse_value(t[5], line, "lx");
            r.dx = parse_value(t[6], line, "dx");
            r.Lx = parse_value(t[7], line, "Lx");
            r.Tx = parse_value(t[8], line, "Tx");
            r.ex = parse_value(t[9], line, "ex");
            return r;
        });
    const Sex sex = sex_from_title(split_lines(text).front());
    std::vector<LifeTable> tables;
    tables.reserve(by_year.size());
    for (auto& [year, rows] : by_year) tables.emplace_back(year, sex, std::move(rows));
    return tables;
}

std::vector<MortalityRateSeries> parse_mx(std::string_view text) {
    auto by_year = parse_rows<MortalityRateRow>(
        text, kMxColumns, [](const std::vector<std::string_view>& t, int line) {
            MortalityRateRow r;
            r.female = parse_value(t[2], line, "Female");
            r.male = parse_value(t[3], line, "Male");
            r.total = parse_value(t[4], line, "Total");
            return r;
        });
    std::vector<MortalityRateSeries> series;
    series.reserve(by_year.size());
    for (auto& [year, rows] : by_year) series.emplace_back(year, std::move(rows));
    return series;
}

std::string write_mx(std::string_view title, const std::vector<MortalityRateSeries>& series) {
    std::string out;
    out += title;
    out += "\n\n";
    out += fmt::format("{:>6} {:>7} {:>13} {:>13} {:>13}\n", "Year", "Age", "Female", "Male", "Total");
    for (const auto& s : series) {
        for (const auto& r : s.rows()) {
            std::string age = std::to_string(r.age) + (r.open_ended ? "+" : "");
            out += fmt::format("{:>6} {:>7} {:>13} {:>13} {:>13}\n", s.year(), age, r.female, r.male,
                               r.total);
        }
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace gti::hmd
