#pragma once

#include "gti/life_table.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace gti::hmd {

// Human Mortality Database 1x1 text products: a free-text title line, a
// blank line, a column header, then whitespace-separated rows. Age is an
// integer or "110+"; "." marks a missing datum.

enum class Format { LifeTable, DeathRates };

/// Decides the product from the column header on line 3.
/// Throws MalformedHeader if it is neither.
Format detect_format(std::string_view text);

/// One LifeTable per year, in year order. The sex comes from the title line
/// ("Female"/"Male" anywhere in it, otherwise Total).
std::vector<LifeTable> parse_life_table(std::string_view text);

/// One series per year, in year order (Mx_1x1: Year Age Female Male Total).
std::vector<MortalityRateSeries> parse_mx(std::string_view text);

/// Emits an Mx_1x1 file; numbers use the shortest round-trip form.
std::string write_mx(std::string_view title, const std::vector<MortalityRateSeries>& series);

/// Reads a whole file. Throws std::runtime_error if it cannot be opened.
std::string read_file(const std::string& path);

} // namespace gti::hmd
