#pragma once

/// @file pf_io.hpp
/// @brief Plain-text point sets: one point per line, coordinates separated by
/// whitespace, 17 significant digits, no locale dependence.
///
/// The reader is lenient so it can also take CSV approximation sets: commas
/// count as separators, blank lines and lines starting with '#' are skipped,
/// and a first line that does not parse as numbers is treated as a header.

#include "dermeda/core.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>

namespace dermeda {

/// Shortest-roundtrip-safe decimal form ("%.17g" without the locale).
[[nodiscard]] std::string format_number(double value);

void write_points(std::ostream& os, const std::vector<ObjectiveVector>& points);
void write_points(const std::filesystem::path& path, const std::vector<ObjectiveVector>& points);

/// Throws std::runtime_error on ragged rows or unparsable numbers.
[[nodiscard]] std::vector<ObjectiveVector> read_points(std::istream& is);
[[nodiscard]] std::vector<ObjectiveVector> read_points(const std::filesystem::path& path);

} // namespace dermeda
