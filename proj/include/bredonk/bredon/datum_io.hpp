#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "bredonk/bredon/datum.hpp"

namespace bredonk {

// Γ-CW text format (UTF-8, '#' starts a comment):
//
//   name = "PSL2(Z)"
//   flags = snf-equivalent          # optional
//
//   [cells.0]
//   z  = 1
//   x1 = Z2
//   [cells.1]
//   d1 = 1
//   [boundary.1]
//   d1 = +1 * x1 : triv->Z2, -1 * z : id
//
// Cells keep the order in which they are listed. A boundary line lists signed
// terms `k * label : spec` separated by commas; cells without a line (or with
// an empty one) have zero boundary. Instead of [boundary.N] sections a file
// may give raw matrices:
//
//   [matrix.1]          # ∂_1 : C_1 → C_0, one row per basis element of C_0
//   shape = 2 x 3       # optional; required only for matrices with no rows
//   1 0 -1
//   0 1  1

/// Throws ParseError with a line number on malformed input.
GammaCWDatum parse_datum(std::string_view text);
GammaCWDatum read_datum_file(const std::filesystem::path& path);

/// Inverse of parse_datum: parse_datum(write_datum(d)) == d.
std::string write_datum(const GammaCWDatum& datum);

}  // namespace bredonk
