#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "leibniz/degeneration.hpp"

namespace leibniz {

// Algebra documents:
//   {"dim": n, "field": "Q" | "Q(t)", "label": "...",
//    "table": [{"i": 1, "j": 2, "k": 3, "c": "<scalar>"}, ...]}
// Indices are 1-based, unlisted triples are zero, duplicates are rejected.
//
// Family documents:
//   {"dim": n, "label": "...", "matrix": [["<scalar>", ...], ...]}
// Row-major; column j holds g_t(e_j).
//
// Syntax errors carry line and column; semantic errors carry a JSON pointer
// to the offending value (ParseError::where).

std::string serialize(const AlgebraQ& a);
std::string serialize(const AlgebraQt& a);
std::string serialize(const BasisFamily& f);

/// Requires field "Q".
AlgebraQ parse_algebra(std::string_view text);
/// Accepts either field.
AlgebraQt parse_algebra_qt(std::string_view text);
BasisFamily parse_family(std::string_view text);

/// Whole file as text; throws std::runtime_error when unreadable.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace leibniz
