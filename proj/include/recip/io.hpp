#pragma once

#include "recip/matrix.hpp"

#include <string>

namespace recip {

/// Parses either format: CSV (one row per line) or a JSON object with fields
/// "order", "entries" and optional "tolerance" (which overrides `tol`).
/// The format is sniffed from the first non-space character.
reciprocal_matrix parse_matrix(const std::string& text,
                               double tol = reciprocal_matrix::default_reciprocity_tol);

std::string write_matrix_csv(const reciprocal_matrix& a);
std::string write_matrix_json(const reciprocal_matrix& a);

/// Shortest round-trip-exact decimal form (17 significant digits).
std::string format_double(double value);

} // namespace recip
