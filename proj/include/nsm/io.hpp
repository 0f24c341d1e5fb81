#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "nsm/decision.hpp"
#include "nsm/matrix.hpp"

namespace nsm {

/// Parses the JSON matrix document
///   {"universe": [...], "parameters": [...], "entries": [[[T,I,F], ...], ...]}
/// Diagnostics name the first offending cell (object label, parameter label,
/// component, value). Throws ValidationError.
NsMatrix parse_matrix(std::string_view text);

/// Reads and parses a matrix file; unreadable files raise ValidationError.
NsMatrix read_matrix_file(const std::filesystem::path& path);

/// Serializes a matrix back to the document form. Numbers use the shortest
/// representation that round-trips, so parse(serialize(m)) == m exactly.
std::string serialize_matrix(const NsMatrix& matrix);

/// {"scores": [{"object", "d": [T,I,F], "s"}...], "optimum": [{"object", "s"}...]}
std::string serialize_outcome(const DecisionOutcome& outcome);

/// Fixed-width text table, one row per object plus an optimum line.
/// `precision` is the number of decimals shown (0..17).
std::string render_outcome_table(const DecisionOutcome& outcome, int precision);

}  // namespace nsm
