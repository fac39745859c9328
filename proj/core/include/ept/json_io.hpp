#pragma once

#include <string>

#include "ept/markov.hpp"
#include "ept/measure.hpp"
#include "ept/randvar.hpp"
#include "ept/sample_space.hpp"

namespace ept {

/// Space file: { "omega": [labels...], "nu": [weights...] (optional),
/// "p": [[row...]...] }.  p must be square of the space's size and exactly
/// symmetric as stored (writers symmetrize before writing; the in-memory
/// matrix is exactly symmetric, so round trips preserve this).  Unreadable
/// file -> IoError; malformed JSON or structure -> ParseError.
QuadraticState load_space_file(const std::string& path);

/// Serialized space file for the given state (keys omega, nu, p).
std::string space_file_text(const QuadraticState& s);

/// Writes space_file_text to path (IoError on failure).
void save_space_file(const std::string& path, const QuadraticState& s);

/// Random-variable file: { "universe": "<partition literal>",
/// "values": { "<block literal>": real } }.  The universe literal must be a
/// complete partition of the space; the values object must name every
/// universe block exactly once (single-block literals).  Structural
/// problems -> ParseError; unreadable file -> IoError.
ContextRandomVariable load_rv_file(const std::string& path, const SampleSpace& space);

/// Matrix file: { "matrix": [[...]...], "orientation": "column" | "row" }.
/// Column orientation is the default and the in-memory convention; row
/// orientation transposes on load.  The matrix must be square and
/// stochastic in the declared orientation (DomainError from validation).
ProbabilityTransformation load_matrix_file(const std::string& path);

}  // namespace ept
