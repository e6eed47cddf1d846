#pragma once

// JSON and CSV encodings used by the command-line front end.
//
// Matrices are lists of rows, each row a list of [re, im] pairs. State files
// carry {"d": int, "rho": matrix} with row j*d + k for |j> (x) |k>, 0-based.

#include <filesystem>
#include <string>

#include <json.hpp>

#include "qchsh/bounds.hpp"
#include "qchsh/optimizer.hpp"

namespace qchsh::io {

using Json = nlohmann::json;

Json matrix_to_json(const ComplexMatrix& m);
/// Throws InvalidInput on malformed input.
ComplexMatrix matrix_from_json(const Json& j);

Json vector_to_json(const RealVector& v);
Json real_matrix_to_json(const RealMatrix& m);

/// Parses and validates a state document. `expected_dim` of 0 accepts the
/// file's "d"; otherwise a mismatch throws DimensionMismatch.
TwoQuditState state_from_json(const Json& j, int expected_dim = 0);
TwoQuditState load_state(const std::filesystem::path& path, int expected_dim = 0);
Json state_to_json(const TwoQuditState& state);

Json basis_to_json(const GellMannBasis& basis);
Json correlation_to_json(const CorrelationMatrix& t, const GellMannBasis& basis);
/// Header row and column name the basis elements ("s_1_2", "as_1_2", "diag_1").
std::string correlation_to_csv(const CorrelationMatrix& t, const GellMannBasis& basis);
Json bounds_to_json(const BoundsReport& report);
Json settings_to_json(const ChshSettings& settings);

/// Rounds every floating-point number to 15 significant digits.
Json round_numbers(const Json& j);
/// round_numbers + dump with two-space indentation and a trailing newline.
std::string dump(const Json& j);

/// "%.15g".
std::string format_number(double x);

}  // namespace qchsh::io
