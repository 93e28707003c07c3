#pragma once

// JSON form of Hermitian matrices: {"n": int, "re": [[...]], "im": [[...]]}.
// "im" may be omitted for real matrices.

#include <string>

#include <json.hpp>

#include "qig/linalg.hpp"

namespace qig {

nlohmann::json matrix_to_json(const Matrix& m);
nlohmann::json matrix_to_json(const HermitianMatrix& h);

/// Parses and checks shape and Hermiticity. Violations throw InvariantError
/// naming the invariant ("format", "shape", "hermitian").
HermitianMatrix hermitian_from_json(const nlohmann::json& j);
DensityMatrix density_from_json(const nlohmann::json& j);
TangentVector tangent_from_json(const nlohmann::json& j);

nlohmann::json read_json_file(const std::string& path);

}  // namespace qig
