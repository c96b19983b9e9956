#pragma once

#include <nlohmann/json.hpp>

#include "trineq/matrix.hpp"

namespace trineq {

using nlohmann::json;

// Shared matrix file format:
//   {"dim": n, "entries": [[[re,im], …], …]}   row-major
// Serialization is round-trip exact for doubles (shortest representation),
// so a witness re-parses to bit-identical matrices.
json matrix_to_json(const ComplexMatrix& m);

// Rejects non-square, empty, or non-finite data with ParseError naming the
// offending field.
ComplexMatrix matrix_from_json(const json& j);

ComplexMatrix load_matrix_file(const std::string& path);

} // namespace trineq
