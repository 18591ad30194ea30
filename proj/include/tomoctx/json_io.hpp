#pragma once

#include <nlohmann/json_fwd.hpp>

#include "tomoctx/types.hpp"

namespace tomoctx::json_io {

/// {"dim": n, "entries": [...]} with complex numbers as [re, im] pairs;
/// matrix entries row-major.
nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

nlohmann::json vector_to_json(const Vector& v);
Vector vector_from_json(const nlohmann::json& j);

}  // namespace tomoctx::json_io
