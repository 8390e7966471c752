#pragma once

#include <nlohmann/json.hpp>

#include "orthograph/classify.hpp"
#include "orthograph/ortho.hpp"
#include "orthograph/pathfinder.hpp"

namespace orthograph {

// JSON renderings used by the CLI. Scalars and matrices use the matrix
// text format; diagonal positions are 1-based.

/// {"class": "bad1", "zero_diag": [1]}
nlohmann::ordered_json to_json(const VertexClass& c);
/// {"component": "V6", "alpha": "1", "beta": "2"}
nlohmann::ordered_json to_json(const ComponentLabel& label);
/// {"generator": "1,0,-1;0,0,0;0,0,0", "form": "bad1"}
nlohmann::ordered_json to_json(const ComplementRay& ray);
/// {"length": 4, "case": "3.2", "vertices": [...]}
nlohmann::ordered_json to_json(const OrthoPath& path);

}  // namespace orthograph
