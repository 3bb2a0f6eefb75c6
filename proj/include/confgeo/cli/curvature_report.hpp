#pragma once

#include "confgeo/geometry/curvature.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace confgeo::cli {

// Every field of the bundle; tensors as nested arrays in index order.
nlohmann::json to_json(const geometry::CurvatureBundle& cb);
std::string to_text(const geometry::CurvatureBundle& cb);

}  // namespace confgeo::cli
