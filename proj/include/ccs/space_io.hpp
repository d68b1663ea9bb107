#pragma once

#include <string>

#include "ccs/space.hpp"

#include <nlohmann/json_fwd.hpp>

namespace ccs {

// Space description object, e.g.
//   {"kind":"explicit","n":4,"sets":[[0],[1],[0,1]]}
//   {"kind":"free","n":5} {"kind":"chain","n":8} {"kind":"grid","q":3,"d":2}
//   {"kind":"product","factors":[<space>,<space>]}
// For explicit families the empty set and X are added automatically.
// Unknown keys are rejected.
ConvexitySpace space_from_json(const nlohmann::json& j);
ConvexitySpace space_from_file(const std::string& path);

// Point list: comma-separated zero-based indices ("0,2,4", repeats allowed),
// or for grid spaces 1-based coordinate tuples ("[1,2],[2,1]") mapped
// row-major: index = sum (c_i - 1) * q^(d-i).
std::vector<int> parse_points(const ConvexitySpace& space, const std::string& text);

}  // namespace ccs
