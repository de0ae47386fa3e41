#pragma once

#include "json.hpp"

#include "growth/groups.hpp"

namespace growth {

// {"family": name, "params": {...}, "label": optional}
//   cyclic {"m"}, free / free_abelian {"n"}, surface {"g"},
//   torus_bundle {"A": [[a,b],[c,d]]}, free_product {"factors": [spec, ...]},
//   direct_product_with_Z {"inner": spec}
GroupSpec group_spec_from_json(const nlohmann::json& j);
nlohmann::json to_json(const GroupSpec& spec);

MatrixZ2 matrix_from_json(const nlohmann::json& j);
nlohmann::json to_json(const MatrixZ2& m);

}  // namespace growth
