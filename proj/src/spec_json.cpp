#include "growth/spec_json.hpp"

#include "growth/errors.hpp"

namespace growth {

namespace {

using nlohmann::json;

const json& require(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw InvalidSpec(where + ": missing \"" + key + "\"");
  return obj.at(key);
}

std::int64_t require_int(const json& obj, const char* key, const std::string& where) {
  const json& v = require(obj, key, where);
  if (!v.is_number_integer()) throw InvalidSpec(where + ": \"" + key + "\" must be an integer");
  return v.get<std::int64_t>();
}

}  // namespace

MatrixZ2 matrix_from_json(const json& j) {
  const bool ok = j.is_array() && j.size() == 2 && j[0].is_array() && j[1].is_array() && j[0].size() == 2 &&
                  j[1].size() == 2 && j[0][0].is_number_integer() && j[0][1].is_number_integer() &&
                  j[1][0].is_number_integer() && j[1][1].is_number_integer();
  if (!ok) throw InvalidSpec("matrix must be [[a,b],[c,d]] with integer entries");
  return {j[0][0].get<std::int64_t>(), j[0][1].get<std::int64_t>(), j[1][0].get<std::int64_t>(),
          j[1][1].get<std::int64_t>()};
}

json to_json(const MatrixZ2& m) { return json::array({json::array({m.a, m.b}), json::array({m.c, m.d})}); }

GroupSpec group_spec_from_json(const json& j) {
  if (!j.is_object()) throw InvalidSpec("group spec must be a JSON object");
  const json& fam = require(j, "family", "group spec");
  if (!fam.is_string()) throw InvalidSpec("group spec: \"family\" must be a string");
  const Family family = parse_family(fam.get<std::string>());
  const json empty = json::object();
  const json& params = j.contains("params") ? j.at("params") : empty;
  const std::string where = family_name(family);

  GroupSpec spec;
  switch (family) {
    case Family::trivial:
      spec = GroupSpec::trivial();
      break;
    case Family::heisenberg:
      spec = GroupSpec::heisenberg();
      break;
    case Family::klein_bottle:
      spec = GroupSpec::klein_bottle();
      break;
    case Family::cyclic:
      spec = GroupSpec::cyclic(require_int(params, "m", where));
      break;
    case Family::free:
      spec = GroupSpec::free(require_int(params, "n", where));
      break;
    case Family::free_abelian:
      spec = GroupSpec::free_abelian(require_int(params, "n", where));
      break;
    case Family::surface:
      spec = GroupSpec::surface(require_int(params, "g", where));
      break;
    case Family::torus_bundle:
      spec = GroupSpec::torus_bundle(matrix_from_json(require(params, "A", where)));
      break;
    case Family::free_product: {
      const json& fs = require(params, "factors", where);
      if (!fs.is_array()) throw InvalidSpec("free_product: \"factors\" must be an array");
      std::vector<GroupSpec> factors;
      for (const json& f : fs) factors.push_back(group_spec_from_json(f));
      spec = GroupSpec::free_product(std::move(factors));
      break;
    }
    case Family::direct_product_with_Z:
      spec = GroupSpec::direct_product_with_Z(group_spec_from_json(require(params, "inner", where)));
      break;
  }
  if (j.contains("label")) {
    if (!j.at("label").is_string()) throw InvalidSpec("group spec: \"label\" must be a string");
    spec.label = j.at("label").get<std::string>();
  }
  validate(spec);
  return spec;
}

json to_json(const GroupSpec& spec) {
  json params = json::object();
  switch (spec.family) {
    case Family::cyclic:
      params["m"] = spec.param;
      break;
    case Family::free:
    case Family::free_abelian:
      params["n"] = spec.param;
      break;
    case Family::surface:
      params["g"] = spec.param;
      break;
    case Family::torus_bundle:
      params["A"] = to_json(spec.matrix);
      break;
    case Family::free_product: {
      json fs = json::array();
      for (const GroupSpec& f : spec.factors) fs.push_back(to_json(f));
      params["factors"] = std::move(fs);
      break;
    }
    case Family::direct_product_with_Z:
      params["inner"] = to_json(spec.inner());
      break;
    default:
      break;
  }
  json j = {{"family", family_name(spec.family)}, {"params", std::move(params)}};
  if (spec.label) j["label"] = *spec.label;
  return j;
}

}  // namespace growth
