#include "orthograph/serialize.hpp"

namespace orthograph {

nlohmann::ordered_json to_json(const VertexClass& c) {
  nlohmann::ordered_json out;
  out["class"] = std::string(tag_name(c.tag));
  out["zero_diag"] = nlohmann::ordered_json::array();
  for (std::size_t i : c.zero_diag) out["zero_diag"].push_back(i + 1);
  return out;
}

nlohmann::ordered_json to_json(const ComponentLabel& label) {
  nlohmann::ordered_json out;
  out["component"] = std::string(family_name(label.family()));
  if (label.alpha()) out["alpha"] = label.alpha()->to_string();
  if (label.beta()) out["beta"] = label.beta()->to_string();
  return out;
}

nlohmann::ordered_json to_json(const ComplementRay& ray) {
  nlohmann::ordered_json out;
  out["generator"] = ray.generator.to_string();
  out["form"] = std::string(form_name(ray.form));
  return out;
}

nlohmann::ordered_json to_json(const OrthoPath& path) {
  nlohmann::ordered_json out;
  out["length"] = path.length();
  out["case"] = path.case_tag;
  out["vertices"] = nlohmann::ordered_json::array();
  for (const Mat& m : path.vertices) out["vertices"].push_back(m.to_string());
  return out;
}

}  // namespace orthograph
