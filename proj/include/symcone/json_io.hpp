#pragma once

// JSON forms for the value types that cross the CLI boundary. Field order is
// fixed (ordered_json) so emitted files are stable under re-serialization.

#include <fstream>
#include <string>

#include <json.hpp>

#include "symcone/algebra.hpp"
#include "symcone/descriptor.hpp"
#include "symcone/errors.hpp"
#include "symcone/wiener_hopf.hpp"

namespace symcone {

using json = nlohmann::ordered_json;

inline json element_to_json(const Element& x) {
  return json{{"algebra", to_string(x.algebra)}, {"coords", x.coords}};
}

inline Element element_from_json(const json& j) {
  if (!j.is_object() || !j.contains("algebra") || !j.contains("coords"))
    throw IoError("element json needs \"algebra\" and \"coords\" fields");
  if (!j["algebra"].is_string() || !j["coords"].is_array())
    throw IoError("element json: \"algebra\" must be a string, \"coords\" an array");
  const AlgebraDescriptor alg = parse_descriptor(j["algebra"].get<std::string>());
  Vec coords;
  coords.reserve(j["coords"].size());
  for (const auto& v : j["coords"]) {
    if (!v.is_number()) throw IoError("element json: coords must be numbers");
    coords.push_back(v.get<double>());
  }
  return Element(alg, std::move(coords));
}

inline json boundary_to_json(const BoundaryPoint& p) {
  return json{{"e", element_to_json(p.e)}, {"x", element_to_json(p.x)}};
}

inline BoundaryPoint boundary_from_json(const json& j) {
  if (!j.is_object() || !j.contains("e") || !j.contains("x"))
    throw IoError("boundary point json needs \"e\" and \"x\" fields");
  return BoundaryPoint(element_from_json(j["e"]), element_from_json(j["x"]));
}

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw IoError("cannot parse " + path + ": " + e.what());
  }
  return j;
}

}  // namespace symcone
