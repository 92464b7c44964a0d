#include "shardfan/fan_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace shardfan {

namespace {

using nlohmann::ordered_json;

Int int_from_json(const ordered_json& v, const std::string& field) {
  if (!v.is_number_integer())
    throw SchemaError(field, "field \"" + field + "\" must be an integer");
  return Int(v.get<long long>());
}

}  // namespace

Fan fan_from_json(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!doc.is_object()) throw SchemaError("$", "document must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "dim" && key != "rays" && key != "chambers" && key != "name")
      throw SchemaError(key, "unknown field \"" + key + "\"");
  }
  if (!doc.contains("dim")) throw SchemaError("dim", "missing field \"dim\"");
  if (!doc.contains("rays")) throw SchemaError("rays", "missing field \"rays\"");
  if (!doc.contains("chambers")) throw SchemaError("chambers", "missing field \"chambers\"");

  Fan fan;
  if (!doc["dim"].is_number_integer() || doc["dim"].get<long long>() < 1)
    throw SchemaError("dim", "field \"dim\" must be a positive integer");
  fan.dim = static_cast<int>(doc["dim"].get<long long>());

  if (!doc["rays"].is_array()) throw SchemaError("rays", "field \"rays\" must be an array");
  for (size_t i = 0; i < doc["rays"].size(); ++i) {
    const auto& r = doc["rays"][i];
    const std::string where = "rays[" + std::to_string(i) + "]";
    if (!r.is_array() || static_cast<int>(r.size()) != fan.dim)
      throw SchemaError(where, where + " must be an array of dim integers");
    IntVec ray;
    for (const auto& x : r) ray.push_back(int_from_json(x, where));
    fan.rays.push_back(std::move(ray));
  }

  if (!doc["chambers"].is_array())
    throw SchemaError("chambers", "field \"chambers\" must be an array");
  for (size_t i = 0; i < doc["chambers"].size(); ++i) {
    const auto& c = doc["chambers"][i];
    const std::string where = "chambers[" + std::to_string(i) + "]";
    if (!c.is_array()) throw SchemaError(where, where + " must be an array of ray indices");
    std::vector<int> chamber;
    for (const auto& x : c) {
      Int idx = int_from_json(x, where);
      if (idx < 0 || idx >= Int(fan.rays.size()))
        throw SchemaError(where, where + " has a ray index out of range");
      chamber.push_back(static_cast<int>(idx));
    }
    fan.chambers.push_back(std::move(chamber));
  }

  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw SchemaError("name", "field \"name\" must be a string");
    fan.name = doc["name"].get<std::string>();
  }
  return fan;
}

std::string fan_to_json(const Fan& fan) {
  ordered_json doc;
  doc["dim"] = fan.dim;
  doc["rays"] = ordered_json::array();
  for (const auto& ray : fan.rays) {
    ordered_json r = ordered_json::array();
    for (const auto& x : ray) r.push_back(static_cast<long long>(x));
    doc["rays"].push_back(std::move(r));
  }
  doc["chambers"] = fan.chambers;
  if (!fan.name.empty()) doc["name"] = fan.name;
  return doc.dump(2) + "\n";
}

Fan load_fan(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return fan_from_json(buf.str());
}

void save_fan(const Fan& fan, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << fan_to_json(fan);
}

}  // namespace shardfan
