#ifndef SYMPOLY_TESTS_SUPPORT_HPP
#define SYMPOLY_TESTS_SUPPORT_HPP

#include <fstream>
#include <regex>
#include <sstream>
#include <string>

#include <json.hpp>

#include "sympoly/rational.hpp"

namespace testsupport {

// Validator for the subset of JSON Schema our shipped schemas use:
// type, enum, pattern, required, properties, additionalProperties, items.
inline bool validates(const nlohmann::json& value, const nlohmann::json& schema,
                      std::string* why = nullptr) {
  auto complain = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (schema.contains("enum")) {
    for (const auto& e : schema["enum"])
      if (e == value) return true;
    return complain("value not in enum");
  }
  if (schema.contains("type")) {
    const std::string t = schema["type"].get<std::string>();
    if (t == "object" && !value.is_object()) return complain("expected object");
    if (t == "array" && !value.is_array()) return complain("expected array");
    if (t == "string" && !value.is_string()) return complain("expected string");
    if (t == "integer" && !value.is_number_integer()) return complain("expected integer");
    if (t == "number" && !value.is_number()) return complain("expected number");
    if (t == "boolean" && !value.is_boolean()) return complain("expected boolean");
  }
  if (schema.contains("pattern") && value.is_string()) {
    std::regex re(schema["pattern"].get<std::string>());
    if (!std::regex_search(value.get<std::string>(), re)) return complain("pattern mismatch");
  }
  if (value.is_object()) {
    if (schema.contains("required"))
      for (const auto& key : schema["required"])
        if (!value.contains(key.get<std::string>()))
          return complain("missing key " + key.get<std::string>());
    const nlohmann::json props =
        schema.contains("properties") ? schema["properties"] : nlohmann::json::object();
    for (auto it = value.begin(); it != value.end(); ++it) {
      if (props.contains(it.key())) {
        if (!validates(it.value(), props[it.key()], why)) {
          if (why) *why = it.key() + ": " + *why;
          return false;
        }
      } else if (schema.contains("additionalProperties") &&
                 schema["additionalProperties"] == false) {
        return complain("unexpected key " + it.key());
      }
    }
  }
  if (value.is_array() && schema.contains("items")) {
    for (const auto& item : value)
      if (!validates(item, schema["items"], why)) return false;
  }
  return true;
}

inline nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

inline sympoly::QVector qv(const std::vector<std::string>& coords) {
  sympoly::QVector v;
  for (const std::string& c : coords) v.push_back(sympoly::rat_from_string(c));
  return v;
}

// Rational vector literal: scale * (integer entries).
inline sympoly::QVector qv_scaled(const sympoly::Rat& scale, const std::vector<int>& entries) {
  sympoly::QVector v;
  for (int e : entries) v.push_back(scale * e);
  return v;
}

}  // namespace testsupport

#endif
