// Validates a JSON document against the subset of JSON Schema the shipped
// report schema uses: type, required, properties, items, enum.

#include <json.hpp>

#include <fstream>
#include <iostream>
#include <string>

using nlohmann::json;

namespace {

bool type_matches(const json& doc, const std::string& type) {
  if (type == "object") return doc.is_object();
  if (type == "array") return doc.is_array();
  if (type == "string") return doc.is_string();
  if (type == "integer") return doc.is_number_integer();
  if (type == "number") return doc.is_number();
  if (type == "boolean") return doc.is_boolean();
  if (type == "null") return doc.is_null();
  return false;
}

bool validate(const json& schema, const json& doc, const std::string& path) {
  if (schema.contains("type") && !type_matches(doc, schema.at("type"))) {
    std::cerr << path << ": expected type " << schema.at("type") << "\n";
    return false;
  }
  if (schema.contains("enum")) {
    bool found = false;
    for (const auto& v : schema.at("enum")) found = found || v == doc;
    if (!found) {
      std::cerr << path << ": value not in enum\n";
      return false;
    }
  }
  if (schema.contains("required")) {
    for (const auto& key : schema.at("required")) {
      if (!doc.contains(std::string(key))) {
        std::cerr << path << ": missing required key " << key << "\n";
        return false;
      }
    }
  }
  if (schema.contains("properties") && doc.is_object()) {
    for (const auto& [key, sub] : schema.at("properties").items()) {
      if (doc.contains(key)) {
        if (!validate(sub, doc.at(key), path + "/" + key)) return false;
      }
    }
  }
  if (schema.contains("items") && doc.is_array()) {
    for (size_t i = 0; i < doc.size(); ++i) {
      if (!validate(schema.at("items"), doc.at(i), path + "[" + std::to_string(i) + "]")) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: schema_check <schema.json> <document.json>\n";
    return 2;
  }
  json schema, doc;
  {
    std::ifstream in(argv[1]);
    if (!in) {
      std::cerr << "cannot open " << argv[1] << "\n";
      return 2;
    }
    in >> schema;
  }
  {
    std::ifstream in(argv[2]);
    if (!in) {
      std::cerr << "cannot open " << argv[2] << "\n";
      return 2;
    }
    in >> doc;
  }
  if (!validate(schema, doc, "$")) return 1;
  std::cout << "document validates against schema\n";
  return 0;
}
