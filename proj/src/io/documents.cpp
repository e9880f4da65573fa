#include <gspline/io/documents.hpp>

#include <fstream>

namespace gspline::io {

namespace {

const json& member(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw input_error(std::string("document is missing '") + key + "'");
  return doc.at(key);
}

std::string string_field(const json& doc, const char* key) {
  const json& v = member(doc, key);
  if (!v.is_string()) throw input_error(std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

// Labels and values are strings in the ring encoding; plain JSON integers
// are accepted too.
std::string ring_text(const json& v, const char* what) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return v.dump();
  throw input_error(std::string(what) + " must be a string");
}

}  // namespace

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw input_error("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

GraphDocument parse_graph_document(const json& doc) {
  GraphDocument out;
  out.domain = string_field(doc, "domain");
  if (out.domain != "int" && out.domain != "intpoly")
    throw input_error("unknown domain '" + out.domain + "' (expected \"int\" or \"intpoly\")");
  const json& vertices = member(doc, "vertices");
  if (!vertices.is_array() || vertices.empty()) throw input_error("'vertices' must be a non-empty array");
  for (const auto& v : vertices) {
    if (!v.is_string()) throw input_error("vertex names must be strings");
    const auto name = v.get<std::string>();
    for (const auto& seen : out.vertices)
      if (seen == name) throw input_error("duplicate vertex '" + name + "'");
    out.vertices.push_back(name);
  }
  const json& edges = member(doc, "edges");
  if (!edges.is_array()) throw input_error("'edges' must be an array");
  for (const auto& e : edges) {
    out.edges.push_back({string_field(e, "u"), string_field(e, "v"), ring_text(member(e, "label"), "label")});
  }
  return out;
}

json graph_to_json(const GraphDocument& doc) {
  json edges = json::array();
  for (const auto& e : doc.edges) edges.push_back({{"u", e.u}, {"v", e.v}, {"label", e.label}});
  return json{{"domain", doc.domain}, {"vertices", doc.vertices}, {"edges", edges}};
}

std::vector<std::string> parse_spline_values(const json& doc) {
  const json& values = member(doc, "values");
  if (!values.is_array()) throw input_error("'values' must be an array");
  std::vector<std::string> out;
  for (const auto& v : values) out.push_back(ring_text(v, "spline value"));
  return out;
}

}  // namespace gspline::io
