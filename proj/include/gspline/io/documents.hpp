#pragma once

#include <gspline/core/spline.hpp>
#include <gspline/error.hpp>
#include <gspline/graph/labeled_graph.hpp>
#include <gspline/ring/ring.hpp>

#include <json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace gspline::io {

using json = nlohmann::ordered_json;

/// Graph document as read from disk, before labels are parsed:
///   {"domain": "int" | "intpoly",
///    "vertices": ["v1", ...],
///    "edges": [{"u": "v1", "v": "v2", "label": "5"}, ...]}
struct GraphDocument {
  struct EdgeEntry {
    std::string u;
    std::string v;
    std::string label;
  };
  std::string domain;
  std::vector<std::string> vertices;
  std::vector<EdgeEntry> edges;
};

json read_json_file(const std::filesystem::path& path);

GraphDocument parse_graph_document(const json& doc);

template <GcdDomain R>
LabeledGraph<R> build_graph(const GraphDocument& doc) {
  if (doc.domain != domain_traits<R>::name)
    throw input_error("document domain '" + doc.domain + "' does not match '" +
                      std::string(domain_traits<R>::name) + "'");
  LabeledGraph<R> g(doc.vertices);
  auto index_of = [&](const std::string& name) {
    for (std::size_t k = 0; k < doc.vertices.size(); ++k)
      if (doc.vertices[k] == name) return k;
    throw input_error("edge refers to unknown vertex '" + name + "'");
  };
  for (const auto& e : doc.edges) g.add_edge(index_of(e.u), index_of(e.v), R::parse(e.label));
  return g;
}

template <GcdDomain R>
LabeledGraph<R> load_graph(const json& doc) {
  return build_graph<R>(parse_graph_document(doc));
}

json graph_to_json(const GraphDocument& doc);

template <GcdDomain R>
GraphDocument graph_document(const LabeledGraph<R>& g) {
  GraphDocument doc;
  doc.domain = std::string(domain_traits<R>::name);
  doc.vertices = g.names();
  for (const auto& e : g.edges()) doc.edges.push_back({g.name(e.u), g.name(e.v), e.label.str()});
  return doc;
}

/// {"values": ["2", "32", ...]} in vertex order.
std::vector<std::string> parse_spline_values(const json& doc);

template <GcdDomain R>
Spline<R> load_spline(const json& doc) {
  const auto values = parse_spline_values(doc);
  Spline<R> f(static_cast<Eigen::Index>(values.size()));
  for (std::size_t k = 0; k < values.size(); ++k) f(static_cast<Eigen::Index>(k)) = R::parse(values[k]);
  return f;
}

template <class Derived>
json values_to_json(const Eigen::MatrixBase<Derived>& f) {
  json values = json::array();
  for (Eigen::Index k = 0; k < f.size(); ++k) values.push_back(f(k).str());
  return values;
}

template <class Derived>
json spline_to_json(const Eigen::MatrixBase<Derived>& f) {
  return json{{"values", values_to_json(f)}};
}

}  // namespace gspline::io
