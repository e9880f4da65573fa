#pragma once

#include <gspline/error.hpp>
#include <gspline/ring/ring.hpp>

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gspline {

/// Undirected edge between two distinct vertices, labelled by a nonzero
/// generator of its edge ideal.
template <GcdDomain R>
struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  R label;

  std::size_t other(std::size_t w) const { return w == u ? v : u; }
  bool touches(std::size_t w) const { return u == w || v == w; }
};

/// Simple edge-labelled graph on the ordered vertex set v_1..v_n
/// (0-based indices here). Edge indices follow insertion order and fix
/// every enumeration order downstream.
template <GcdDomain R>
class LabeledGraph {
 public:
  explicit LabeledGraph(std::size_t vertex_count) : LabeledGraph(default_names(vertex_count)) {}

  explicit LabeledGraph(std::vector<std::string> names)
      : names_(std::move(names)), incidence_(names_.size()) {
    if (names_.empty()) throw input_error("a graph needs at least one vertex");
  }

  std::size_t add_edge(std::size_t u, std::size_t v, R label) {
    const std::size_t n = vertex_count();
    if (u >= n || v >= n) throw input_error("edge endpoint out of range");
    if (u == v) throw input_error("self-loop at vertex " + names_[u] + " is not allowed");
    if (label.is_zero()) throw input_error("edge " + names_[u] + names_[v] + " has a zero label");
    if (find_edge(u, v)) throw input_error("duplicate edge " + names_[u] + names_[v]);
    edges_.push_back({u, v, std::move(label)});
    const std::size_t k = edges_.size() - 1;
    incidence_[u].push_back(k);
    incidence_[v].push_back(k);
    return k;
  }

  std::size_t vertex_count() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge<R>>& edges() const { return edges_; }
  const Edge<R>& edge(std::size_t k) const { return edges_.at(k); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t v) const { return names_.at(v); }

  /// Edge indices at v, ascending.
  std::span<const std::size_t> incident(std::size_t v) const { return incidence_.at(v); }

  std::optional<std::size_t> find_edge(std::size_t u, std::size_t v) const {
    for (std::size_t k : incidence_.at(u))
      if (edges_[k].other(u) == v) return k;
    return std::nullopt;
  }

  bool is_complete() const {
    const std::size_t n = vertex_count();
    return edges_.size() == n * (n - 1) / 2;
  }

  friend bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
    if (a.names_ != b.names_ || a.edges_.size() != b.edges_.size()) return false;
    for (std::size_t k = 0; k < a.edges_.size(); ++k) {
      const auto& e = a.edges_[k];
      const auto& f = b.edges_[k];
      if (e.label != f.label || std::minmax(e.u, e.v) != std::minmax(f.u, f.v)) return false;
    }
    return true;
  }

 private:
  static std::vector<std::string> default_names(std::size_t n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t k = 0; k < n; ++k) names.push_back("v" + std::to_string(k + 1));
    return names;
  }

  std::vector<std::string> names_;
  std::vector<Edge<R>> edges_;
  std::vector<std::vector<std::size_t>> incidence_;
};

/// Complete graph on the same ordered vertices: existing edges keep their
/// index and label, missing pairs are appended in (u, v) lexicographic
/// order with the unit label.
template <GcdDomain R>
LabeledGraph<R> completion(const LabeledGraph<R>& g) {
  LabeledGraph<R> k(g.names());
  for (const auto& e : g.edges()) k.add_edge(e.u, e.v, e.label);
  for (std::size_t u = 0; u < g.vertex_count(); ++u)
    for (std::size_t v = u + 1; v < g.vertex_count(); ++v)
      if (!k.find_edge(u, v)) k.add_edge(u, v, R(1));
  return k;
}

/// Reorders vertices: vertex `old` of g becomes vertex `perm[old]` of the
/// result. Edge order and labels are preserved.
template <GcdDomain R>
LabeledGraph<R> permute_vertices(const LabeledGraph<R>& g, std::span<const std::size_t> perm) {
  const std::size_t n = g.vertex_count();
  if (perm.size() != n) throw precondition_error("permutation has the wrong length");
  std::vector<bool> seen(n, false);
  for (std::size_t p : perm) {
    if (p >= n || seen[p]) throw precondition_error("not a permutation of the vertex set");
    seen[p] = true;
  }
  std::vector<std::string> names(n);
  for (std::size_t v = 0; v < n; ++v) names[perm[v]] = g.name(v);
  LabeledGraph<R> out(std::move(names));
  for (const auto& e : g.edges()) out.add_edge(perm[e.u], perm[e.v], e.label);
  return out;
}

/// True iff every vertex can reach every other.
template <GcdDomain R>
bool is_connected(const LabeledGraph<R>& g) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t k : g.incident(v)) {
      const std::size_t w = g.edge(k).other(v);
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == g.vertex_count();
}

}  // namespace gspline
