#pragma once

#include <gspline/error.hpp>
#include <gspline/graph/trail.hpp>

#include <cstddef>
#include <vector>

namespace gspline {

/// lcm over the zero trails of v_i of each trail's label gcd; 1 for the
/// first vertex. Over a PID this is the smallest value a flow-up class
/// can take at v_i.
///
/// Throws disconnected_graph_error if v_i has no zero trail.
template <GcdDomain R>
R flowup_modulus(const LabeledGraph<R>& g, std::size_t i, std::size_t cap = default_trail_cap) {
  if (i >= g.vertex_count()) throw precondition_error("vertex out of range");
  if (i == 0) return R(1);
  const auto trails = zero_trails(g, i, cap);
  if (trails.empty())
    throw disconnected_graph_error("vertex " + g.name(i) + " has no trail to an earlier vertex; the graph must be connected");
  R acc(1);
  for (const auto& t : trails) acc = lcm(acc, t.gcd);
  return canonical_associate(acc);
}

template <GcdDomain R>
std::vector<R> flowup_moduli(const LabeledGraph<R>& g, std::size_t cap = default_trail_cap) {
  std::vector<R> out;
  out.reserve(g.vertex_count());
  for (std::size_t i = 0; i < g.vertex_count(); ++i) out.push_back(flowup_modulus(g, i, cap));
  return out;
}

/// Product of all flow-up moduli. A set of n splines is a module basis
/// exactly when its spline-matrix determinant is a unit times this value.
template <GcdDomain R>
R critical_determinant(const LabeledGraph<R>& g, std::size_t cap = default_trail_cap) {
  R q(1);
  for (const auto& m : flowup_moduli(g, cap)) q = q * m;
  return canonical_associate(q);
}

}  // namespace gspline
