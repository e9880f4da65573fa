#pragma once

#include <gspline/core/invariants.hpp>
#include <gspline/core/selection.hpp>
#include <gspline/core/spline.hpp>
#include <gspline/error.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace gspline {

namespace detail {

template <GcdDomain R>
void require_spline(const LabeledGraph<R>& g, const Spline<R>& f, const char* what) {
  if (const auto bad = first_violation(g, f)) {
    const auto& e = g.edge(*bad);
    throw consistency_error(std::string(what) + " produced a non-spline: edge " + g.name(e.u) + g.name(e.v) +
                            " (label " + e.label.str() + ") fails");
  }
}

}  // namespace detail

/// The spline that is the selection value at v_i and zero elsewhere.
/// Requires every edge from v_i to a later vertex to be chosen by `a`;
/// edges to earlier vertices are zero edges and always compatible.
template <GcdDomain R>
Spline<R> incident_spline(const LabeledGraph<R>& g, const Selection<R>& a) {
  const std::size_t i = a.vertex;
  if (i >= g.vertex_count()) throw precondition_error("selection vertex out of range");
  for (std::size_t k : g.incident(i)) {
    const std::size_t s = g.edge(k).other(i);
    if (s > i && !a.uses_edge(k))
      throw precondition_error("edge " + g.name(i) + g.name(s) + " to a later vertex is not in the selection");
  }
  Spline<R> f = Spline<R>::Constant(Eigen::Index(g.vertex_count()), R(0));
  f(Eigen::Index(i)) = a.value();
  detail::require_spline(g, f, "incident_spline");
  return f;
}

/// Runs the three labelling steps on a complete graph without checking
/// that `a` is minimal:
///   1. v_i gets the selection value x;
///   2. every later v_k whose edge to v_i is not selected gets x;
///   3. every later v_s whose edge to v_i is selected gets 0 if its edges
///      to all vertices of step 2 are selected, and x otherwise.
/// Earlier vertices get 0. The result is verified before it is returned.
template <GcdDomain R>
Spline<R> construction_steps(const LabeledGraph<R>& k, const Selection<R>& a) {
  const std::size_t n = k.vertex_count();
  const std::size_t i = a.vertex;
  if (!k.is_complete()) throw precondition_error("the construction needs a complete graph");
  if (i == 0 || i + 1 >= n) throw precondition_error("the construction applies to v_2..v_{n-1} only");
  const R x = a.value();
  auto selected = [&](std::size_t u, std::size_t v) { return a.uses_edge(*k.find_edge(u, v)); };

  std::vector<std::size_t> unselected_neighbours;
  for (std::size_t s = i + 1; s < n; ++s)
    if (!selected(i, s)) unselected_neighbours.push_back(s);

  Spline<R> f = Spline<R>::Constant(Eigen::Index(n), R(0));
  f(Eigen::Index(i)) = x;
  for (std::size_t s : unselected_neighbours) f(Eigen::Index(s)) = x;
  for (std::size_t s = i + 1; s < n; ++s) {
    if (!selected(i, s)) continue;
    bool all_selected = true;
    for (std::size_t t : unselected_neighbours) all_selected = all_selected && selected(s, t);
    f(Eigen::Index(s)) = all_selected ? R(0) : x;
  }
  detail::require_spline(k, f, "construction");
  return f;
}

/// Spline for a minimal selection on a complete graph, taking values in
/// {0, x} with x the selection value and at least i+1 zeros (0-based i).
template <GcdDomain R>
Spline<R> selection_spline(const LabeledGraph<R>& k, const FactorSets<R>& d, const Selection<R>& a) {
  if (d.vertex != a.vertex) throw precondition_error("selection and factor sets belong to different vertices");
  if (!is_minimal(d, a)) throw precondition_error("the construction needs a minimal selection");
  return construction_steps(k, a);
}

template <GcdDomain R>
Spline<R> selection_spline(const LabeledGraph<R>& k, const Selection<R>& a, std::size_t cap = default_trail_cap) {
  if (!k.is_complete()) throw precondition_error("the construction needs a complete graph");
  return selection_spline(k, factor_sets(k, a.vertex, cap), a);
}

/// Carries a {0, x} spline of selection `a` over to a larger selection
/// `a_star`: x becomes the value of a_star, zeros stay zero.
template <GcdDomain R>
Spline<R> induced_spline(const LabeledGraph<R>& g, const Spline<R>& f, const Selection<R>& a,
                         const Selection<R>& a_star) {
  if (a.vertex != a_star.vertex) throw precondition_error("selections belong to different vertices");
  if (!std::includes(a_star.edges.begin(), a_star.edges.end(), a.edges.begin(), a.edges.end()))
    throw precondition_error("the smaller selection's edges are not contained in the larger one");
  const R x = a.value();
  const R y = a_star.value();
  Spline<R> out(f.size());
  for (Eigen::Index v = 0; v < f.size(); ++v) {
    if (f(v).is_zero())
      out(v) = R(0);
    else if (f(v) == x)
      out(v) = y;
    else
      throw precondition_error("spline value " + f(v).str() + " is neither 0 nor the selection value " + x.str());
  }
  detail::require_spline(g, out, "induced_spline");
  return out;
}

/// (0, ..., 0, L_n) where L_n is the flow-up modulus of the last vertex.
template <GcdDomain R>
Spline<R> top_spline(const LabeledGraph<R>& g, std::size_t cap = default_trail_cap) {
  const std::size_t n = g.vertex_count();
  Spline<R> f = Spline<R>::Constant(Eigen::Index(n), R(0));
  f(Eigen::Index(n - 1)) = flowup_modulus(g, n - 1, cap);
  detail::require_spline(g, f, "top_spline");
  return f;
}

}  // namespace gspline
