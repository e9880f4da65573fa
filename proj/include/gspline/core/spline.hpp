#pragma once

#include <gspline/error.hpp>
#include <gspline/graph/labeled_graph.hpp>

#include <Eigen/Core>

#include <cstddef>
#include <optional>

namespace gspline {

/// A spline is a vertex labelling F with label(uv) | F(u) - F(v) on every edge.
template <class R>
using Spline = Vector<R>;

/// Index of the first edge whose condition fails, or nullopt if f is a spline.
template <class Derived>
std::optional<std::size_t> first_violation(const LabeledGraph<typename Derived::Scalar>& g,
                                           const Eigen::MatrixBase<Derived>& f) {
  if (static_cast<std::size_t>(f.size()) != g.vertex_count())
    throw precondition_error("spline has " + std::to_string(f.size()) + " values for " +
                             std::to_string(g.vertex_count()) + " vertices");
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    const auto& e = g.edge(k);
    if (!divides(e.label, f(Eigen::Index(e.u)) - f(Eigen::Index(e.v)))) return k;
  }
  return std::nullopt;
}

template <class Derived>
bool is_spline(const LabeledGraph<typename Derived::Scalar>& g, const Eigen::MatrixBase<Derived>& f) {
  return !first_violation(g, f).has_value();
}

/// Number of zero entries.
template <class Derived>
std::size_t zero_count(const Eigen::MatrixBase<Derived>& f) {
  std::size_t z = 0;
  for (Eigen::Index k = 0; k < f.size(); ++k) z += f(k).is_zero() ? 1 : 0;
  return z;
}

template <class R>
Spline<R> make_spline(std::initializer_list<R> values) {
  Spline<R> f(static_cast<Eigen::Index>(values.size()));
  Eigen::Index k = 0;
  for (const auto& v : values) f(k++) = v;
  return f;
}

}  // namespace gspline
