#pragma once

#include <gspline/basis/determinant.hpp>
#include <gspline/core/invariants.hpp>
#include <gspline/core/spline.hpp>
#include <gspline/error.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <string>

namespace gspline {

/// Column k is candidate k; row r holds the values at vertex v_{n-r}, so the
/// first row belongs to the last vertex.
template <class R>
Matrix<R> spline_matrix(std::span<const Spline<R>> splines) {
  const auto cols = static_cast<Eigen::Index>(splines.size());
  const Eigen::Index n = cols == 0 ? 0 : splines.front().size();
  Matrix<R> m(n, cols);
  for (Eigen::Index k = 0; k < cols; ++k) {
    if (splines[k].size() != n) throw precondition_error("spline lengths differ");
    m.col(k) = splines[k].reverse();
  }
  return m;
}

/// Candidate k of a spline matrix, back in vertex order.
template <class R>
Spline<R> spline_column(const Matrix<R>& m, Eigen::Index k) {
  return m.col(k).reverse();
}

namespace detail {

template <GcdDomain R>
void require_candidates(const LabeledGraph<R>& g, const Matrix<R>& m) {
  if (static_cast<std::size_t>(m.rows()) != g.vertex_count())
    throw precondition_error("spline matrix has " + std::to_string(m.rows()) + " rows for " +
                             std::to_string(g.vertex_count()) + " vertices");
  for (Eigen::Index k = 0; k < m.cols(); ++k) {
    const Spline<R> f = spline_column(m, k);
    if (const auto bad = first_violation(g, f)) {
      const auto& e = g.edge(*bad);
      throw precondition_error("candidate " + std::to_string(k + 1) + " is not a spline: edge " + g.name(e.u) +
                               g.name(e.v) + " with label " + e.label.str() + " does not divide " +
                               (f(Eigen::Index(e.u)) - f(Eigen::Index(e.v))).str());
    }
  }
}

}  // namespace detail

/// det(m) / Q_G. The division is always exact for spline columns; an
/// inexact one raises consistency_error.
template <GcdDomain R>
R check_q_divides(const LabeledGraph<R>& g, const Matrix<R>& m) {
  if (m.rows() != m.cols()) throw precondition_error("spline matrix must be square");
  detail::require_candidates(g, m);
  const R det = determinant(m);
  const R q = critical_determinant(g);
  if (!divides(q, det))
    throw consistency_error("Q_G = " + q.str() + " does not divide the determinant " + det.str());
  return exact_div(det, q);
}

template <GcdDomain R>
struct BasisVerdict {
  R determinant;
  R q;
  std::optional<R> quotient;  // determinant / q when q divides it
  bool is_basis = false;      // quotient exists and is a unit
};

/// Decides whether n splines form a module basis: the spline-matrix
/// determinant must be a unit multiple of Q_G.
template <GcdDomain R>
BasisVerdict<R> check_basis(const LabeledGraph<R>& g, std::span<const Spline<R>> candidates) {
  if (candidates.size() != g.vertex_count())
    throw precondition_error("expected " + std::to_string(g.vertex_count()) + " candidate splines, got " +
                             std::to_string(candidates.size()));
  const Matrix<R> m = spline_matrix(candidates);
  detail::require_candidates(g, m);
  BasisVerdict<R> v;
  v.determinant = determinant(m);
  v.q = critical_determinant(g);
  if (v.determinant.is_zero()) {
    v.quotient = R(0);
    return v;
  }
  if (divides(v.q, v.determinant)) {
    v.quotient = exact_div(v.determinant, v.q);
    v.is_basis = is_unit(*v.quotient);
  }
  return v;
}

}  // namespace gspline
