#pragma once

#include <gspline/core/spline.hpp>
#include <gspline/graph/labeled_graph.hpp>
#include <gspline/ring/integer.hpp>

#include <optional>
#include <span>
#include <vector>

namespace gspline {

/// Column Hermite normal form: form == input * transform with transform
/// unimodular. The nonzero columns of `form` come first; column k has its
/// first nonzero entry (positive) at pivot_rows[k], pivot rows increase,
/// and entries left of a pivot lie in [0, pivot).
struct HermiteForm {
  Matrix<Integer> form;
  Matrix<Integer> transform;
  std::vector<Eigen::Index> pivot_rows;

  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivot_rows.size()); }
};

HermiteForm column_hermite_form(const Matrix<Integer>& input);

/// Columns form a basis of the integer kernel {x : a x = 0}.
Matrix<Integer> integer_kernel(const Matrix<Integer>& a);

/// Flow-up basis of the integer spline module, computed from the lattice of
/// solutions to the edge congruences. Spline k vanishes on v_1..v_{k-1}
/// and has the positive value L_k at v_k. Throws consistency_error if that
/// diagonal disagrees with the trail-based flow-up moduli, and
/// disconnected_graph_error on disconnected graphs.
std::vector<Spline<Integer>> flowup_basis(const LabeledGraph<Integer>& g);

/// Integer coefficients c with sum_k c_k * basis_k == f, or nullopt when f
/// is outside the span. Throws precondition_error for a singular basis.
std::optional<Vector<Integer>> membership(const LabeledGraph<Integer>& g, std::span<const Spline<Integer>> basis,
                                          const Spline<Integer>& f);

}  // namespace gspline
