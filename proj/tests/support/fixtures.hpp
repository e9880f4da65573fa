#pragma once

#include <gspline/gspline.hpp>

#include <vector>

namespace fixtures {

using gspline::Integer;
using gspline::LabeledGraph;
using gspline::Polynomial;
using gspline::Spline;

/// Diamond: v1v2:5, v1v3:4, v1v4:6, v2v3:2, v2v4:9 (edges 0..4 in that order).
inline LabeledGraph<Integer> diamond() {
  LabeledGraph<Integer> g(4);
  g.add_edge(0, 1, 5);
  g.add_edge(0, 2, 4);
  g.add_edge(0, 3, 6);
  g.add_edge(1, 2, 2);
  g.add_edge(1, 3, 9);
  return g;
}

/// The four published flow-up classes of the diamond.
inline std::vector<Spline<Integer>> diamond_published_flowups() {
  using gspline::make_spline;
  return {make_spline<Integer>({1, 1, 1, 1}), make_spline<Integer>({0, 30, 0, 48}),
          make_spline<Integer>({0, 0, 8, 0}), make_spline<Integer>({0, 0, 0, 36})};
}

/// Labelled K4 with edge k carrying l_{k+1}:
///   l1 v1v2, l2 v2v3, l3 v1v3, l4 v1v4, l5 v2v4, l6 v3v4.
inline const std::vector<long> k4_labels{11, 6, 10, 15, 21, 35};

inline LabeledGraph<Integer> k4() {
  LabeledGraph<Integer> g(4);
  g.add_edge(0, 1, k4_labels[0]);
  g.add_edge(1, 2, k4_labels[1]);
  g.add_edge(0, 2, k4_labels[2]);
  g.add_edge(0, 3, k4_labels[3]);
  g.add_edge(1, 3, k4_labels[4]);
  g.add_edge(2, 3, k4_labels[5]);
  return g;
}

/// Labelled K5 with edge k carrying l_{k+1}:
///   l1 v1v2, l2 v2v3, l3 v1v3, l4 v1v4, l5 v2v4,
///   l6 v3v4, l7 v1v5, l8 v2v5, l9 v3v5, l10 v4v5.
inline const std::vector<long> k5_labels{12, 18, 20, 30, 42, 15, 28, 45, 63, 70};

inline LabeledGraph<Integer> k5() {
  LabeledGraph<Integer> g(5);
  const std::size_t ends[10][2] = {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 3}, {2, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}};
  for (std::size_t k = 0; k < 10; ++k) g.add_edge(ends[k][0], ends[k][1], k5_labels[k]);
  return g;
}

/// Edge index of label l_j (1-based j) in k4()/k5().
constexpr std::size_t l(std::size_t j) { return j - 1; }

/// 3-cycle over Z[x]: v1v2: x, v2v3: x+1, v1v3: x(x+1).
inline LabeledGraph<Polynomial> poly_triangle() {
  LabeledGraph<Polynomial> g(3);
  g.add_edge(0, 1, Polynomial::parse("x"));
  g.add_edge(1, 2, Polynomial::parse("x+1"));
  g.add_edge(0, 2, Polynomial::parse("x*(x+1)"));
  return g;
}

}  // namespace fixtures
