#include <gspline/basis/lattice.hpp>

#include <gspline/core/invariants.hpp>
#include <gspline/error.hpp>

#include <string>

namespace gspline {

namespace {

// (P, C) <- (s*P + t*C, u*P + v*C) on the given columns of both matrices.
void mix_columns(Matrix<Integer>& m, Eigen::Index p, Eigen::Index c, const Integer& s, const Integer& t,
                 const Integer& u, const Integer& v) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    const Integer a = m(r, p);
    const Integer b = m(r, c);
    m(r, p) = s * a + t * b;
    m(r, c) = u * a + v * b;
  }
}

// C <- C - q*P
void subtract_column(Matrix<Integer>& m, Eigen::Index c, Eigen::Index p, const Integer& q) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) m(r, c) -= q * m(r, p);
}

void negate_column(Matrix<Integer>& m, Eigen::Index c) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) m(r, c) = -m(r, c);
}

}  // namespace

HermiteForm column_hermite_form(const Matrix<Integer>& input) {
  HermiteForm h;
  h.form = input;
  h.transform = Matrix<Integer>::Identity(input.cols(), input.cols());
  Matrix<Integer>& m = h.form;
  Matrix<Integer>& u = h.transform;
  Eigen::Index pivot = 0;
  for (Eigen::Index r = 0; r < m.rows() && pivot < m.cols(); ++r) {
    for (Eigen::Index c = pivot + 1; c < m.cols(); ++c) {
      if (m(r, c).is_zero()) continue;
      const Integer a = m(r, pivot);
      const Integer b = m(r, c);
      const ExtendedGcd x = extended_gcd(a, b);
      const Integer bg = exact_div(b, x.g);
      const Integer ag = exact_div(a, x.g);
      mix_columns(m, pivot, c, x.s, x.t, -bg, ag);
      mix_columns(u, pivot, c, x.s, x.t, -bg, ag);
    }
    if (m(r, pivot).is_zero()) continue;
    if (m(r, pivot).sign() < 0) {
      negate_column(m, pivot);
      negate_column(u, pivot);
    }
    for (Eigen::Index c = 0; c < pivot; ++c) {
      const Integer q = floor_div(m(r, c), m(r, pivot));
      if (q.is_zero()) continue;
      subtract_column(m, c, pivot, q);
      subtract_column(u, c, pivot, q);
    }
    h.pivot_rows.push_back(r);
    ++pivot;
  }
  return h;
}

Matrix<Integer> integer_kernel(const Matrix<Integer>& a) {
  const HermiteForm h = column_hermite_form(a);
  return h.transform.rightCols(a.cols() - h.rank());
}

std::vector<Spline<Integer>> flowup_basis(const LabeledGraph<Integer>& g) {
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  const auto m = static_cast<Eigen::Index>(g.edge_count());
  const std::vector<Integer> moduli = flowup_moduli(g);

  // Splines are the F-parts of integer solutions of F(u) - F(v) - l_uv * k_uv = 0.
  Matrix<Integer> system = Matrix<Integer>::Zero(m, n + m);
  for (Eigen::Index e = 0; e < m; ++e) {
    const auto& edge = g.edge(static_cast<std::size_t>(e));
    system(e, Eigen::Index(edge.u)) = Integer(1);
    system(e, Eigen::Index(edge.v)) = Integer(-1);
    system(e, n + e) = -edge.label;
  }
  const Matrix<Integer> kernel = integer_kernel(system);
  if (kernel.cols() != n)
    throw consistency_error("spline lattice has rank " + std::to_string(kernel.cols()) + ", expected " +
                            std::to_string(n));
  const HermiteForm echelon = column_hermite_form(kernel.topRows(n));

  std::vector<Spline<Integer>> basis;
  basis.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index k = 0; k < n; ++k) {
    if (echelon.rank() != n || echelon.pivot_rows[static_cast<std::size_t>(k)] != k)
      throw consistency_error("spline lattice is not full rank");
    if (echelon.form(k, k) != moduli[static_cast<std::size_t>(k)])
      throw consistency_error("flow-up at " + g.name(static_cast<std::size_t>(k)) + " has leading value " +
                              echelon.form(k, k).str() + " but the trail modulus is " +
                              moduli[static_cast<std::size_t>(k)].str());
    basis.emplace_back(echelon.form.col(k));
  }
  return basis;
}

std::optional<Vector<Integer>> membership(const LabeledGraph<Integer>& g, std::span<const Spline<Integer>> basis,
                                          const Spline<Integer>& f) {
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  if (static_cast<Eigen::Index>(basis.size()) != n || f.size() != n)
    throw precondition_error("membership needs n basis splines and a length-n vector");
  Matrix<Integer> b(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    if (basis[static_cast<std::size_t>(k)].size() != n) throw precondition_error("basis spline has the wrong length");
    b.col(k) = basis[static_cast<std::size_t>(k)];
  }
  const HermiteForm h = column_hermite_form(b);
  if (h.rank() != n) throw precondition_error("membership needs an independent basis");

  // Full rank and square: the form is lower triangular with a positive diagonal.
  Vector<Integer> y(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    Integer rest = f(k);
    for (Eigen::Index c = 0; c < k; ++c) rest -= h.form(k, c) * y(c);
    if (!divides(h.form(k, k), rest)) return std::nullopt;
    y(k) = exact_div(rest, h.form(k, k));
  }
  Vector<Integer> coefficients(n);
  for (Eigen::Index r = 0; r < n; ++r) {
    Integer acc(0);
    for (Eigen::Index c = 0; c < n; ++c) acc += h.transform(r, c) * y(c);
    coefficients(r) = acc;
  }
  return coefficients;
}

}  // namespace gspline
