#pragma once

// Helpers and independent oracles shared by the unit and acceptance suites.
// Nothing here calls the closed-form routines it is used to check.

#include <cmath>
#include <initializer_list>
#include <vector>

#include "sesq/sesq.hpp"

namespace sesq::testing {

inline Matrix mat(std::initializer_list<std::initializer_list<Complex>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = static_cast<Index>(rows.begin()->size());
  Matrix m(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (const Complex& v : row) {
      m(i, j++) = v;
    }
    ++i;
  }
  return m;
}

inline Matrix diag(std::initializer_list<double> d) {
  Matrix m = Matrix::Zero(static_cast<Index>(d.size()), static_cast<Index>(d.size()));
  Index i = 0;
  for (double v : d) {
    m(i, i) = v;
    ++i;
  }
  return m;
}

inline Vector vec(std::initializer_list<Complex> v) {
  Vector x(static_cast<Index>(v.size()));
  Index i = 0;
  for (const Complex& z : v) {
    x(i++) = z;
  }
  return x;
}

inline Vector basis_vector(Index n, Index i) {
  Vector e = Vector::Zero(n);
  e(i) = 1.0;
  return e;
}

inline Form form(const Matrix& m) { return Form::from_matrix(m); }

inline double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

/// Short of t to span(m) by the normal-equation route
/// T - T M (M^H T M)^+ M^H T, with the pseudo-inverse applied through a
/// complete orthogonal decomposition rather than an eigendecomposition.
inline Matrix short_oracle(const Matrix& t, const Matrix& m) {
  if (m.cols() == 0) {
    return t;
  }
  const Matrix tm = t * m;
  const Matrix inner = m.adjoint() * tm;
  Eigen::CompleteOrthogonalDecomposition<Matrix> cod(inner);
  cod.setThreshold(1e-11);
  return t - tm * cod.solve(tm.adjoint());
}

/// inf_{y in span(m)} t[x - y] from the normal equations in the
/// coefficients of y.
inline double short_value_oracle(const Matrix& t, const Matrix& m, const Vector& x) {
  if (m.cols() == 0) {
    return x.dot(t * x).real();
  }
  const Matrix inner = m.adjoint() * t * m;
  Eigen::CompleteOrthogonalDecomposition<Matrix> cod(inner);
  cod.setThreshold(1e-11);
  const Vector c = cod.solve(m.adjoint() * (t * x));
  const Vector r = x - m * c;
  return r.dot(t * r).real();
}

/// Sampling check of t <= w on random directions; a necessary condition
/// used to cross-check the eigenvalue-based leq.
inline bool leq_sampled(const Form& t, const Form& w, Rng& rng, int samples, double tol) {
  for (int i = 0; i < samples; ++i) {
    const Vector x = random_vector(rng, t.dim());
    if (t.quadratic(x) > w.quadratic(x) + tol * (1.0 + x.squaredNorm())) {
      return false;
    }
  }
  return true;
}

}  // namespace sesq::testing

namespace sesq::testing {

/// D_w t through the square-root identity
/// t_{ker w} = T^1/2 (I - P) T^1/2, P the projection onto T^1/2 ker W.
inline Matrix ac_part_sqrt_oracle(const Form& t, const Form& w) {
  const Matrix root = sqrt_psd(t.psd()).matrix();
  const Subspace ker_w = kernel_subspace(w.psd());
  const Subspace image = Subspace::span_of(root * ker_w.basis(), t.dim(), {}, std::sqrt(t.norm()));
  const Matrix eye = Matrix::Identity(t.dim(), t.dim());
  return root * (eye - image.projection()) * root;
}

/// Random s <= t with ker W ⊆ ker S: T^1/2 P K P T^1/2 where P projects
/// onto (T^1/2 ker W)^⊥ and 0 <= K <= I. When `tight`, K has eigenvalues
/// close to 1 so that s nearly reaches D_w t.
inline Form random_ac_lower_bound(Rng& rng, const Form& t, const Form& w, bool tight) {
  const Index n = t.dim();
  const Matrix root = sqrt_psd(t.psd()).matrix();
  const Subspace image =
      Subspace::span_of(root * kernel_subspace(w.psd()).basis(), n, {}, std::sqrt(t.norm()));
  const Matrix p = Matrix::Identity(n, n) - image.projection();
  std::uniform_real_distribution<double> unit(tight ? 0.95 : 0.0, 1.0);
  RealVector k(n);
  for (Index i = 0; i < n; ++i) {
    k(i) = unit(rng);
  }
  const Matrix u = random_unitary(rng, n);
  const Matrix contraction = u * k.cast<Complex>().asDiagonal() * u.adjoint();
  return Form(HermitianPsd::clamped(root * p * contraction * p * root));
}

}  // namespace sesq::testing

namespace sesq::testing {

/// Bounded search for d != 0 with u - d >= 0 and u + d <= t, trying
/// d = eps v v^H for v among eigenvectors of u and of t - u (and their
/// pairwise sums), eps = 1e-3 lambda_max(t). Any hit proves that u is not an
/// extreme point of [0, t]; a miss proves nothing.
inline bool eigen_direction_witness(const Form& u, const Form& t) {
  const double eps = 1e-3 * t.norm();
  const Form rest = subtract(t, u);
  const Matrix vu = range_subspace(u.psd()).basis();
  const Matrix vr = range_subspace(rest.psd()).basis();
  std::vector<Vector> candidates;
  for (Index i = 0; i < vu.cols(); ++i) candidates.push_back(vu.col(i));
  for (Index j = 0; j < vr.cols(); ++j) candidates.push_back(vr.col(j));
  for (Index i = 0; i < vu.cols(); ++i) {
    for (Index j = 0; j < vr.cols(); ++j) {
      candidates.push_back((vu.col(i) + vr.col(j)).normalized());
    }
  }
  for (const Vector& v : candidates) {
    const Matrix d = eps * v * v.adjoint();
    const double lower = min_eigenvalue(u.matrix() - d);
    const double upper = min_eigenvalue(t.matrix() - u.matrix() - d);
    if (lower >= -1e-12 && upper >= -1e-12) {
      return true;
    }
  }
  return false;
}

}  // namespace sesq::testing
