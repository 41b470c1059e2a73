#include "sesq/random.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace sesq {

namespace {

Index uniform_index(Rng& rng, Index lo, Index hi) {
  std::uniform_int_distribution<Index> d(lo, hi);
  return d(rng);
}

}  // namespace

Matrix random_gaussian(Rng& rng, Index rows, Index cols) {
  std::normal_distribution<double> normal(0.0, 1.0 / std::sqrt(2.0));
  Matrix m(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      m(i, j) = Complex(re, im);
    }
  }
  return m;
}

Vector random_vector(Rng& rng, Index n) { return random_gaussian(rng, n, 1).col(0); }

Matrix random_unitary(Rng& rng, Index n) {
  if (n == 0) {
    return Matrix(0, 0);
  }
  const Matrix g = random_gaussian(rng, n, n);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(n, n);
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index j = 0; j < n; ++j) {
    const Complex d = r(j, j);
    const double a = std::abs(d);
    if (a > 0.0) {
      q.col(j) *= d / a;
    }
  }
  return q;
}

Subspace random_subspace(Rng& rng, Index n, Index k) {
  if (k == 0) {
    return Subspace::zero(n);
  }
  return Subspace::from_basis(random_unitary(rng, n).leftCols(k));
}

Form random_form_on(Rng& rng, const Matrix& basis, double lo, double hi) {
  const Index n = basis.rows();
  const Index k = basis.cols();
  if (k == 0) {
    return Form::zero(n);
  }
  std::uniform_real_distribution<double> spectrum(lo, hi);
  RealVector lambda(k);
  for (Index i = 0; i < k; ++i) {
    lambda(i) = spectrum(rng);
  }
  const Matrix u = random_unitary(rng, k);
  const Matrix inner = u * lambda.cast<Complex>().asDiagonal() * u.adjoint();
  return Form(HermitianPsd::clamped(basis * inner * basis.adjoint()));
}

Form random_form(Rng& rng, Index n, Index rank, double lo, double hi) {
  return random_form_on(rng, random_subspace(rng, n, rank).basis(), lo, hi);
}

FormPair random_pair(Rng& rng, Index n) {
  const auto kind = static_cast<PairKind>(uniform_index(rng, 0, 4));
  return random_pair(rng, n, kind);
}

FormPair random_pair(Rng& rng, Index n, PairKind kind) {
  FormPair p;
  p.kind = kind;
  switch (kind) {
    case PairKind::generic: {
      p.t = random_form(rng, n, uniform_index(rng, 0, n));
      p.w = random_form(rng, n, uniform_index(rng, 0, n));
      break;
    }
    case PairKind::aligned: {
      const Matrix q = random_unitary(rng, n);
      std::vector<Index> cols_t, cols_w;
      std::bernoulli_distribution coin(0.5);
      for (Index j = 0; j < n; ++j) {
        if (coin(rng)) cols_t.push_back(j);
        if (coin(rng)) cols_w.push_back(j);
      }
      p.t = random_form_on(rng, q(Eigen::all, cols_t));
      p.w = random_form_on(rng, q(Eigen::all, cols_w));
      break;
    }
    case PairKind::nested: {
      const Index rw = uniform_index(rng, 1, n);
      const Subspace ran_w = random_subspace(rng, n, rw);
      const Index rt = uniform_index(rng, 0, rw);
      const Matrix inner = random_unitary(rng, rw).leftCols(rt);
      p.w = random_form_on(rng, ran_w.basis());
      p.t = random_form_on(rng, ran_w.basis() * inner);
      break;
    }
    case PairKind::disjoint: {
      const Index rt = uniform_index(rng, 0, n);
      const Index rw = uniform_index(rng, 0, n - rt);
      const Matrix g = random_gaussian(rng, n, rt + rw);
      p.t = random_form_on(rng, Subspace::span_of(g.leftCols(rt), n).basis());
      p.w = random_form_on(rng, Subspace::span_of(g.rightCols(rw), n).basis());
      break;
    }
    case PairKind::oblique: {
      const Index shared = uniform_index(rng, 1, std::max<Index>(1, n / 2));
      const Index extra_t = uniform_index(rng, 0, n - shared);
      const Index extra_w = uniform_index(rng, 0, n - shared);
      const Matrix g = random_gaussian(rng, n, shared + extra_t + extra_w);
      Matrix span_t(n, shared + extra_t);
      span_t << g.leftCols(shared), g.middleCols(shared, extra_t);
      Matrix span_w(n, shared + extra_w);
      span_w << g.leftCols(shared), g.rightCols(extra_w);
      p.t = random_form_on(rng, Subspace::span_of(span_t, n).basis());
      p.w = random_form_on(rng, Subspace::span_of(span_w, n).basis());
      break;
    }
  }
  return p;
}

Form random_lower_bound(Rng& rng, const Form& v) {
  const Index n = v.dim();
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  RealVector k(n);
  for (Index i = 0; i < n; ++i) {
    k(i) = unit(rng);
  }
  const Matrix u = random_unitary(rng, n);
  const Matrix contraction = u * k.cast<Complex>().asDiagonal() * u.adjoint();
  const Matrix root = sqrt_psd(v.psd()).matrix();
  return Form(HermitianPsd::clamped(root * contraction * root));
}

}  // namespace sesq
