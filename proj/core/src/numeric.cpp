#include "sesq/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace sesq {

namespace {

std::shared_ptr<const EigenDecomposition> make_eig(EigenDecomposition e) {
  return std::make_shared<const EigenDecomposition>(std::move(e));
}

Matrix hermitian_part(const Matrix& m) {
  Matrix h = (m + m.adjoint()) * 0.5;
  return h;
}

Matrix rebuild(const EigenDecomposition& e) {
  return e.vectors * e.values.cast<Complex>().asDiagonal() * e.vectors.adjoint();
}

}  // namespace

void Tolerances::validate() const {
  for (double v : {sym, psd, recon, rank}) {
    if (!std::isfinite(v) || v <= 0.0) {
      throw ValidationError("tolerances must be finite and positive");
    }
  }
}

void require_finite(const Matrix& m, const char* what) {
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      const Complex z = m(i, j);
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        std::ostringstream os;
        os << what << ": non-finite entry at (" << i << ", " << j << ")";
        throw ValidationError(os.str());
      }
    }
  }
}

EigenDecomposition eig_hermitian(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw DimensionError("eig_hermitian: matrix is not square");
  }
  const Index n = m.rows();
  EigenDecomposition out;
  if (n == 0) {
    out.values.resize(0);
    out.vectors.resize(0, 0);
    return out;
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    std::ostringstream os;
    os << "eig_hermitian: eigensolver did not converge within "
       << Eigen::SelfAdjointEigenSolver<Matrix>::m_maxIterations * n
       << " iterations (dim " << n << ")";
    throw EigenSolverError(os.str());
  }
  // Eigen sorts ascending; store nonincreasing.
  out.values = solver.eigenvalues().reverse();
  out.vectors = solver.eigenvectors().rowwise().reverse();
  return out;
}

HermitianPsd HermitianPsd::from_matrix(const Matrix& m, const Tolerances& tol) {
  if (m.rows() != m.cols()) {
    throw DimensionError("matrix is not square");
  }
  require_finite(m, "matrix");
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if (m.size() > 0 && (m - m.adjoint()).cwiseAbs().maxCoeff() > tol.sym * scale) {
    throw NotPsdError("matrix is not Hermitian");
  }
  Matrix h = hermitian_part(m);
  EigenDecomposition e = eig_hermitian(h);
  if (e.values.size() > 0) {
    const double lmax = std::max(0.0, e.values(0));
    const double lmin = e.values(e.values.size() - 1);
    if (lmin < -tol.psd * (1.0 + lmax)) {
      std::ostringstream os;
      os << "matrix is not positive semidefinite (smallest eigenvalue " << lmin << ")";
      throw NotPsdError(os.str());
    }
    e.values = e.values.cwiseMax(0.0);
  }
  return HermitianPsd(std::move(h), make_eig(std::move(e)));
}

HermitianPsd HermitianPsd::denoised(const Matrix& m, double scale, const Tolerances& tol) {
  if (m.rows() != m.cols()) {
    throw DimensionError("matrix is not square");
  }
  require_finite(m, "matrix");
  Matrix h = hermitian_part(m);
  EigenDecomposition e = eig_hermitian(h);
  if (e.values.size() == 0) {
    return HermitianPsd(std::move(h), make_eig(std::move(e)));
  }
  const double threshold = tol.rank * std::max(scale, std::max(0.0, e.values(0)));
  bool changed = false;
  for (Index i = 0; i < e.values.size(); ++i) {
    if (e.values(i) <= threshold && e.values(i) != 0.0) {
      e.values(i) = 0.0;
      changed = true;
    }
  }
  if (changed) {
    h = hermitian_part(rebuild(e));
  }
  return HermitianPsd(std::move(h), make_eig(std::move(e)));
}

HermitianPsd HermitianPsd::clamped(const Matrix& m) {
  Tolerances exact;
  exact.rank = 0.0;
  return denoised(m, 0.0, exact);
}

HermitianPsd HermitianPsd::zero(Index dim) {
  EigenDecomposition e;
  e.values = RealVector::Zero(dim);
  e.vectors = Matrix::Identity(dim, dim);
  return HermitianPsd(Matrix::Zero(dim, dim), make_eig(std::move(e)));
}

HermitianPsd HermitianPsd::identity(Index dim) {
  EigenDecomposition e;
  e.values = RealVector::Ones(dim);
  e.vectors = Matrix::Identity(dim, dim);
  return HermitianPsd(Matrix::Identity(dim, dim), make_eig(std::move(e)));
}

double HermitianPsd::max_eigenvalue() const {
  return eig_->values.size() == 0 ? 0.0 : eig_->values(0);
}

Subspace Subspace::from_basis(const Matrix& basis, const Tolerances& tol) {
  require_finite(basis, "subspace basis");
  if (basis.cols() > basis.rows()) {
    throw DimensionError("subspace basis has more columns than the ambient dimension");
  }
  if (basis.cols() > 0) {
    const Matrix gram = basis.adjoint() * basis;
    const Matrix eye = Matrix::Identity(basis.cols(), basis.cols());
    if ((gram - eye).cwiseAbs().maxCoeff() > tol.sym) {
      throw ValidationError("subspace basis is not orthonormal");
    }
  }
  return Subspace(basis);
}

Subspace Subspace::span_of(const Matrix& spanning, Index ambient_dim, const Tolerances& tol,
                           double scale) {
  if (spanning.rows() != ambient_dim) {
    throw DimensionError("spanning set does not match the ambient dimension");
  }
  if (spanning.cols() == 0 || ambient_dim == 0) {
    return zero(ambient_dim);
  }
  require_finite(spanning, "spanning set");
  Eigen::ColPivHouseholderQR<Matrix> qr(spanning);
  const Matrix& packed = qr.matrixQR();
  const Index diag = std::min(packed.rows(), packed.cols());
  const double threshold = std::sqrt(tol.rank) * std::max(scale, std::abs(packed(0, 0)));
  Index r = 0;
  while (r < diag && std::abs(packed(r, r)) > threshold) {
    ++r;
  }
  Matrix q = qr.householderQ() * Matrix::Identity(ambient_dim, r);
  return Subspace(std::move(q));
}

Subspace Subspace::zero(Index ambient_dim) { return Subspace(Matrix(ambient_dim, 0)); }

Subspace Subspace::full(Index ambient_dim) {
  return Subspace(Matrix::Identity(ambient_dim, ambient_dim));
}

Subspace Subspace::complement() const {
  const Index n = ambient_dim();
  const Index k = dim();
  if (k == 0) {
    return full(n);
  }
  Eigen::HouseholderQR<Matrix> qr(basis_);
  Matrix q = qr.householderQ() * Matrix::Identity(n, n);
  return Subspace(q.rightCols(n - k));
}

double rank_threshold(const HermitianPsd& m, const Tolerances& tol, double scale) {
  return tol.rank * std::max(scale, m.max_eigenvalue());
}

Index rank(const HermitianPsd& m, const Tolerances& tol, double scale) {
  const double threshold = rank_threshold(m, tol, scale);
  const RealVector& lambda = m.eig().values;
  Index r = 0;
  while (r < lambda.size() && lambda(r) > threshold) {
    ++r;
  }
  return r;
}

HermitianPsd pinv(const HermitianPsd& m, const Tolerances& tol, double scale) {
  const EigenDecomposition& e = m.eig();
  const Index r = rank(m, tol, scale);
  const Matrix v = e.vectors.leftCols(r);
  const Matrix inv = v * e.values.head(r).cwiseInverse().cast<Complex>().asDiagonal() * v.adjoint();
  return HermitianPsd::clamped(inv);
}

HermitianPsd sqrt_psd(const HermitianPsd& m, const Tolerances& tol) {
  const EigenDecomposition& e = m.eig();
  const Index r = rank(m, tol);
  const Matrix v = e.vectors.leftCols(r);
  const Matrix root = v * e.values.head(r).cwiseSqrt().cast<Complex>().asDiagonal() * v.adjoint();
  return HermitianPsd::clamped(root);
}

HermitianPsd pinv_sqrt(const HermitianPsd& m, const Tolerances& tol) {
  const EigenDecomposition& e = m.eig();
  const Index r = rank(m, tol);
  const Matrix v = e.vectors.leftCols(r);
  const Matrix inv =
      v * e.values.head(r).cwiseSqrt().cwiseInverse().cast<Complex>().asDiagonal() * v.adjoint();
  return HermitianPsd::clamped(inv);
}

Subspace kernel_subspace(const HermitianPsd& m, const Tolerances& tol, double scale) {
  const Index r = rank(m, tol, scale);
  return Subspace::from_basis(m.eig().vectors.rightCols(m.dim() - r), tol);
}

Subspace range_subspace(const HermitianPsd& m, const Tolerances& tol, double scale) {
  const Index r = rank(m, tol, scale);
  return Subspace::from_basis(m.eig().vectors.leftCols(r), tol);
}

Index range_intersection_rank(const HermitianPsd& a, const HermitianPsd& b,
                              const Tolerances& tol) {
  if (a.dim() != b.dim()) {
    throw DimensionError("range_intersection_rank: dimension mismatch");
  }
  const double scale = std::max(a.max_eigenvalue(), b.max_eigenvalue());
  const HermitianPsd sum = HermitianPsd::denoised(a.matrix() + b.matrix(), 0.0, tol);
  const Index r = rank(a, tol, scale) + rank(b, tol, scale) - rank(sum, tol, scale);
  return std::max<Index>(r, 0);
}

double hermitian_norm(const Matrix& m) {
  if (m.size() == 0) {
    return 0.0;
  }
  const EigenDecomposition e = eig_hermitian((m + m.adjoint()) * 0.5);
  return std::max(std::abs(e.values(0)), std::abs(e.values(e.values.size() - 1)));
}

double min_eigenvalue(const Matrix& m) {
  if (m.size() == 0) {
    return 0.0;
  }
  const EigenDecomposition e = eig_hermitian((m + m.adjoint()) * 0.5);
  return e.values(e.values.size() - 1);
}

bool approx_equal(const Matrix& a, const Matrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    return false;
  }
  if (a.size() == 0) {
    return true;
  }
  const double scale = std::max({1.0, a.operatorNorm(), b.operatorNorm()});
  return (a - b).operatorNorm() <= tol * scale;
}

}  // namespace sesq
