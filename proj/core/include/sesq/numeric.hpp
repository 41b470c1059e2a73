#pragma once

// Dense complex Hermitian linear algebra shared by every other module.
//
// A HermitianPsd is validated once at construction. Its eigendecomposition
// is computed at the same time and cached, with eigenvalues sorted
// nonincreasing and small negative eigenvalues clamped to zero.

#include <complex>
#include <cstddef>
#include <memory>
#include <vector>

#include <Eigen/Dense>

#include "sesq/errors.hpp"

namespace sesq {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Numerical tolerances. Defaults suit double precision with dim <= ~64.
struct Tolerances {
  double sym = 1e-10;    // Hermitian symmetry, relative to max(1, max |entry|)
  double psd = 1e-10;    // eigenvalues >= -psd * (1 + lambda_max)
  double recon = 1e-8;   // reconstruction / equality checks
  double rank = 1e-10;   // eigenvalue > rank * scale counts towards the rank

  /// Throws ValidationError unless every tolerance is finite and positive.
  void validate() const;
};

/// Spectral data of a Hermitian matrix: eigenvalues nonincreasing,
/// eigenvectors as the columns of a unitary matrix.
struct EigenDecomposition {
  RealVector values;
  Matrix vectors;
};

/// Checks that every entry is finite; throws ValidationError otherwise.
void require_finite(const Matrix& m, const char* what);

/// Hermitian positive semidefinite matrix with a cached spectrum.
class HermitianPsd {
 public:
  /// Validates external input: square, finite, Hermitian within tol.sym and
  /// PSD within tol.psd. The stored matrix keeps the input bits except for
  /// exact Hermitian averaging.
  static HermitianPsd from_matrix(const Matrix& m, const Tolerances& tol = {});

  /// Builds the PSD matrix closest to `m` in the eigenvalue sense: every
  /// eigenvalue <= tol.rank * max(scale, lambda_max) becomes exactly zero.
  /// Use for values that are PSD in exact arithmetic (differences, Schur
  /// complements); `scale` is the magnitude of the inputs they came from.
  static HermitianPsd denoised(const Matrix& m, double scale,
                               const Tolerances& tol = {});

  /// Clamps negative eigenvalues to zero and nothing else.
  static HermitianPsd clamped(const Matrix& m);

  static HermitianPsd zero(Index dim);
  static HermitianPsd identity(Index dim);

  HermitianPsd() : HermitianPsd(zero(0)) {}

  Index dim() const { return matrix_.rows(); }
  const Matrix& matrix() const { return matrix_; }
  const EigenDecomposition& eig() const { return *eig_; }

  /// Largest eigenvalue, 0 for the zero matrix (and for dim 0).
  double max_eigenvalue() const;

 private:
  HermitianPsd(Matrix m, std::shared_ptr<const EigenDecomposition> eig)
      : matrix_(std::move(m)), eig_(std::move(eig)) {}

  Matrix matrix_;
  std::shared_ptr<const EigenDecomposition> eig_;
};

/// Orthonormal basis of a subspace of C^ambient_dim.
class Subspace {
 public:
  Subspace() = default;

  /// Validates that `basis` has orthonormal columns within tol.sym.
  static Subspace from_basis(const Matrix& basis, const Tolerances& tol = {});

  /// Orthonormalizes the columns of `spanning` by column-pivoted QR. A
  /// pivot counts towards the dimension when |R_ii| exceeds
  /// sqrt(tol.rank) * max(scale, |R_00|); the square root matches the rank
  /// policy for eigenvalues of spanning^H spanning.
  static Subspace span_of(const Matrix& spanning, Index ambient_dim,
                          const Tolerances& tol = {}, double scale = 0.0);

  static Subspace zero(Index ambient_dim);
  static Subspace full(Index ambient_dim);

  Index ambient_dim() const { return basis_.rows(); }
  Index dim() const { return basis_.cols(); }
  const Matrix& basis() const { return basis_; }

  /// Orthogonal projection onto the subspace.
  Matrix projection() const { return basis_ * basis_.adjoint(); }

  /// Orthonormal basis of the orthogonal complement.
  Subspace complement() const;

 private:
  explicit Subspace(Matrix basis) : basis_(std::move(basis)) {}
  Matrix basis_;
};

/// Eigendecomposition, eigenvalues nonincreasing.
/// Throws EigenSolverError if the solver does not converge.
EigenDecomposition eig_hermitian(const Matrix& m);
inline const EigenDecomposition& eig_hermitian(const HermitianPsd& m) { return m.eig(); }

/// Rank threshold for `m`: tol.rank * max(scale, lambda_max(m)).
double rank_threshold(const HermitianPsd& m, const Tolerances& tol, double scale = 0.0);

/// Number of eigenvalues strictly above rank_threshold (ties round down).
Index rank(const HermitianPsd& m, const Tolerances& tol = {}, double scale = 0.0);

/// Moore-Penrose pseudo-inverse. Eigenvalues at or below
/// rank_threshold(m, tol, scale) are treated as zero.
HermitianPsd pinv(const HermitianPsd& m, const Tolerances& tol = {}, double scale = 0.0);

/// Principal square root. Eigenvalues at or below the rank threshold are
/// treated as zero before taking roots, so rounding noise on ker m is not
/// amplified to its square root.
HermitianPsd sqrt_psd(const HermitianPsd& m, const Tolerances& tol = {});

/// Pseudo-inverse of the principal square root.
HermitianPsd pinv_sqrt(const HermitianPsd& m, const Tolerances& tol = {});

/// Orthonormal basis of the eigenspace of eigenvalues at or below the rank
/// threshold, i.e. ker m.
Subspace kernel_subspace(const HermitianPsd& m, const Tolerances& tol = {},
                         double scale = 0.0);

/// Orthonormal basis of ran m (the complement of kernel_subspace).
Subspace range_subspace(const HermitianPsd& m, const Tolerances& tol = {},
                        double scale = 0.0);

/// dim(ran a ∩ ran b) = rank(a) + rank(b) - rank(a + b). All three ranks
/// share the scale max(lambda_max(a), lambda_max(b)).
Index range_intersection_rank(const HermitianPsd& a, const HermitianPsd& b,
                              const Tolerances& tol = {});

/// Spectral norm of a Hermitian matrix (largest |eigenvalue|).
double hermitian_norm(const Matrix& m);

/// Smallest eigenvalue of a Hermitian matrix.
double min_eigenvalue(const Matrix& m);

/// ||a - b||_2 <= tol * max(1, ||a||_2, ||b||_2).
bool approx_equal(const Matrix& a, const Matrix& b, double tol);

}  // namespace sesq
