#include "sesq/decomposition.hpp"

#include <algorithm>
#include <cmath>

namespace sesq {

namespace {

double input_scale(const Form& t, const Form& w) { return std::max(t.norm(), w.norm()); }

// Rank of ran [T^1/2; W^1/2], i.e. of T + W, on the common scale.
Index joint_rank(const Form& t, const Form& w, const Tolerances& tol) {
  const HermitianPsd sum = HermitianPsd::clamped(t.matrix() + w.matrix());
  return rank(sum, tol, input_scale(t, w));
}

// Orthonormal basis of the leading r columns of a column-pivoted QR of `a`,
// i.e. of ran a when rank(a) = r.
Matrix range_basis(const Matrix& a, Index r) {
  Eigen::ColPivHouseholderQR<Matrix> qr(a);
  return qr.householderQ() * Matrix::Identity(a.rows(), r);
}

// Squared distance from b to the span of the orthonormal columns of q.
double distance_squared(const Matrix& q, const Vector& b) {
  return (b - q * (q.adjoint() * b)).squaredNorm();
}

}  // namespace

Form parallel_sum(const Form& t, const Form& w, const Tolerances& tol) {
  require_same_dim(t, w, "parallel_sum");
  const double scale = input_scale(t, w);
  const HermitianPsd sum = HermitianPsd::clamped(t.matrix() + w.matrix());
  const Matrix& tm = t.matrix();
  const Matrix result = tm - tm * pinv(sum, tol, scale).matrix() * tm;
  return Form(HermitianPsd::denoised(result, scale, tol));
}

double parallel_sum_oracle(const Form& t, const Form& w, const Vector& x, const Tolerances& tol) {
  require_same_dim(t, w, "parallel_sum_oracle");
  if (x.size() != t.dim()) {
    throw DimensionError("parallel_sum_oracle: vector dimension mismatch");
  }
  require_finite(x, "vector");
  const Index n = t.dim();
  if (n == 0) {
    return 0.0;
  }
  // min_y ||T^1/2 (x - y)||^2 + ||W^1/2 y||^2 is the squared distance from
  // [T^1/2 x; 0] to ran [T^1/2; W^1/2].
  const Matrix a = sqrt_psd(t.psd(), tol).matrix();
  const Matrix b = sqrt_psd(w.psd(), tol).matrix();
  Matrix stacked(2 * n, n);
  stacked << a, b;
  Vector rhs(2 * n);
  rhs << a * x, Vector::Zero(n);
  return distance_squared(range_basis(stacked, joint_rank(t, w, tol)), rhs);
}

Form short_to_subspace(const Form& t, const Subspace& m, const Tolerances& tol) {
  if (m.ambient_dim() != t.dim()) {
    throw DimensionError("short_to_subspace: subspace ambient dimension mismatch");
  }
  if (m.dim() == 0) {
    return t;
  }
  const Subspace comp = m.complement();
  const Matrix& b1 = comp.basis();
  const Matrix& b2 = m.basis();
  const Matrix& tm = t.matrix();
  const Matrix t11 = b1.adjoint() * tm * b1;
  const Matrix t12 = b1.adjoint() * tm * b2;
  const HermitianPsd t22 = HermitianPsd::clamped(b2.adjoint() * tm * b2);
  const Matrix schur = t11 - t12 * pinv(t22, tol, t.norm()).matrix() * t12.adjoint();
  return Form(HermitianPsd::denoised(b1 * schur * b1.adjoint(), t.norm(), tol));
}

ShortDecomposition short_decompose(const Form& t, const Form& w, const Tolerances& tol) {
  require_same_dim(t, w, "short_decompose");
  ShortDecomposition d;
  d.ac_part = short_to_subspace(t, kernel_subspace(w.psd(), tol), tol);
  d.singular_part = subtract(t, d.ac_part, tol);
  d.unique = domination_constant(d.ac_part, w, tol).has_value();
  return d;
}

Form lebesgue_ac_part(const Form& t, const Form& w, const Tolerances& tol) {
  require_same_dim(t, w, "lebesgue_ac_part");
  return short_to_subspace(t, kernel_subspace(w.psd(), tol), tol);
}

LimitOracleResult lebesgue_limit_oracle(const Form& t, const Form& w, double n_max,
                                        const Tolerances& tol) {
  require_same_dim(t, w, "lebesgue_limit_oracle");
  if (!(n_max >= 2.0) || !std::isfinite(n_max)) {
    throw ValidationError("lebesgue_limit_oracle: n_max must be at least 2");
  }
  const Index n = t.dim();
  const Index r = joint_rank(t, w, tol);
  const Matrix a = sqrt_psd(t.psd(), tol).matrix();
  const Matrix b = sqrt_psd(w.psd(), tol).matrix();
  Matrix lifted = Matrix::Zero(2 * n, n);
  lifted.topRows(n) = a;

  LimitOracleResult out;
  for (double scale = 1.0; scale <= n_max; scale *= 2.0) {
    // min_y ||T^1/2 (x - y)||^2 + scale ||W^1/2 y||^2 is the squared distance
    // from [T^1/2 x; 0] to ran [T^1/2; sqrt(scale) W^1/2].
    Matrix stacked(2 * n, n);
    stacked << a, std::sqrt(scale) * b;
    const Matrix q = range_basis(stacked, r);
    const Matrix residual = lifted - q * (q.adjoint() * lifted);
    out.scales.push_back(scale);
    out.iterates.emplace_back(HermitianPsd::clamped(residual.adjoint() * residual));
  }
  out.last = out.iterates.back();
  const Form& previous = out.iterates[out.iterates.size() - 2];
  out.gap = (out.last.matrix() - previous.matrix()).operatorNorm();
  return out;
}

LebesgueDecomposition lebesgue_decompose(const Form& t, const Form& w, const Tolerances& tol) {
  require_same_dim(t, w, "lebesgue_decompose");
  LebesgueDecomposition d;
  d.regular = lebesgue_ac_part(t, w, tol);
  d.singular_part = subtract(t, d.regular, tol);
  d.unique = domination_constant(d.regular, w, tol).has_value();
  return d;
}

bool almost_dominated(const Form& t, const Form& w, const Tolerances& tol) {
  require_same_dim(t, w, "almost_dominated");
  return approx_equal(lebesgue_ac_part(t, w, tol).matrix(), t.matrix(), tol.recon);
}

double ac_part_variational_check(const Form& t, const Form& w, const Vector& x,
                                 const Tolerances& tol) {
  require_same_dim(t, w, "ac_part_variational_check");
  if (x.size() != t.dim()) {
    throw DimensionError("ac_part_variational_check: vector dimension mismatch");
  }
  require_finite(x, "vector");
  const Subspace ker_w = kernel_subspace(w.psd(), tol);
  if (ker_w.dim() == 0) {
    return t.quadratic(x);
  }
  // inf_{y in ker W} ||T^1/2 (x - y)||^2: distance from T^1/2 x to T^1/2 ker W.
  const Matrix a = sqrt_psd(t.psd(), tol).matrix();
  const Matrix image = a * ker_w.basis();
  const HermitianPsd compressed = HermitianPsd::clamped(image.adjoint() * image);
  const Index r = rank(compressed, tol, t.norm());
  return distance_squared(range_basis(image, r), a * x);
}

bool mutual_ad_check(const Form& t, const Form& w, const Tolerances& tol) {
  require_same_dim(t, w, "mutual_ad_check");
  const Form dwt = lebesgue_ac_part(t, w, tol);
  const Form dtw = lebesgue_ac_part(w, t, tol);
  return almost_dominated(dwt, dtw, tol) && almost_dominated(dtw, dwt, tol);
}

}  // namespace sesq
