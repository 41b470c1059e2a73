#include "sesq/forms.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace sesq {

Complex Form::operator()(const Vector& x, const Vector& y) const {
  // Eigen's dot is conjugate-linear in its first argument: y.dot(Tx) = y^H T x.
  return y.dot(matrix() * x);
}

double Form::quadratic(const Vector& x) const { return std::max(0.0, x.dot(matrix() * x).real()); }

Form operator+(const Form& t, const Form& w) {
  require_same_dim(t, w, "form sum");
  return Form(HermitianPsd::clamped(t.matrix() + w.matrix()));
}

Form scale(const Form& t, double c) {
  if (!(c >= 0.0) || !std::isfinite(c)) {
    throw ValidationError("form scale factor must be finite and nonnegative");
  }
  return Form(HermitianPsd::clamped(t.matrix() * c));
}

Form subtract(const Form& t, const Form& s, const Tolerances& tol) {
  require_same_dim(t, s, "form difference");
  return Form(HermitianPsd::denoised(t.matrix() - s.matrix(), t.norm(), tol));
}

void require_same_dim(const Form& t, const Form& w, const char* op) {
  if (t.dim() != w.dim()) {
    throw DimensionError(std::string(op) + ": dimension mismatch (" + std::to_string(t.dim()) +
                         " vs " + std::to_string(w.dim()) + ")");
  }
}

bool leq(const Form& t, const Form& w, const Tolerances& tol) {
  require_same_dim(t, w, "leq");
  if (t.dim() == 0) {
    return true;
  }
  const double lmax = std::max(t.norm(), w.norm());
  return min_eigenvalue(w.matrix() - t.matrix()) >= -tol.psd * (1.0 + lmax);
}

std::optional<double> domination_constant(const Form& t, const Form& w, const Tolerances& tol) {
  require_same_dim(t, w, "domination_constant");
  if (!absolutely_continuous(t, w, tol)) {
    return std::nullopt;
  }
  if (t.dim() == 0) {
    return 0.0;
  }
  // Largest generalized Rayleigh quotient t[x] / w[x] over (ker W)^⊥.
  const Matrix root_inv = pinv_sqrt(w.psd(), tol).matrix();
  const Matrix compressed = root_inv * t.matrix() * root_inv;
  const EigenDecomposition e = eig_hermitian((compressed + compressed.adjoint()) * 0.5);
  return std::max(0.0, e.values(0));
}

bool absolutely_continuous(const Form& t, const Form& w, const Tolerances& tol) {
  require_same_dim(t, w, "absolutely_continuous");
  const Subspace ker_w = kernel_subspace(w.psd(), tol);
  const double bound = tol.recon * std::max(1.0, t.norm());
  for (Index j = 0; j < ker_w.dim(); ++j) {
    if (t.quadratic(ker_w.basis().col(j)) > bound) {
      return false;
    }
  }
  return true;
}

bool strongly_absolutely_continuous(const Form& t, const Form& w, const Tolerances& tol) {
  require_same_dim(t, w, "strongly_absolutely_continuous");
  return absolutely_continuous(t, w, tol);
}

bool singular(const Form& t, const Form& w, const Tolerances& tol) {
  require_same_dim(t, w, "singular");
  return range_intersection_rank(t.psd(), w.psd(), tol) == 0;
}

bool is_minimal(const Form& t, const Tolerances& tol) { return rank(t.psd(), tol) == 1; }

double QuotientSpace::norm(const Vector& a) const {
  return std::sqrt(std::max(0.0, inner(a, a).real()));
}

QuotientSpace quotient_space(const Form& t, const Tolerances& tol) {
  QuotientSpace q;
  q.source_dim = t.dim();
  q.form = t;
  q.coset_basis = range_subspace(t.psd(), tol);
  const Matrix& b = q.coset_basis.basis();
  q.gram = HermitianPsd::clamped(b.adjoint() * t.matrix() * b);
  return q;
}

}  // namespace sesq
