#include "sesq/radon_nikodym.hpp"

#include "sesq/decomposition.hpp"

namespace sesq {

namespace {

void require_vector(const Form& t, const Vector& y, const char* op) {
  if (y.size() != t.dim()) {
    throw DimensionError(std::string(op) + ": vector dimension mismatch");
  }
  require_finite(y, "vector");
}

Vector representing_vector(const Form& t, const Form& w, const Vector& y,
                           const Tolerances& tol) {
  return pinv(w.psd(), tol).matrix() * (t.matrix() * y);
}

}  // namespace

RnRepresentative rn_representative(const Form& t, const Form& w, const Vector& y,
                                   const Tolerances& tol) {
  require_same_dim(t, w, "rn_representative");
  require_vector(t, y, "rn_representative");
  if (!domination_constant(t, w, tol)) {
    throw PreconditionError("t not dominated by w");
  }
  const QuotientSpace q = quotient_space(w, tol);
  RnRepresentative out;
  out.y = y;
  out.xi_ambient = q.coset_basis.projection() * representing_vector(t, w, y, tol);
  out.xi = q.coordinates(out.xi_ambient);
  return out;
}

std::vector<Vector> rn_sequence(const Form& t, const Form& w, const Vector& y, int n_terms,
                                const Tolerances& tol) {
  require_same_dim(t, w, "rn_sequence");
  require_vector(t, y, "rn_sequence");
  if (n_terms < 1) {
    throw ValidationError("rn_sequence: n_terms must be positive");
  }
  if (!almost_dominated(t, w, tol)) {
    throw PreconditionError("t not almost dominated by w");
  }
  return std::vector<Vector>(static_cast<std::size_t>(n_terms), representing_vector(t, w, y, tol));
}

}  // namespace sesq
