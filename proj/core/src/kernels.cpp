#include "sesq/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "sesq/radon_nikodym.hpp"

namespace sesq {

namespace {

void require_same_shape(const Kernel& k, const Kernel& l, const char* op) {
  if (k.set_size() != l.set_size() || k.block_dim() != l.block_dim()) {
    throw DimensionError(std::string(op) + ": kernel shape mismatch");
  }
}

Matrix assemble(Index m, Index d, const std::vector<Matrix>& blocks) {
  Matrix w(m * d, m * d);
  for (Index s = 0; s < m; ++s) {
    for (Index t = 0; t < m; ++t) {
      w.block(s * d, t * d, d, d) = blocks[static_cast<std::size_t>(s * m + t)].adjoint();
    }
  }
  return w;
}

KernelDecomposition transport(const Form& regular, const Form& singular_part, bool unique,
                              const Kernel& shape) {
  KernelDecomposition out;
  out.regular = kernel_of_form(regular, shape.set_size(), shape.block_dim());
  out.singular = kernel_of_form(singular_part, shape.set_size(), shape.block_dim());
  out.unique = unique;
  return out;
}

}  // namespace

Kernel Kernel::from_blocks(Index set_size, Index block_dim, std::vector<Matrix> blocks,
                           std::vector<std::string> labels, const Tolerances& tol) {
  if (set_size < 1 || block_dim < 1) {
    throw ValidationError("kernel: set_size and block_dim must be positive");
  }
  if (blocks.size() != static_cast<std::size_t>(set_size * set_size)) {
    throw DimensionError("kernel: expected set_size^2 blocks");
  }
  for (const Matrix& b : blocks) {
    if (b.rows() != block_dim || b.cols() != block_dim) {
      throw DimensionError("kernel: every block must be block_dim x block_dim");
    }
    require_finite(b, "kernel block");
  }
  if (!labels.empty() && labels.size() != static_cast<std::size_t>(set_size)) {
    throw ValidationError("kernel: labels must name every element of the set");
  }
  Kernel k;
  k.set_size_ = set_size;
  k.block_dim_ = block_dim;
  k.blocks_ = std::move(blocks);
  k.labels_ = std::move(labels);
  k.form_ = form_of_kernel(k, tol);
  return k;
}

Vector dirac(Index set_size, Index block_dim, Index s, const Vector& x) {
  if (s < 0 || s >= set_size || x.size() != block_dim) {
    throw DimensionError("dirac: index or vector out of range");
  }
  Vector h = Vector::Zero(set_size * block_dim);
  h.segment(s * block_dim, block_dim) = x;
  return h;
}

Form form_of_kernel(const Kernel& k, const Tolerances& tol) {
  const Matrix w = assemble(k.set_size(), k.block_dim(), k.blocks());
  try {
    return Form::from_matrix(w, tol);
  } catch (const NotPsdError& e) {
    throw NotPsdError(std::string("not positive definite: ") + e.what());
  }
}

Kernel kernel_of_form(const Form& w, Index set_size, Index block_dim) {
  if (set_size < 1 || block_dim < 1 || w.dim() != set_size * block_dim) {
    throw DimensionError("kernel_of_form: form dimension is not set_size * block_dim");
  }
  const Index d = block_dim;
  Kernel k;
  k.set_size_ = set_size;
  k.block_dim_ = block_dim;
  k.blocks_.reserve(static_cast<std::size_t>(set_size * set_size));
  for (Index s = 0; s < set_size; ++s) {
    for (Index t = 0; t < set_size; ++t) {
      // <x, L(s,t) y> = w(h_{t,x}, h_{s,y}) = y^H W_{s,t} x.
      k.blocks_.push_back(w.matrix().block(s * d, t * d, d, d).adjoint());
    }
  }
  k.form_ = w;
  return k;
}

double block_bound_excess(const Kernel& k) {
  double excess = -std::numeric_limits<double>::infinity();
  for (Index s = 0; s < k.set_size(); ++s) {
    for (Index t = 0; t < k.set_size(); ++t) {
      const double lhs = k.block(s, t).operatorNorm();
      const double rhs =
          std::sqrt(hermitian_norm(k.block(s, s)) * hermitian_norm(k.block(t, t)));
      excess = std::max(excess, lhs - rhs);
    }
  }
  return excess;
}

bool kernel_leq(const Kernel& k, const Kernel& l, const Tolerances& tol) {
  require_same_shape(k, l, "kernel_leq");
  return leq(k.form(), l.form(), tol);
}

KernelDecomposition kernel_lebesgue(const Kernel& k, const Kernel& l, const Tolerances& tol) {
  require_same_shape(k, l, "kernel_lebesgue");
  const LebesgueDecomposition d = lebesgue_decompose(k.form(), l.form(), tol);
  return transport(d.regular, d.singular_part, d.unique, k);
}

KernelDecomposition kernel_short(const Kernel& k, const Kernel& l, const Tolerances& tol) {
  require_same_shape(k, l, "kernel_short");
  const ShortDecomposition d = short_decompose(k.form(), l.form(), tol);
  const Form dlk = lebesgue_ac_part(k.form(), l.form(), tol);
  if (!approx_equal(d.ac_part.matrix(), dlk.matrix(), tol.recon)) {
    throw std::logic_error("kernel_short: short-type and Lebesgue-type parts differ");
  }
  return transport(d.ac_part, d.singular_part, d.unique, k);
}

std::vector<Vector> kernel_rn_sequence(const Kernel& k, const Kernel& l, const Vector& g,
                                       int n_terms, const Tolerances& tol) {
  require_same_shape(k, l, "kernel_rn_sequence");
  if (!almost_dominated(k.form(), l.form(), tol)) {
    throw PreconditionError("K not almost dominated by L");
  }
  return rn_sequence(k.form(), l.form(), g, n_terms, tol);
}

KernelInfimumResult kernel_infimum(const Kernel& k, const Kernel& l, const Tolerances& tol) {
  require_same_shape(k, l, "kernel_infimum");
  const InfimumResult r = infimum(k.form(), l.form(), tol);
  KernelInfimumResult out;
  out.exists = r.exists;
  out.witness = r.witness;
  if (r.value) {
    out.value = kernel_of_form(*r.value, k.set_size(), k.block_dim());
  }
  return out;
}

DilationResult dilate(const Kernel& k, const Kernel& l, const Tolerances& tol) {
  require_same_shape(k, l, "dilate");
  if (!absolutely_continuous(k.form(), l.form(), tol)) {
    throw PreconditionError("no dilation: ker w_L ⊄ ker w_K");
  }
  const QuotientSpace source = quotient_space(l.form(), tol);
  const QuotientSpace target = quotient_space(k.form(), tol);
  // Canonical map X/ker w_L -> X/ker w_K in quotient coordinates, followed
  // by the square root of the Gram matrix of (.|.)_{w_K}.
  const Matrix canonical = target.coset_basis.basis().adjoint() * source.coset_basis.basis();
  DilationResult out;
  out.dilation_space_dim = target.dim();
  out.map = sqrt_psd(target.gram).matrix() * canonical;
  out.source_basis = source.coset_basis;
  out.closed = true;
  return out;
}

bool kernel_extreme_check(const Kernel& j, const Kernel& k, const Tolerances& tol) {
  require_same_shape(j, k, "kernel_extreme_check");
  if (!kernel_leq(j, k, tol)) {
    throw PreconditionError("J not below K");
  }
  const bool extreme = is_extreme_in_interval(j.form(), k.form(), tol);
  if (extreme && !dilate(j, k, tol).closed) {
    throw std::logic_error("kernel_extreme_check: extreme kernel without closed dilation");
  }
  return extreme;
}

}  // namespace sesq
