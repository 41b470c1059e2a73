#pragma once

// Positive definite operator functions (kernels) on a finite set S and
// their dictionary with forms.
//
// S is {0, ..., m-1}; E is C^d. A test function f: S -> E is stored as the
// concatenation [f(0); f(1); ...; f(m-1)] in C^{m d}. The pairing
// <x, x*> = (x*)^H x is linear in its first argument, so the associated form
//
//   w_K(f, g) = sum_{s,t} <f(t), K(s,t) g(s)> = g^H W f
//
// has the d x d block (s, t) of W equal to K(s,t)^H.

#include <optional>
#include <string>
#include <vector>

#include "sesq/decomposition.hpp"
#include "sesq/order.hpp"

namespace sesq {

class Kernel {
 public:
  Kernel() = default;

  /// `blocks` holds K(s,t) at index s * set_size + t. Throws NotPsdError
  /// ("not positive definite") if the associated form is not PSD.
  static Kernel from_blocks(Index set_size, Index block_dim, std::vector<Matrix> blocks,
                            std::vector<std::string> labels = {}, const Tolerances& tol = {});

  Index set_size() const { return set_size_; }
  Index block_dim() const { return block_dim_; }
  const Matrix& block(Index s, Index t) const {
    return blocks_[static_cast<std::size_t>(s * set_size_ + t)];
  }
  const std::vector<Matrix>& blocks() const { return blocks_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// The associated form w_K on C^{m d}.
  const Form& form() const { return form_; }

 private:
  friend Kernel kernel_of_form(const Form& w, Index set_size, Index block_dim);

  Index set_size_ = 0;
  Index block_dim_ = 0;
  std::vector<Matrix> blocks_;
  std::vector<std::string> labels_;
  Form form_;
};

/// The Dirac function h_{s,x}: S -> E, h(u) = δ_s(u) x.
Vector dirac(Index set_size, Index block_dim, Index s, const Vector& x);

/// w_K. Throws NotPsdError if the block array is not a kernel.
Form form_of_kernel(const Kernel& k, const Tolerances& tol = {});

/// The unique kernel L with w_L = w, from <x, L(s,t) y> = w(h_{t,x}, h_{s,y}).
/// Throws DimensionError unless w.dim() == set_size * block_dim.
Kernel kernel_of_form(const Form& w, Index set_size, Index block_dim);

/// Largest violation of ||K(s,t)|| <= sqrt(||K(s,s)|| ||K(t,t)||) over all
/// s, t; nonpositive up to rounding for every kernel.
double block_bound_excess(const Kernel& k);

/// K ≺ L, i.e. w_K <= w_L.
bool kernel_leq(const Kernel& k, const Kernel& l, const Tolerances& tol = {});

struct KernelDecomposition {
  Kernel regular;   // absolutely continuous / almost dominated part
  Kernel singular;  // L-singular part
  bool unique = false;
};

/// K = D_L K + (K - D_L K), with w_{D_L K} = D_{w_L} w_K.
KernelDecomposition kernel_lebesgue(const Kernel& k, const Kernel& l, const Tolerances& tol = {});

/// K = K_ac + K_s from the short of w_K to ker w_L. Throws std::logic_error
/// if it does not coincide with kernel_lebesgue.
KernelDecomposition kernel_short(const Kernel& k, const Kernel& l, const Tolerances& tol = {});

/// (g_n) with sum <f(t), K(s,t) g(s)> = lim sum <f(t), L(s,t) g_n(s)> for
/// all f. Throws PreconditionError unless K is almost dominated by L.
std::vector<Vector> kernel_rn_sequence(const Kernel& k, const Kernel& l, const Vector& g,
                                       int n_terms, const Tolerances& tol = {});

struct KernelInfimumResult {
  bool exists = false;
  std::optional<Kernel> value;
  InfimumWitness witness = InfimumWitness::not_comparable;
};

KernelInfimumResult kernel_infimum(const Kernel& k, const Kernel& l, const Tolerances& tol = {});

/// A Hilbert space H = C^dilation_space_dim and a map T from X / ker w_L
/// into H with <y, K(s,t) x> = (T h_{t,y} | T h_{s,x})_H.
struct DilationResult {
  Index dilation_space_dim = 0;
  Matrix map;            // dilation_space_dim x dim(X / ker w_L), on quotient coordinates
  Subspace source_basis; // coset basis of X / ker w_L
  bool closed = true;    // every linear map between finite-dimensional spaces is closed

  /// T (f + ker w_L).
  Vector apply(const Vector& f) const { return map * (source_basis.basis().adjoint() * f); }
};

/// Throws PreconditionError("no dilation: ker w_L ⊄ ker w_K") unless K is
/// absolutely continuous with respect to L.
DilationResult dilate(const Kernel& k, const Kernel& l, const Tolerances& tol = {});

/// Whether J is an extreme point of [0, K]; when it is, also builds the
/// dilation of J with respect to K and checks that it is closed. Throws
/// PreconditionError("J not below K") unless J ≺ K.
bool kernel_extreme_check(const Kernel& j, const Kernel& k, const Tolerances& tol = {});

}  // namespace sesq
