#pragma once

// Random test-instance generators. Sampling operations and the test suites
// draw from these; every function is deterministic given the engine state.

#include <random>

#include "sesq/forms.hpp"

namespace sesq {

using Rng = std::mt19937_64;

/// Entries i.i.d. standard complex normal.
Matrix random_gaussian(Rng& rng, Index rows, Index cols);
Vector random_vector(Rng& rng, Index n);

/// Haar-distributed unitary (QR of a Gaussian matrix with phase fix).
Matrix random_unitary(Rng& rng, Index n);

/// Uniformly distributed k-dimensional subspace of C^n.
Subspace random_subspace(Rng& rng, Index n, Index k);

/// Random form of the given rank, nonzero eigenvalues uniform in [lo, hi],
/// eigenvectors Haar distributed.
Form random_form(Rng& rng, Index n, Index rank, double lo = 0.25, double hi = 2.0);

/// Random form whose range is exactly span(basis).
Form random_form_on(Rng& rng, const Matrix& basis, double lo = 0.25, double hi = 2.0);

enum class PairKind {
  generic,   // independent ranges in general position
  aligned,   // ranges spanned by overlapping subsets of one orthonormal basis
  nested,    // ran t ⊆ ran w
  disjoint,  // ran t ∩ ran w = {0}, not orthogonal
  oblique,   // ranges share a subspace, otherwise skew
};

struct FormPair {
  Form t;
  Form w;
  PairKind kind = PairKind::generic;
};

/// A pair of forms on C^n with rank structure drawn from one of the kinds
/// above (uniformly, unless `kind` is given).
FormPair random_pair(Rng& rng, Index n);
FormPair random_pair(Rng& rng, Index n, PairKind kind);

/// A random s with 0 <= s <= v, namely V^1/2 K V^1/2 for random 0 <= K <= I.
Form random_lower_bound(Rng& rng, const Form& v);

}  // namespace sesq
