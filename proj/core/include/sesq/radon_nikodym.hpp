#pragma once

// Representing vectors for dominated forms and representing sequences for
// almost dominated forms.

#include <vector>

#include "sesq/forms.hpp"

namespace sesq {

/// The unique xi_y in H_w with t(x, y) = (x + ker w | xi_y)_w for all x.
struct RnRepresentative {
  Vector y;
  Vector xi;          // coordinates in quotient_space(w).coset_basis
  Vector xi_ambient;  // W^+ T y, the representative of xi in (ker W)^⊥
};

/// Throws PreconditionError("t not dominated by w") unless t <= c w for
/// some c.
RnRepresentative rn_representative(const Form& t, const Form& w, const Vector& y,
                                   const Tolerances& tol = {});

/// A sequence (y_n) with t(x, y) = lim w(x, y_n) for all x. On C^n the
/// approximation is exact from the first term on, so every term equals
/// W^+ T y. Throws PreconditionError("t not almost dominated by w") unless
/// D_w t = t.
std::vector<Vector> rn_sequence(const Form& t, const Form& w, const Vector& y, int n_terms,
                                const Tolerances& tol = {});

}  // namespace sesq
