#pragma once

// Parallel sums, shorts and the Lebesgue-type decomposition of a form t
// with respect to a form w.
//
// D_w t, the supremum of t : (n w) over n, is computed in closed form as the
// short of t to ker w (a Schur complement). The defining limit and the
// variational formulas are kept as independent oracles.

#include <vector>

#include "sesq/forms.hpp"

namespace sesq {

struct LebesgueDecomposition {
  Form regular;        // D_w t, the w-almost dominated part
  Form singular_part;  // t - D_w t, w-singular
  bool unique = false;
};

struct ShortDecomposition {
  Form ac_part;        // t_{ker w}, the w-absolutely continuous part
  Form singular_part;  // t - t_{ker w}
  bool unique = false;
};

/// (t : w)[x] = inf_y { t[x - y] + w[y] }, computed as T - T (T + W)^+ T.
Form parallel_sum(const Form& t, const Form& w, const Tolerances& tol = {});

/// Evaluates inf_y { t[x - y] + w[y] } directly as the least-squares problem
/// min_y || [T^1/2 (x - y); W^1/2 y] ||^2, i.e. a squared distance to the
/// range of the stacked factor, computed by column-pivoted QR. Shares no
/// code with parallel_sum beyond the square roots.
double parallel_sum_oracle(const Form& t, const Form& w, const Vector& x,
                           const Tolerances& tol = {});

/// t_M[x] = inf_{y in M} t[x - y]: the Schur complement of T in a basis
/// adapted to (M^⊥, M), embedded back into C^n.
Form short_to_subspace(const Form& t, const Subspace& m, const Tolerances& tol = {});

ShortDecomposition short_decompose(const Form& t, const Form& w, const Tolerances& tol = {});

/// D_w t.
Form lebesgue_ac_part(const Form& t, const Form& w, const Tolerances& tol = {});

struct LimitOracleResult {
  std::vector<double> scales;   // n = 1, 2, 4, ..., <= n_max
  std::vector<Form> iterates;   // t : (n w) for each n
  Form last;
  double gap = 0.0;             // ||last - previous||_2
};

/// Evaluates t : (n w) for n = 1, 2, 4, ..., n_max (n_max >= 2). Each
/// iterate is obtained from an orthogonal projection in the stacked
/// least-squares formulation, so it is PSD by construction and stays
/// accurate for large n.
LimitOracleResult lebesgue_limit_oracle(const Form& t, const Form& w, double n_max,
                                        const Tolerances& tol = {});

LebesgueDecomposition lebesgue_decompose(const Form& t, const Form& w,
                                         const Tolerances& tol = {});

/// t is a pointwise supremum of w-dominated forms, i.e. D_w t = t.
bool almost_dominated(const Form& t, const Form& w, const Tolerances& tol = {});

/// t[x - y*] for the minimizer y* of t[x - y] over y in ker w, found by
/// least squares (QR, not the Schur complement). The constant sequence x_n = y* is admissible in both
/// variational formulas for (D_w t)[x], so the value must equal
/// (D_w t)[x].
double ac_part_variational_check(const Form& t, const Form& w, const Vector& x,
                                 const Tolerances& tol = {});

/// D_w t and D_t w are almost dominated by each other.
bool mutual_ad_check(const Form& t, const Form& w, const Tolerances& tol = {});

}  // namespace sesq
