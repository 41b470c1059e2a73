#pragma once

// Nonnegative sesquilinear forms on C^n and the binary relations between them.
//
// Convention: a form t with matrix T acts as t(x, y) = y^H T x, so it is
// linear in the first argument and antilinear in the second, and
// t[x] = t(x, x) = x^H T x >= 0.

#include <optional>

#include "sesq/numeric.hpp"

namespace sesq {

class Form {
 public:
  Form() = default;
  explicit Form(HermitianPsd m) : matrix_(std::move(m)) {}

  /// Validating constructor for external matrices.
  static Form from_matrix(const Matrix& m, const Tolerances& tol = {}) {
    return Form(HermitianPsd::from_matrix(m, tol));
  }
  static Form zero(Index dim) { return Form(HermitianPsd::zero(dim)); }
  static Form identity(Index dim) { return Form(HermitianPsd::identity(dim)); }

  Index dim() const { return matrix_.dim(); }
  const HermitianPsd& psd() const { return matrix_; }
  const Matrix& matrix() const { return matrix_.matrix(); }

  /// t(x, y) = y^H T x.
  Complex operator()(const Vector& x, const Vector& y) const;

  /// t[x] = x^H T x.
  double quadratic(const Vector& x) const;

  /// Largest eigenvalue of T (the operator norm).
  double norm() const { return matrix_.max_eigenvalue(); }

 private:
  HermitianPsd matrix_;
};

/// t + w.
Form operator+(const Form& t, const Form& w);

/// c * t for c >= 0.
Form scale(const Form& t, double c);

/// t - s, for s <= t. Eigenvalues that are negative or below the rank
/// threshold of t are set to zero.
Form subtract(const Form& t, const Form& s, const Tolerances& tol = {});

/// Throws DimensionError unless t and w act on the same space.
void require_same_dim(const Form& t, const Form& w, const char* op);

/// t <= w, i.e. W - T is PSD within tol.psd.
bool leq(const Form& t, const Form& w, const Tolerances& tol = {});

/// Least c >= 0 with t <= c w, or nothing if t is not dominated by w.
std::optional<double> domination_constant(const Form& t, const Form& w,
                                          const Tolerances& tol = {});

/// w[x] = 0 implies t[x] = 0, i.e. ker W ⊆ ker T.
bool absolutely_continuous(const Form& t, const Form& w, const Tolerances& tol = {});

/// The sequential closability condition. On a finite-dimensional space the
/// canonical embedding H_w -> H_t is always closable once it is defined, so
/// this agrees with absolutely_continuous.
bool strongly_absolutely_continuous(const Form& t, const Form& w, const Tolerances& tol = {});

/// t ⊥ w: the only form below both is zero, i.e. ran T ∩ ran W = {0}.
bool singular(const Form& t, const Form& w, const Tolerances& tol = {});

/// Nonzero and every lower bound is a scalar multiple; exactly rank one.
bool is_minimal(const Form& t, const Tolerances& tol = {});

/// The space X / ker t with inner product (x + ker t | y + ker t)_t = t(x, y).
/// Cosets are represented by coordinates a = B^H x in the orthonormal basis
/// B of (ker T)^⊥; in these coordinates (a | b)_t = b^H G a with G = B^H T B.
struct QuotientSpace {
  Index source_dim = 0;
  Form form;
  Subspace coset_basis;
  HermitianPsd gram;

  Index dim() const { return coset_basis.dim(); }

  /// Quotient coordinates of x + ker t.
  Vector coordinates(const Vector& x) const { return coset_basis.basis().adjoint() * x; }

  /// (a | b)_t for quotient coordinates a, b.
  Complex inner(const Vector& a, const Vector& b) const { return b.dot(gram.matrix() * a); }

  double norm(const Vector& a) const;
};

QuotientSpace quotient_space(const Form& t, const Tolerances& tol = {});

}  // namespace sesq
