#include <cmath>

#include "test_support.hpp"

namespace sesq {
namespace {

using namespace sesq::testing;

constexpr double kRecon = 1e-8;

void expect_unitary(const Matrix& v) {
  const Matrix eye = Matrix::Identity(v.cols(), v.cols());
  EXPECT_LT(max_abs(v.adjoint() * v - eye), 1e-10);
}

TEST(EigHermitian, Identity) {
  const auto e = eig_hermitian(HermitianPsd::from_matrix(Matrix::Identity(3, 3)));
  EXPECT_LT((e.values - RealVector::Ones(3)).cwiseAbs().maxCoeff(), 1e-14);
  expect_unitary(e.vectors);
}

TEST(EigHermitian, DiagonalSortedNonincreasing) {
  const auto e = eig_hermitian(HermitianPsd::from_matrix(diag({1, 2, 0})));
  EXPECT_NEAR(e.values(0), 2.0, 1e-14);
  EXPECT_NEAR(e.values(1), 1.0, 1e-14);
  EXPECT_NEAR(e.values(2), 0.0, 1e-14);
  // Eigenvectors are a permutation of the standard basis up to phase.
  EXPECT_NEAR(std::abs(e.vectors(1, 0)), 1.0, 1e-14);
  EXPECT_NEAR(std::abs(e.vectors(0, 1)), 1.0, 1e-14);
  EXPECT_NEAR(std::abs(e.vectors(2, 2)), 1.0, 1e-14);
}

TEST(EigHermitian, RankOneProjection) {
  const Matrix p = mat({{0.5, 0.5}, {0.5, 0.5}});
  const auto e = eig_hermitian(HermitianPsd::from_matrix(p));
  EXPECT_NEAR(e.values(0), 1.0, 1e-14);
  EXPECT_NEAR(e.values(1), 0.0, 1e-14);
  // Eigenvector for 1 is (1, 1)/sqrt(2) up to phase.
  const Vector v = e.vectors.col(0);
  EXPECT_NEAR(std::abs(v.dot(vec({1.0, 1.0}) / std::sqrt(2.0))), 1.0, 1e-14);
}

TEST(EigHermitian, ReconstructsRandomMatrices) {
  Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    const Index n = 1 + i % 8;
    const Form t = random_form(rng, n, i % (n + 1));
    const auto& e = eig_hermitian(t.psd());
    const Matrix back = e.vectors * e.values.cast<Complex>().asDiagonal() * e.vectors.adjoint();
    EXPECT_LT(max_abs(back - t.matrix()), kRecon);
    expect_unitary(e.vectors);
    for (Index k = 1; k < n; ++k) {
      EXPECT_GE(e.values(k - 1), e.values(k));
    }
  }
}

TEST(HermitianPsd, RejectsInvalidInput) {
  EXPECT_THROW(HermitianPsd::from_matrix(Matrix::Zero(2, 3)), DimensionError);
  EXPECT_THROW(HermitianPsd::from_matrix(mat({{1, 2}, {0, 1}})), NotPsdError);
  EXPECT_THROW(HermitianPsd::from_matrix(diag({1, -1})), NotPsdError);
  Matrix nan = Matrix::Identity(2, 2);
  nan(0, 1) = Complex(std::nan(""), 0.0);
  EXPECT_THROW(HermitianPsd::from_matrix(nan), ValidationError);
}

TEST(HermitianPsd, ClampsTinyNegativeEigenvalues) {
  const auto m = HermitianPsd::from_matrix(diag({1.0, -1e-12}));
  EXPECT_EQ(m.eig().values(1), 0.0);
  // Input bits are kept.
  EXPECT_EQ(m.matrix()(1, 1), Complex(-1e-12, 0.0));
}

TEST(HermitianPsd, DenoisedZeroesEigenvaluesBelowScale) {
  const auto m = HermitianPsd::denoised(diag({1e-13, 0.0}), 1.0);
  EXPECT_EQ(max_abs(m.matrix()), 0.0);
  EXPECT_EQ(rank(m), 0);
}

TEST(Pinv, Examples) {
  EXPECT_LT(max_abs(pinv(HermitianPsd::from_matrix(diag({2, 0}))).matrix() - diag({0.5, 0})), 1e-14);
  EXPECT_LT(max_abs(pinv(HermitianPsd::identity(4)).matrix() - Matrix::Identity(4, 4)), 1e-14);
  const Matrix p = mat({{0.5, 0.5}, {0.5, 0.5}});
  EXPECT_LT(max_abs(pinv(HermitianPsd::from_matrix(p)).matrix() - p), 1e-14);
}

TEST(Pinv, ProjectsOntoRange) {
  Rng rng(12);
  for (int i = 0; i < 200; ++i) {
    const Index n = 1 + i % 8;
    const Form t = random_form(rng, n, rng() % (n + 1));
    const Matrix& m = t.matrix();
    const Matrix mp = pinv(t.psd()).matrix();
    EXPECT_LT(max_abs(m * mp * m - m), kRecon);
    const Matrix proj = m * mp;
    EXPECT_LT(max_abs(proj * proj - proj), kRecon);
    EXPECT_LT(max_abs(proj - proj.adjoint()), kRecon);
    EXPECT_LT(max_abs(proj * m - m), kRecon);
    EXPECT_GE(min_eigenvalue(mp), -1e-12 * (1.0 + hermitian_norm(mp)));
  }
}

TEST(SqrtPsd, Examples) {
  EXPECT_LT(max_abs(sqrt_psd(HermitianPsd::from_matrix(diag({4, 0}))).matrix() - diag({2, 0})), 1e-14);
  EXPECT_LT(max_abs(sqrt_psd(HermitianPsd::identity(3)).matrix() - Matrix::Identity(3, 3)), 1e-14);
  const Matrix p = mat({{0.5, 0.5}, {0.5, 0.5}});
  EXPECT_LT(max_abs(sqrt_psd(HermitianPsd::from_matrix(p)).matrix() - p), 1e-14);
}

TEST(SqrtPsd, SquaresBack) {
  Rng rng(13);
  for (int i = 0; i < 200; ++i) {
    const Index n = 1 + i % 8;
    const Form t = random_form(rng, n, rng() % (n + 1));
    const Matrix r = sqrt_psd(t.psd()).matrix();
    EXPECT_LT(max_abs(r * r - t.matrix()), kRecon);
    EXPECT_GE(min_eigenvalue(r), -1e-12);
  }
}

TEST(KernelSubspace, Examples) {
  const Subspace k1 = kernel_subspace(HermitianPsd::from_matrix(diag({1, 0})));
  ASSERT_EQ(k1.dim(), 1);
  EXPECT_NEAR(std::abs(k1.basis()(1, 0)), 1.0, 1e-14);

  EXPECT_EQ(kernel_subspace(HermitianPsd::identity(3)).dim(), 0);

  const Subspace k3 = kernel_subspace(HermitianPsd::from_matrix(mat({{1, 1}, {1, 1}})));
  ASSERT_EQ(k3.dim(), 1);
  const Vector expected = vec({1.0, -1.0}) / std::sqrt(2.0);
  EXPECT_NEAR(std::abs(expected.dot(k3.basis().col(0))), 1.0, 1e-14);
}

TEST(KernelSubspace, OrthogonalToRange) {
  Rng rng(14);
  for (int i = 0; i < 200; ++i) {
    const Index n = 1 + i % 8;
    const Form t = random_form(rng, n, rng() % (n + 1));
    const Subspace k = kernel_subspace(t.psd());
    EXPECT_EQ(k.dim(), n - rank(t.psd()));
    EXPECT_LT(max_abs(k.basis().adjoint() * t.matrix()), kRecon);
  }
}

TEST(RangeIntersectionRank, Examples) {
  const auto h = [](const Matrix& m) { return HermitianPsd::from_matrix(m); };
  EXPECT_EQ(range_intersection_rank(h(diag({1, 0})), h(diag({0, 1}))), 0);
  EXPECT_EQ(range_intersection_rank(HermitianPsd::identity(4), HermitianPsd::identity(4)), 4);
  EXPECT_EQ(range_intersection_rank(h(diag({1, 0, 0})), h(diag({1, 1, 0}))), 1);
  EXPECT_THROW(range_intersection_rank(HermitianPsd::identity(2), HermitianPsd::identity(3)),
               DimensionError);
}

TEST(RangeIntersectionRank, MatchesConstructedOverlap) {
  Rng rng(15);
  for (int i = 0; i < 100; ++i) {
    const Index n = 2 + i % 7;
    const Matrix q = random_unitary(rng, n);
    const Index shared = static_cast<Index>(rng() % (n / 2 + 1));
    const Index only_a = static_cast<Index>(rng() % (n - 2 * shared + 1));
    const Index only_b = n - 2 * shared - only_a > 0 ? static_cast<Index>(rng() % (n - 2 * shared - only_a + 1)) : 0;
    // ran a = q[0, shared + only_a); ran b = q[0, shared) plus only_b
    // columns orthogonal to ran a.
    Matrix span_b(n, shared + only_b);
    span_b << q.leftCols(shared), q.middleCols(shared + only_a, only_b);
    const Form a = random_form_on(rng, q.leftCols(shared + only_a));
    const Form b = random_form_on(rng, span_b);
    EXPECT_EQ(range_intersection_rank(a.psd(), b.psd()), shared);
  }
}

TEST(Subspace, ComplementAndSpan) {
  Rng rng(16);
  const Subspace s = random_subspace(rng, 5, 2);
  const Subspace c = s.complement();
  EXPECT_EQ(c.dim(), 3);
  EXPECT_LT(max_abs(s.basis().adjoint() * c.basis()), 1e-12);
  EXPECT_LT(max_abs(s.projection() + c.projection() - Matrix::Identity(5, 5)), 1e-12);

  Matrix dependent(3, 3);
  dependent << vec({1, 0, 0}), vec({2, 0, 0}), vec({0, 1, 0});
  EXPECT_EQ(Subspace::span_of(dependent, 3).dim(), 2);
  EXPECT_THROW(Subspace::from_basis(mat({{1, 1}, {0, 1}})), ValidationError);
}

TEST(Tolerances, Validate) {
  Tolerances tol;
  EXPECT_NO_THROW(tol.validate());
  tol.recon = 0.0;
  EXPECT_THROW(tol.validate(), ValidationError);
}

}  // namespace
}  // namespace sesq
