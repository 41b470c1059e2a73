#include <cmath>

#include "test_support.hpp"

namespace sesq {
namespace {

using namespace sesq::testing;

const Matrix kOnes = mat({{1, 1}, {1, 1}});

TEST(Infimum, Examples) {
  // diag(2,1) - diag(1,2) is indefinite and both D-parts are the forms themselves.
  EXPECT_LT(min_eigenvalue(diag({2, 1}) - diag({1, 2})), 0.0);
  const auto none = infimum(form(diag({2, 1})), form(diag({1, 2})));
  EXPECT_FALSE(none.exists);
  EXPECT_FALSE(none.value.has_value());
  EXPECT_EQ(none.witness, InfimumWitness::not_comparable);

  const auto id = infimum(Form::identity(2), scale(Form::identity(2), 2.0));
  ASSERT_TRUE(id.exists);
  EXPECT_LT(max_abs(id.value->matrix() - Matrix::Identity(2, 2)), 1e-12);
  EXPECT_EQ(id.witness, InfimumWitness::regular_leq_w);

  const auto zero = infimum(form(diag({1, 0})), form(kOnes * 0.5));
  ASSERT_TRUE(zero.exists);
  EXPECT_LT(max_abs(zero.value->matrix()), 1e-12);

  EXPECT_THROW(infimum(Form::identity(2), Form::identity(3)), DimensionError);
}

TEST(Infimum, ReversedBranch) {
  // t = 2I, w = I: D_w t = 2I is not below w, D_t w = I is below t.
  const auto r = infimum(scale(Form::identity(2), 2.0), Form::identity(2));
  ASSERT_TRUE(r.exists);
  EXPECT_EQ(r.witness, InfimumWitness::regular_leq_t_reversed);
  EXPECT_LT(max_abs(r.value->matrix() - Matrix::Identity(2, 2)), 1e-12);
}

TEST(Infimum, GreatestLowerBound) {
  Rng rng(51);
  int exists = 0;
  for (int i = 0; i < 60; ++i) {
    const auto p = random_pair(rng, 2 + i % 5);
    const auto r = infimum(p.t, p.w);
    ASSERT_EQ(r.exists, r.value.has_value());
    if (!r.exists) {
      continue;
    }
    ++exists;
    const Form& v = *r.value;
    EXPECT_TRUE(leq(v, p.t));
    EXPECT_TRUE(leq(v, p.w));
    const Form tw = parallel_sum(p.t, p.w);
    for (int k = 0; k < 100; ++k) {
      const Form s = random_lower_bound(rng, k % 2 == 0 ? tw : v);
      EXPECT_TRUE(leq(s, v));
    }
  }
  EXPECT_GT(exists, 10);
}

TEST(Infimum, ConditionsAgree) {
  Rng rng(52);
  int exists = 0;
  for (int i = 0; i < 300; ++i) {
    const auto p = random_pair(rng, 2 + i % 5);
    const Form dwt = lebesgue_ac_part(p.t, p.w);
    const Form dtw = lebesgue_ac_part(p.w, p.t);
    const bool comparable = leq(dtw, dwt) || leq(dwt, dtw);
    const bool lower_bound = leq(dtw, p.t) || leq(dwt, p.w);
    EXPECT_EQ(comparable, lower_bound);
    EXPECT_EQ(comparable, infimum(p.t, p.w).exists);
    exists += comparable;
  }
  EXPECT_GT(exists, 30);
  EXPECT_LT(exists, 270);
}

TEST(InfimumAlwaysExistsMinimal, Examples) {
  Rng rng(53);
  EXPECT_TRUE(infimum_always_exists_minimal(form(kOnes * 0.5), 100, rng));

  const Form e1 = form(diag({1, 0}));
  const auto r = infimum(e1, form(diag({0, 5})));
  ASSERT_TRUE(r.exists);
  EXPECT_LT(max_abs(r.value->matrix()), 1e-12);

  const Form t = random_form(rng, 4, 1);
  const auto multiple = infimum(t, scale(t, 3.0));
  ASSERT_TRUE(multiple.exists);
  EXPECT_LT(max_abs(multiple.value->matrix() - t.matrix()), 1e-10);

  EXPECT_THROW(infimum_always_exists_minimal(Form::identity(2), 10, rng), PreconditionError);
  EXPECT_THROW(infimum_always_exists_minimal(Form::zero(2), 10, rng), PreconditionError);
}

TEST(InfimumAlwaysExistsMinimal, RandomRankOne) {
  Rng rng(54);
  for (int i = 0; i < 20; ++i) {
    const Form t = random_form(rng, 2 + i % 5, 1);
    EXPECT_TRUE(infimum_always_exists_minimal(t, 20, rng));
  }
}

TEST(IsExtremeInInterval, Examples) {
  EXPECT_TRUE(is_extreme_in_interval(form(diag({1, 0})), Form::identity(2)));
  EXPECT_FALSE(is_extreme_in_interval(scale(Form::identity(2), 0.5), Form::identity(2)));
  const Form t = form(mat({{2, Complex(0, 1)}, {Complex(0, -1), 1}}));
  EXPECT_TRUE(is_extreme_in_interval(Form::zero(2), t));
  EXPECT_TRUE(is_extreme_in_interval(t, t));
  EXPECT_THROW(is_extreme_in_interval(Form::identity(2), form(diag({1, 0}))), PreconditionError);
}

TEST(IsExtremeInInterval, MidpointWitnesses) {
  Rng rng(55);
  int extreme = 0;
  int interior = 0;
  for (int i = 0; i < 200; ++i) {
    const Index n = 2 + i % 5;
    const Form t = random_form(rng, n, 1 + rng() % n);
    const Form u = i % 2 == 0 ? random_lower_bound(rng, t)
                              : extreme_generator(t, random_subspace(rng, n, rng() % (n + 1)));
    const bool is_extreme = is_extreme_in_interval(u, t);
    const auto witness = midpoint_witness(u, t);
    EXPECT_EQ(is_extreme, !witness.has_value());
    if (is_extreme) {
      ++extreme;
      EXPECT_FALSE(eigen_direction_witness(u, t));
    } else {
      ++interior;
      ASSERT_TRUE(witness.has_value());
      const Matrix mid = 0.5 * (witness->lower.matrix() + witness->upper.matrix());
      EXPECT_LT(max_abs(mid - u.matrix()), 1e-8);
      EXPECT_GT(max_abs(witness->upper.matrix() - witness->lower.matrix()), 1e-6);
      EXPECT_TRUE(leq(Form::zero(n), witness->lower));
      EXPECT_TRUE(leq(witness->lower, t));
      EXPECT_TRUE(leq(witness->upper, t));
    }
  }
  EXPECT_GT(extreme, 50);
  EXPECT_GT(interior, 50);
}

TEST(ExtremeGenerator, Examples) {
  const Subspace e1 = Subspace::from_basis(basis_vector(2, 0));
  EXPECT_LT(max_abs(extreme_generator(Form::identity(2), e1).matrix() - diag({1, 0})), 1e-12);

  const Form w = form(mat({{2, Complex(0, 1)}, {Complex(0, -1), 1}}));
  EXPECT_LT(max_abs(extreme_generator(w, Subspace::full(2)).matrix() - w.matrix()), 1e-12);

  // diag(2,1) P diag(2,1) with P = (1,1)(1,1)^T / 2.
  const Subspace diagonal = Subspace::from_basis(vec({1.0, 1.0}) / std::sqrt(2.0));
  const Form g = extreme_generator(form(diag({4, 1})), diagonal);
  EXPECT_LT(max_abs(g.matrix() - mat({{2, 1}, {1, 0.5}})), 1e-12);
  EXPECT_TRUE(is_extreme_in_interval(g, form(diag({4, 1}))));
}

TEST(ExtremeGenerator, SingularWeightRestrictsToRange) {
  // P = (1,1)(1,1)^T / 2 against w = diag(1, 0): the compression
  // W^1/2 P W^1/2 = diag(1/2, 0) is a midpoint, so P is first moved into ran w.
  const Subspace diagonal = Subspace::from_basis(vec({1.0, 1.0}) / std::sqrt(2.0));
  const Form w = form(diag({1, 0}));
  const Form g = extreme_generator(w, diagonal);
  EXPECT_LT(max_abs(g.matrix() - diag({1, 0})), 1e-12);
  EXPECT_TRUE(is_extreme_in_interval(g, w));
}

TEST(ExtremeGenerator, AlwaysExtreme) {
  Rng rng(56);
  for (int i = 0; i < 500; ++i) {
    const Index n = 2 + i % 7;
    const Form w = random_form(rng, n, rng() % (n + 1));
    const Form g = extreme_generator(w, random_subspace(rng, n, rng() % (n + 1)));
    EXPECT_TRUE(leq(g, w));
    EXPECT_TRUE(is_extreme_in_interval(g, w));
  }
}

TEST(SegmentExtremesCheck, Examples) {
  Rng rng(57);
  int singular_pairs = 0;
  for (int i = 0; i < 100; ++i) {
    const auto p = random_pair(rng, 2 + i % 5, PairKind::disjoint);
    const auto r = segment_extremes_check(p.t, p.w, 10, rng);
    EXPECT_TRUE(r.t_extreme);
    EXPECT_EQ(r.translated_failures, 0);
    EXPECT_TRUE(r.consistent);
    ++singular_pairs;
  }
  EXPECT_EQ(singular_pairs, 100);

  const auto same = segment_extremes_check(Form::identity(2), Form::identity(2), 10, rng);
  EXPECT_FALSE(same.t_extreme);
  EXPECT_GE(same.translated_failures, 1);
  EXPECT_TRUE(same.consistent);

  const Form t = form(mat({{2, 1}, {1, 1}}));
  const auto trivial = segment_extremes_check(t, Form::zero(2), 5, rng);
  EXPECT_TRUE(trivial.t_extreme);
  EXPECT_TRUE(trivial.consistent);

  EXPECT_THROW(segment_extremes_check(t, t, 0, rng), ValidationError);
}

TEST(SegmentExtremesCheck, RandomPairs) {
  Rng rng(58);
  for (int i = 0; i < 100; ++i) {
    const auto p = random_pair(rng, 2 + i % 5);
    EXPECT_TRUE(segment_extremes_check(p.t, p.w, 8, rng).consistent);
  }
}

}  // namespace
}  // namespace sesq
