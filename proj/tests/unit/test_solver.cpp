#include <gtest/gtest.h>

#include <random>

#include "corpus.hpp"
#include "orbifold/solver.hpp"

using namespace orbifold;
using orbifold::testing::load_bundled;

namespace {

bool linear_conditions_hold(const KappaParameter& k) {
  ConditionReport r = check_conditions(k);
  return r[Condition::Invariance].passed && r[Condition::Linear].passed;
}

}  // namespace

TEST(SolveLinear, TrivialGroupHasEveryBracket) {
  auto spec = load_bundled("trivial2");
  ParameterSpace s = solve_linear_part(spec.group);
  EXPECT_EQ(s.dimension(), 2u);
  EXPECT_EQ(s.in_representative_space, (std::vector<bool>{true, true}));
  EXPECT_EQ(solve_linear_part(orbifold::testing::small_groups()[1].group).dimension(), 9u);
}

TEST(SolveLinear, BasisSatisfiesConditionsAndMembershipMatchesChecker) {
  std::mt19937_64 rng(73);
  for (const auto& gc : orbifold::testing::small_groups()) {
    ParameterSpace s = solve_linear_part(gc.group);
    EXPECT_EQ(s.in_representative_space.size(), s.dimension());
    for (const auto& b : s.basis) EXPECT_TRUE(linear_conditions_hold(b)) << gc.label;
    for (int it = 0; it < 10; ++it) {
      KappaParameter k(gc.group);
      auto [i, j] = k.pair_at(rng() % k.pair_count());
      Vector v(gc.group->dim());
      v[rng() % v.size()] = Scalar(1);
      k.set_linear(static_cast<int>(rng() % gc.group->order()), i, j, v);
      if (!s.basis.empty() && rng() % 2) k += s.basis[rng() % s.basis.size()];
      EXPECT_EQ(s.contains(k), linear_conditions_hold(k)) << gc.label;
    }
  }
}

TEST(SolveLinear, ContainsBundledLinearParts) {
  for (const char* name : {"klein", "s3", "sl2"}) {
    auto spec = load_bundled(name);
    EXPECT_TRUE(solve_linear_part(spec.group).contains(*spec.kappa)) << name;
  }
  auto bad = load_bundled("klein_bad");
  EXPECT_FALSE(solve_linear_part(bad.group).contains(*bad.kappa));
}

TEST(SolveConstant, Sl2HasTwoParameters) {
  auto spec = load_bundled("sl2");
  ParameterSpace s = solve_constant_part(*spec.kappa);
  ASSERT_FALSE(s.empty());
  EXPECT_EQ(s.dimension(), 2u);
  EXPECT_TRUE(s.contains(*spec.kappa));
  EXPECT_TRUE(s.contains(spec.kappa->linear_part()));
  // (t1, t2) = (1, 0): [e,h] = -2e - 1, [h,f] = -2f - 1
  KappaParameter t1 = spec.kappa->linear_part();
  t1.set_constant(Group::identity(), 0, 2, Scalar(-1));
  t1.set_constant(Group::identity(), 1, 2, Scalar(1));
  EXPECT_TRUE(s.contains(t1));
  EXPECT_TRUE(check_conditions(t1).passed());
  KappaParameter off = *spec.kappa;
  off.set_constant(Group::identity(), 0, 1, Scalar(1));
  EXPECT_FALSE(s.contains(off));
  for (const auto& b : s.basis) EXPECT_TRUE(check_conditions(*s.particular + b).passed());
}

TEST(SolveConstant, KleinOnlyZero) {
  auto spec = load_bundled("klein");
  ParameterSpace s = solve_constant_part(*spec.kappa);
  ASSERT_FALSE(s.empty());
  EXPECT_EQ(s.dimension(), 0u);
  EXPECT_TRUE(s.contains(*spec.kappa));
  EXPECT_TRUE(s.particular->constant_zero());
}

TEST(SolveConstant, EmptyWhenMixedConditionUnsolvable) {
  // [x,y] = x, [y,z] = y on the trivial group fails Jacobi; no constant part helps.
  GroupPtr G = orbifold::testing::small_groups()[1].group;
  KappaParameter k(G);
  k.set_linear(0, 0, 1, {Scalar(1), Scalar(0), Scalar(0)});
  k.set_linear(0, 1, 2, {Scalar(0), Scalar(1), Scalar(0)});
  ParameterSpace s = solve_constant_part(k);
  EXPECT_TRUE(s.empty());
  EXPECT_FALSE(s.contains(k));
  EXPECT_THROW(s.combination({}), std::logic_error);
}

TEST(SolveConstant, RejectsInadmissibleLinearPart) {
  EXPECT_THROW(solve_constant_part(*load_bundled("klein_bad").kappa), std::invalid_argument);
}

TEST(SolveConstant, SolutionsPassEveryCondition) {
  std::mt19937_64 rng(79);
  for (const auto& kc : orbifold::testing::random_kappa_corpus(83, 30)) {
    ConditionReport r = check_conditions(kc.kappa);
    if (!r[Condition::Invariance].passed || !r[Condition::Linear].passed) continue;
    ParameterSpace s = solve_constant_part(kc.kappa);
    EXPECT_EQ(s.contains(kc.kappa), r.passed()) << kc.label;
    if (s.empty()) continue;
    Vector c(s.dimension());
    for (auto& x : c) x = orbifold::testing::small_scalar(rng);
    EXPECT_TRUE(check_conditions(s.combination(c)).passed()) << kc.label;
  }
}
