#include <gtest/gtest.h>

#include <random>

#include "orbifold/linalg.hpp"

using namespace orbifold;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int zeros = 2) {
  Matrix a(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (rng() % (zeros + 1)) a(i, j) = Scalar(static_cast<long>(rng() % 7) - 3);
  return a;
}

Matrix m(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Vector> v;
  for (auto r : rows) {
    Vector row;
    for (long x : r) row.emplace_back(x);
    v.push_back(row);
  }
  return Matrix::from_rows(v, v.front().size());
}

}  // namespace

TEST(Rref, HandExample) {
  Matrix a = m({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  auto piv = rref(a);
  EXPECT_EQ(piv, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(a, m({{1, 0, 1}, {0, 1, 1}, {0, 0, 0}}));
}

TEST(Nullspace, HandExample) {
  Subspace ns = nullspace(m({{1, 2, 3}, {2, 4, 6}}));
  ASSERT_EQ(ns.dim(), 2u);
  EXPECT_TRUE(ns.contains({Scalar(-2), Scalar(1), Scalar(0)}));
  EXPECT_TRUE(ns.contains({Scalar(-3), Scalar(0), Scalar(1)}));
  EXPECT_FALSE(ns.contains({Scalar(1), Scalar(0), Scalar(0)}));
}

TEST(Nullspace, RankNullityOnRandomMatrices) {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 200; ++it) {
    std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    Matrix a = random_matrix(rng, r, c);
    Subspace ns = nullspace(a);
    EXPECT_EQ(ns.dim() + rank(a), c);
    for (const auto& v : ns.basis()) EXPECT_TRUE(is_zero(a * v));
  }
}

TEST(Rref, Idempotent) {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 100; ++it) {
    Matrix a = random_matrix(rng, 4, 5);
    rref(a);
    Matrix b = a;
    rref(b);
    EXPECT_EQ(a, b);
  }
}

TEST(SolveAffine, ResidualIsZeroAndInconsistencyDetected) {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 100; ++it) {
    Matrix a = random_matrix(rng, 5, 4);
    Vector x(4);
    for (auto& s : x) s = Scalar(static_cast<long>(rng() % 5) - 2);
    Vector b = a * x;
    auto sol = solve_affine(a, b);
    ASSERT_TRUE(sol);
    EXPECT_EQ(a * sol->particular, b);
    EXPECT_TRUE(sol->homogeneous.contains(x - sol->particular));
  }
  EXPECT_FALSE(solve_affine(m({{1, 1}, {1, 1}}), {Scalar(1), Scalar(2)}));
  EXPECT_THROW(solve_affine(m({{1, 1}}), {Scalar(1), Scalar(2)}), std::invalid_argument);
}

TEST(Subspace, CanonicalBasisMakesEqualityStructural) {
  Subspace a = Subspace::from_spanning(3, {{Scalar(1), Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1), Scalar(1)}});
  Subspace b = Subspace::from_spanning(3, {{Scalar(1), Scalar(2), Scalar(1)}, {Scalar(1), Scalar(0), Scalar(-1)}});
  EXPECT_EQ(a, b);
  auto co = a.coordinates({Scalar(2), Scalar(3), Scalar(1)});
  ASSERT_TRUE(co);
  EXPECT_FALSE(a.coordinates({Scalar(1), Scalar(0), Scalar(0)}));
  Subspace line = Subspace::from_spanning(3, {{Scalar(1), Scalar(0), Scalar(-1)}});
  EXPECT_EQ(a.intersect(line), line);
  EXPECT_EQ(a.intersect(Subspace::from_spanning(3, {{Scalar(1), Scalar(0), Scalar(0)}})).dim(), 0u);
  EXPECT_EQ(Subspace::full(3).dim(), 3u);
}

TEST(Determinant, MultiplicativeAndInverse) {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 100; ++it) {
    Matrix a = random_matrix(rng, 3, 3, 4), b = random_matrix(rng, 3, 3, 4);
    EXPECT_EQ(determinant(a * b), determinant(a) * determinant(b));
    if (!determinant(a).is_zero()) {
      EXPECT_TRUE((a * inverse(a)).is_identity());
    } else {
      EXPECT_THROW(inverse(a), std::domain_error);
    }
  }
}

TEST(Matrix, AdjointConjugatesEntries) {
  const auto& ctx = CyclotomicContext::get(3);
  Scalar w = Scalar::root_of_unity(ctx, 3);
  Matrix a(1, 2, {w, Scalar(2)});
  Matrix h = a.adjoint();
  EXPECT_EQ(h.rows(), 2u);
  EXPECT_EQ(h(0, 0), w * w);
  EXPECT_EQ(h(1, 0), Scalar(2));
}
