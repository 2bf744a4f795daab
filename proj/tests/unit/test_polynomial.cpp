#include <gtest/gtest.h>

#include <random>

#include "corpus.hpp"
#include "orbifold/polynomial.hpp"

using namespace orbifold;

namespace {

const std::vector<std::string> xyz = {"x", "y", "z"};

Polynomial random_poly(std::mt19937_64& rng, std::size_t n, int max_deg) {
  Polynomial p(n);
  for (const auto& e : monomials_in_range(n, 0, max_deg))
    if (rng() % 3 == 0) p.add_term(e, Scalar(static_cast<long>(rng() % 5) - 2));
  return p;
}

long binomial(long n, long k) {
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST(Polynomial, ArithmeticAndPrinting) {
  Polynomial x = Polynomial::variable(3, 0), y = Polynomial::variable(3, 1), z = Polynomial::variable(3, 2);
  Polynomial p = x * x * y - Scalar(Rational(3, 2)) * z + Polynomial::constant(3, 1);
  EXPECT_EQ(p.to_string(xyz), "x^2*y - 3/2*z + 1");
  EXPECT_EQ(p.degree(), 3);
  EXPECT_FALSE(p.is_homogeneous(3));
  EXPECT_TRUE(p.part(3).is_homogeneous(3));
  EXPECT_EQ(p.constant_term(), Scalar(1));
  EXPECT_EQ(p.linear_part(), (Vector{Scalar(0), Scalar(0), Scalar(Rational(-3, 2))}));
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ((p - p).degree(), -1);
  EXPECT_EQ(Polynomial(3).to_string(xyz), "0");
  EXPECT_EQ((x - y).to_string(xyz), "x - y");
}

TEST(Polynomial, RingAxioms) {
  std::mt19937_64 rng(17);
  for (int it = 0; it < 100; ++it) {
    Polynomial a = random_poly(rng, 3, 2), b = random_poly(rng, 3, 2), c = random_poly(rng, 3, 1);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
  }
}

TEST(Polynomial, MonomialEnumeration) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (int d = 0; d <= 4; ++d)
      EXPECT_EQ(static_cast<long>(monomials_of_degree(n, d).size()), binomial(n + d - 1, d));
  auto m2 = monomials_of_degree(3, 2);
  EXPECT_EQ(monomial_string(m2.front(), xyz), "x^2");
  EXPECT_EQ(monomial_string(m2[1], xyz), "x*y");
  EXPECT_EQ(monomial_string(m2.back(), xyz), "z^2");
  EXPECT_EQ(monomial_string({0, 0, 0}, xyz), "1");
  EXPECT_EQ(default_basis_names(3), xyz);
  EXPECT_EQ(default_basis_names(4).back(), "v4");
}

TEST(Polynomial, GroupActionIsAnAction) {
  std::mt19937_64 rng(23);
  for (const auto& gc : orbifold::testing::small_groups()) {
    const Group& G = *gc.group;
    for (int it = 0; it < 5; ++it) {
      Polynomial p = random_poly(rng, G.dim(), 2);
      int g = static_cast<int>(rng() % G.order()), h = static_cast<int>(rng() % G.order());
      EXPECT_EQ(act(G, G.multiply(g, h), p), act(G, g, act(G, h, p))) << gc.label;
      EXPECT_EQ(act(G, Group::identity(), p), p);
    }
  }
}

TEST(Polynomial, ActionOnVariablesMatchesMatrix) {
  auto spec = orbifold::testing::load_bundled("sl2");
  const Group& G = *spec.group;
  int g = G.parse_word("g");
  // ^g e = f, ^g h = -h
  EXPECT_EQ(act(G, g, Polynomial::variable(3, 0)), Polynomial::variable(3, 1));
  EXPECT_EQ(act(G, g, Polynomial::variable(3, 2)), -Polynomial::variable(3, 2));
}
