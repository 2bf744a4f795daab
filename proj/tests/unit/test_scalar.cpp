#include <gtest/gtest.h>

#include "orbifold/expression.hpp"
#include "orbifold/scalar.hpp"

using namespace orbifold;

namespace {

const CyclotomicContext& Q() { return CyclotomicContext::rationals(); }
const CyclotomicContext& Q3() { return CyclotomicContext::get(3); }
const CyclotomicContext& Q12() { return CyclotomicContext::get(12); }

ParseError::Kind kind_of(std::string_view text, const CyclotomicContext& ctx) {
  try {
    parse_scalar(text, ctx);
  } catch (const ParseError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error for " << text;
  return ParseError::Kind::Syntax;
}

}  // namespace

TEST(CyclotomicPolynomial, SmallOrders) {
  EXPECT_EQ(cyclotomic_polynomial(1), (std::vector<long>{-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(4), (std::vector<long>{1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6), (std::vector<long>{1, -1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), (std::vector<long>{1, 0, -1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(8), (std::vector<long>{1, 0, 0, 0, 1}));
}

TEST(CyclotomicPolynomial, PrescanTakesLcm) {
  EXPECT_EQ(required_cyclotomic_order("1/2 + x"), 1);
  EXPECT_EQ(required_cyclotomic_order("E(3) + E( 4 )^2"), 12);
  EXPECT_EQ(required_cyclotomic_order("[\"E(6)\", \"E(4)\"]"), 12);
}

TEST(Scalar, RationalArithmetic) {
  EXPECT_EQ(parse_scalar("1/2 + 3", Q()), Scalar(Rational(7, 2)));
  EXPECT_EQ(parse_scalar("-(2 - 5)*2^3", Q()), Scalar(24));
  EXPECT_EQ(parse_scalar("2^-2", Q()), Scalar(Rational(1, 4)));
  EXPECT_EQ(parse_scalar("(1/3)^(-1)", Q()), Scalar(3));
  EXPECT_TRUE(parse_scalar("0*7", Q()).is_zero());
}

TEST(Scalar, RootsOfUnity) {
  Scalar w = parse_scalar("E(3)", Q3());
  EXPECT_EQ(w.pow(3), Scalar(1));
  EXPECT_TRUE((Scalar(1) + w + w * w).is_zero());
  EXPECT_EQ(parse_scalar("E(4)^2", CyclotomicContext::get(4)), Scalar(-1));
  EXPECT_EQ(parse_scalar("E(3)^2", Q12()), parse_scalar("E(12)^8", Q12()));
  EXPECT_EQ(parse_scalar("E(1)", Q()), Scalar(1));
  EXPECT_EQ(parse_scalar("E(2)", CyclotomicContext::get(2)), Scalar(-1));
}

TEST(Scalar, RationalValuesShareOneRepresentation) {
  Scalar a = parse_scalar("E(3) + E(3)^2", Q3());
  EXPECT_TRUE(a.is_rational());
  EXPECT_EQ(a, Scalar(-1));
  EXPECT_EQ(a.hash(), Scalar(-1).hash());
}

TEST(Scalar, InverseAndConjugate) {
  for (const char* text : {"1 + E(3)", "2 - 3*E(3)", "E(3)^2", "1/5"}) {
    Scalar a = parse_scalar(text, Q3());
    EXPECT_EQ(a * a.inverse(), Scalar(1)) << text;
    EXPECT_EQ(a / a, Scalar(1)) << text;
  }
  Scalar w = parse_scalar("E(3)", Q3());
  EXPECT_EQ(w.conjugate(), w * w);
  EXPECT_EQ((w * w.conjugate()), Scalar(1));
  EXPECT_THROW(Scalar().inverse(), std::domain_error);
}

TEST(Scalar, PrintsCanonically) {
  EXPECT_EQ(parse_scalar("E(3)^2", Q3()).to_string(), "-1 - E(3)");
  EXPECT_EQ(parse_scalar("3/2*E(4)", CyclotomicContext::get(4)).to_string(), "3/2*E(4)");
  EXPECT_EQ(Scalar(Rational(-5, 3)).to_string(), "-5/3");
  EXPECT_EQ(Scalar().to_string(), "0");
  // Printed form parses back to the same value.
  for (const char* text : {"E(12)^5 - 1/7", "2*E(12) + E(12)^3", "-E(12)^11"}) {
    Scalar a = parse_scalar(text, Q12());
    EXPECT_EQ(parse_scalar(a.to_string(), Q12()), a) << text;
  }
}

TEST(Scalar, MixedContexts) {
  Scalar w = parse_scalar("E(3)", Q3());
  Scalar half(Rational(1, 2));
  EXPECT_EQ((w + half) - w, half);
  Scalar i = parse_scalar("E(4)", CyclotomicContext::get(4));
  EXPECT_THROW(w + i, std::domain_error);
}

TEST(Scalar, ParseErrors) {
  EXPECT_EQ(kind_of("1/0", Q()), ParseError::Kind::DivisionByZero);
  EXPECT_EQ(kind_of("E(5)", Q3()), ParseError::Kind::RootOrder);
  EXPECT_EQ(kind_of("E(0)", Q3()), ParseError::Kind::Domain);
  EXPECT_EQ(kind_of("x + 1", Q()), ParseError::Kind::UnknownSymbol);
  EXPECT_EQ(kind_of("1 +", Q()), ParseError::Kind::Syntax);
  EXPECT_EQ(kind_of("(1", Q()), ParseError::Kind::Syntax);
  EXPECT_EQ(kind_of("0^-1", Q()), ParseError::Kind::DivisionByZero);
}

TEST(Scalar, ErrorPositionPointsIntoInput) {
  try {
    parse_scalar("1 + 2 + foo", Q());
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 8u);
  }
}
