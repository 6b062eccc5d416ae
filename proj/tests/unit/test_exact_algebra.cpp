#include "nkc/error.hpp"
#include "nkc/scalar.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace nkc;

namespace {

const std::vector<std::string> kLambda = {"lambda"};

Scalar P(const std::string& text, const std::vector<std::string>& params = kLambda) {
  return parse_scalar(text, params);
}

}  // namespace

TEST(Rational, CanonicalForm) {
  Rational r(Rational::Int(6), Rational::Int(-4));
  EXPECT_EQ(r.str(), "-3/2");
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(Rational(0).str(), "0");
  EXPECT_THROW(Rational(Rational::Int(1), Rational::Int(0)), DomainError);
  EXPECT_THROW(Rational(1) / Rational(0), DomainError);
}

TEST(Rational, ExactSqrt) {
  EXPECT_EQ(*Rational(Rational::Int(9), Rational::Int(4)).exact_sqrt(), Rational(Rational::Int(3), Rational::Int(2)));
  EXPECT_FALSE(Rational(2).exact_sqrt());
  EXPECT_FALSE(Rational(-4).exact_sqrt());
}

TEST(Scalar, RingExamples) {
  EXPECT_EQ((P("1+lambda") + P("1-lambda")).str(), "2");
  EXPECT_EQ((P("1+lambda") * P("1-lambda")).str(), "1-lambda^2");
  const std::vector<std::string> k = {"kappa"};
  EXPECT_TRUE(is_zero(P("0", k) * P("kappa-1", k)));
}

TEST(Scalar, Substitute) {
  EXPECT_EQ(P("1-lambda^2").substitute({{"lambda", Rational(Rational::Int(1), Rational::Int(2))}}),
            Rational(Rational::Int(3), Rational::Int(4)));
  const std::vector<std::string> nk = {"n", "kappa"};
  EXPECT_EQ(P("2*n*(2*n-2+kappa)", nk).substitute({{"n", Rational(1)}, {"kappa", Rational(1)}}), Rational(2));
  EXPECT_EQ(Scalar(Rational(7)).substitute({}), Rational(7));
  EXPECT_THROW(P("lambda").substitute({}), IncompleteAssignment);
  // Unused parameters need no assignment.
  EXPECT_EQ((P("lambda") - P("lambda")).substitute({}), Rational(0));
}

TEST(Scalar, IsZero) {
  EXPECT_TRUE(is_zero(P("1+lambda") * P("1-lambda") - P("1-lambda^2")));
  EXPECT_FALSE(is_zero(parse_scalar("kappa-1", std::vector<std::string>{"kappa"})));
  EXPECT_TRUE(is_zero(P("0/5")));
}

TEST(Scalar, ParseExamples) {
  EXPECT_EQ(P("1+lambda").str(), "1+lambda");
  EXPECT_EQ(P("-(1+lambda)").str(), "-1-lambda");
  const std::vector<std::string> nk = {"n", "kappa"};
  Scalar tau = parse_scalar("2*n*(2*n-2+kappa)", nk);
  EXPECT_EQ(tau, parse_scalar("4*n^2-4*n+2*n*kappa", nk));
}

TEST(Scalar, ParseUnaryMinusBindsTighterThanPower) {
  EXPECT_EQ(P("-lambda^2"), P("lambda^2"));
  EXPECT_EQ(P("-1*lambda^2").str(), "-1*lambda^2");
  EXPECT_EQ(P(P("-1*lambda^2").str()), P("-1*lambda^2"));
}

TEST(Scalar, ParseErrors) {
  try {
    P("1+mu");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
    EXPECT_NE(std::string(e.what()).find("unknown identifier"), std::string::npos);
  }
  EXPECT_THROW(P("1/lambda"), ParseError);
  EXPECT_THROW(P("(1+lambda"), ParseError);
  EXPECT_THROW(P("1/0"), ParseError);
  EXPECT_THROW(P("2 3"), ParseError);
  EXPECT_THROW(P(""), ParseError);
  EXPECT_THROW(P("lambda^-1"), ParseError);
}

TEST(Scalar, ParameterMismatch) {
  Scalar a = parse_scalar("lambda", std::vector<std::string>{"lambda"});
  Scalar b = parse_scalar("kappa", std::vector<std::string>{"kappa"});
  EXPECT_THROW(a + b, ParameterMismatch);
  EXPECT_EQ((a + Scalar(1)).str(), "1+lambda");
}

TEST(Scalar, ExactDivide) {
  auto q = exact_divide(P("1-lambda^2"), P("1+lambda"));
  ASSERT_TRUE(q);
  EXPECT_EQ(q->str(), "1-lambda");
  EXPECT_FALSE(exact_divide(P("1+lambda^2"), P("1+lambda")));
  EXPECT_EQ(exact_divide(P("3*lambda"), Scalar(Rational(6)))->str(), "1/2*lambda");
}

TEST(Scalar, PrintingIsCanonical) {
  EXPECT_EQ(P("lambda*2/3").str(), "2/3*lambda");
  EXPECT_EQ(P("(lambda-1)^2").str(), "1-2*lambda+lambda^2");
  EXPECT_EQ(P("0").str(), "0");
}

class RandomScalars : public ::testing::Test {
 protected:
  std::mt19937 rng{424242};
  ParamSpace ps{std::vector<std::string>{"kappa", "lambda"}};

  Scalar random() {
    std::uniform_int_distribution<int> coef(-6, 6), den(1, 5), terms(0, 5);
    Scalar out = Scalar::constant(Rational(0), ps);
    for (int t = terms(rng); t > 0; --t) {
      Scalar term = Scalar::constant(Rational(Rational::Int(coef(rng)), Rational::Int(den(rng))), ps);
      int budget = 3;
      for (const auto& n : ps.names()) {
        int e = std::uniform_int_distribution<int>(0, budget)(rng);
        budget -= e;
        term *= Scalar::variable(ps, n).pow(static_cast<unsigned>(e));
      }
      out += term;
    }
    return out;
  }

  std::map<std::string, Rational> point() {
    std::uniform_int_distribution<int> v(-7, 7), d(1, 6);
    return {{"kappa", Rational(Rational::Int(v(rng)), Rational::Int(d(rng)))},
            {"lambda", Rational(Rational::Int(v(rng)), Rational::Int(d(rng)))}};
  }
};

TEST_F(RandomScalars, RingAxioms) {
  for (int i = 0; i < 100; ++i) {
    Scalar a = random(), b = random(), c = random();
    EXPECT_TRUE(is_zero(a + b - (b + a)));
    EXPECT_TRUE(is_zero(a * b - b * a));
    EXPECT_TRUE(is_zero((a * b) * c - a * (b * c)));
    EXPECT_TRUE(is_zero(a * (b + c) - (a * b + a * c)));
    EXPECT_TRUE(is_zero(a - a));
    EXPECT_TRUE(is_zero(a * Scalar(1) - a));
  }
}

TEST_F(RandomScalars, SubstituteIsHomomorphism) {
  for (int i = 0; i < 100; ++i) {
    Scalar a = random(), b = random();
    auto at = point();
    EXPECT_EQ((a * b).substitute(at), a.substitute(at) * b.substitute(at));
    EXPECT_EQ((a + b).substitute(at), a.substitute(at) + b.substitute(at));
  }
}

TEST_F(RandomScalars, ParsePrintRoundTrip) {
  for (int i = 0; i < 100; ++i) {
    Scalar a = random();
    EXPECT_EQ(parse_scalar(a.str(), ps), a) << a.str();
    EXPECT_EQ(parse_scalar(a.str(), ps).str(), a.str());
  }
}

TEST_F(RandomScalars, ExactDivideRecoversFactor) {
  for (int i = 0; i < 100; ++i) {
    Scalar a = random(), b = random();
    if (b.is_zero()) continue;
    auto q = exact_divide(a * b, b);
    ASSERT_TRUE(q) << (a * b).str() << " / " << b.str();
    EXPECT_EQ(*q, a);
  }
}
