#include "fixtures.hpp"

#include "nkc/error.hpp"

#include <gtest/gtest.h>

using namespace nkc;
using namespace nkc::testing;

TEST(Zoo, Labels) {
  EXPECT_EQ(zoo_labels(), (std::vector<std::string>{"lambda", "sasakian3", "abelian"}));
  EXPECT_EQ(make_zoo("lambda", q(1, 2)).expected_kappa, Scalar(q(3, 4)));
  EXPECT_EQ(make_zoo("lambda").expected_kappa.str(), "1-lambda^2");
  EXPECT_EQ(make_zoo("sasakian3").expected_kappa, Scalar(1));
  EXPECT_ANY_THROW(make_zoo("sasakian3", q(1, 2)));
  EXPECT_ANY_THROW(make_zoo("nope"));
}

TEST(Zoo, ExpectedKappaIsDetected) {
  for (const auto& label : {"lambda", "sasakian3"}) {
    ZooEntry e = make_zoo(label);
    Pipeline p(e);
    auto k = detect_kappa(p.m, p.s, p.r);
    ASSERT_TRUE(k) << label;
    EXPECT_EQ(*k, e.expected_kappa) << label;
  }
}

TEST(Deform, CEqualsFour) {
  // kappa = c(2 - c), mu = -2c with c = 4, a = 1 + c.
  auto [kb, mb] = dhomothetic_invariants(Scalar(-8), Scalar(-8), Scalar(5));
  EXPECT_EQ(kb, Scalar(q(16, 5)));
  EXPECT_EQ(mb, Scalar(0));
  auto [kl, ml] = dhomothetic_invariants(Scalar(-8), Scalar(-8), Scalar(5), true);
  EXPECT_EQ(kl, Scalar(q(16, 5)));
  EXPECT_EQ(ml, Scalar(q(-2, 5)));
}

TEST(Deform, NonInvertibleA) {
  EXPECT_THROW(dhomothetic_invariants(Scalar(1), Scalar(0), Scalar(0)), DomainError);
  const std::vector<std::string> k = {"kappa"};
  EXPECT_THROW(dhomothetic_invariants(Scalar(1), Scalar(0), parse_scalar("kappa", k)), DomainError);
}

TEST(Example1, NFourPlus) {
  Example1Pipeline p = example1_pipeline(4, ExampleSign::plus);
  EXPECT_EQ(p.constants.c, q(3));
  EXPECT_EQ(p.constants.a, q(4));
  EXPECT_EQ(*p.kappa_bar, Scalar(3));
  EXPECT_EQ(*p.mu_bar, Scalar(0));
  EXPECT_EQ(*p.mu_bar_literal, Scalar(q(-1, 2)));
  EXPECT_EQ(p.target_kappa, q(3, 4));
  EXPECT_EQ(p.difference, q(9, 4));
  EXPECT_EQ(p.target_boeckx.exact, q(2));
}

TEST(Example1, NFourMinus) {
  Example1Constants c = make_example1_constants(4, ExampleSign::minus);
  EXPECT_EQ(c.c, q(1, 3));
  EXPECT_EQ(c.a, q(4, 3));
}

TEST(Example1, NTwoIsIrrational) {
  Example1Constants c = make_example1_constants(2, ExampleSign::plus);
  EXPECT_FALSE(c.c);
  EXPECT_FALSE(c.a);
  EXPECT_NEAR(c.c_approx, 3.0 + 2.0 * std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(c.a_approx, 4.0 + 2.0 * std::sqrt(2.0), 1e-12);
  EXPECT_FALSE(c.c_surd.empty());
  Example1Pipeline p = example1_pipeline(2, ExampleSign::plus);
  EXPECT_FALSE(p.kappa_bar);
}

TEST(Example1, NOneIsDomainError) {
  EXPECT_THROW(make_example1_constants(1, ExampleSign::plus), DomainError);
  EXPECT_THROW(example1_pipeline(0, ExampleSign::minus), DomainError);
}

TEST(Boeckx, Values) {
  BoeckxValue b = boeckx_invariant(q(3, 4), q(0));
  EXPECT_EQ(b.exact, q(2));
  EXPECT_EQ(b.square, q(4));
  EXPECT_EQ(b.sign, 1);
  EXPECT_EQ(boeckx_invariant(q(0), q(0)).exact, q(1));
  BoeckxValue irr = boeckx_invariant(q(1, 2), q(0));
  EXPECT_FALSE(irr.exact);
  EXPECT_EQ(irr.square, q(2));
  EXPECT_NEAR(irr.approx, std::sqrt(2.0), 1e-12);
  EXPECT_EQ(boeckx_invariant(q(0), q(4)).sign, -1);
  EXPECT_THROW(boeckx_invariant(q(1), q(0)), DomainError);
  EXPECT_THROW(boeckx_invariant(q(2), q(0)), DomainError);
}
