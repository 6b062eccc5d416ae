#include "fixtures.hpp"

#include "nkc/error.hpp"
#include "nkc/report.hpp"

#include <gtest/gtest.h>

using namespace nkc;
using namespace nkc::testing;

TEST(Frame, LambdaBrackets) {
  ZooEntry e = make_lambda_family();
  const FrameManifold& m = e.manifold;
  EXPECT_EQ(m.bracket(m.basis(0), m.basis(1)).str(), "(1+lambda)*E3");
  EXPECT_EQ(m.bracket(m.basis(1), m.basis(2)).str(), "2*E1");
  EXPECT_EQ(m.bracket(m.basis(2), m.basis(0)).str(), "(1-lambda)*E2");
  EXPECT_EQ(m.bracket(m.basis(0), m.basis(2)).str(), "(-1+lambda)*E2");
  EXPECT_TRUE(m.bracket(m.basis(1), m.basis(1)).is_zero());
}

TEST(Frame, BracketIsBilinearAndInnerIsOrthonormal) {
  ZooEntry e = make_lambda_family();
  const FrameManifold& m = e.manifold;
  FrameVector x = m.basis(0) + Scalar(2) * m.basis(1);
  FrameVector y = m.basis(2) - m.basis(0);
  FrameVector expected = m.bracket(m.basis(0), m.basis(2)) - m.bracket(m.basis(0), m.basis(0)) +
                         Scalar(2) * (m.bracket(m.basis(1), m.basis(2)) - m.bracket(m.basis(1), m.basis(0)));
  EXPECT_EQ(m.bracket(x, y), expected);
  EXPECT_EQ(m.inner(x, y), Scalar(-1));
  EXPECT_EQ(m.inner(m.basis(1), m.basis(1)), Scalar(1));
  EXPECT_EQ(m.inner(m.basis(1), m.basis(2)), Scalar(0));
}

TEST(Frame, ValidateFrameHolds) {
  for (const auto& label : zoo_labels()) {
    ZooEntry e = make_zoo(label);
    EXPECT_TRUE(validate_frame(e.manifold).all_hold()) << label;
  }
  EXPECT_TRUE(validate_frame(load_data("heisenberg5.json").manifold).all_hold());
}

TEST(Frame, AntisymmetryWitness) {
  std::vector<Scalar> c(27, Scalar(0));
  c[(0 * 3 + 1) * 3 + 2] = Scalar(1);  // [E1,E2] = E3 without [E2,E1] = -E3
  FrameManifold m = FrameManifold::from_full(3, ParamSpace{}, c);
  VerificationReport r = validate_frame(m);
  const Check* anti = r.find("frame.antisymmetry");
  ASSERT_NE(anti, nullptr);
  EXPECT_EQ(anti->status, CheckStatus::fails);
  ASSERT_TRUE(anti->witness);
  EXPECT_EQ(anti->witness->indices, (std::vector<int>{1, 2, 3}));
}

TEST(Frame, JacobiFailure) {
  // [E1,E2] = E2, [E1,E3] = E1, [E2,E3] = E1 violates Jacobi.
  FrameManifold m(3, ParamSpace{}, {{0, 1, 1, Scalar(1)}, {0, 2, 0, Scalar(1)}, {1, 2, 0, Scalar(1)}});
  VerificationReport r = validate_frame(m);
  const Check* j = r.find("frame.jacobi");
  ASSERT_NE(j, nullptr);
  EXPECT_EQ(j->status, CheckStatus::fails);
}

TEST(Frame, LieDeriveIdentityVanishes) {
  ZooEntry e = make_lambda_family();
  EXPECT_TRUE(e.manifold.lie_derive_endo(e.structure.xi, Endomorphism::identity(3)).is_zero());
}

TEST(Frame, RejectsBadConstants) {
  EXPECT_ANY_THROW(FrameManifold(3, ParamSpace{}, {{1, 0, 2, Scalar(1)}}));
  EXPECT_ANY_THROW(FrameManifold(3, ParamSpace{}, {{0, 1, 3, Scalar(1)}}));
}

TEST(Contact, LambdaStructureIsContactMetric) {
  ZooEntry e = make_lambda_family();
  EXPECT_TRUE(validate_acm(e.manifold, e.structure).all_hold());
  Endomorphism h = compute_h(e.manifold, e.structure);
  Endomorphism expected(3);
  expected(1, 1) = lam("lambda");
  expected(2, 2) = lam("-lambda");
  EXPECT_EQ(h, expected);
  EXPECT_TRUE(h_lemma_checks(e.manifold, e.structure, h).all_hold());
}

TEST(Contact, DetectKappaAndClassify) {
  Pipeline p(make_lambda_family());
  auto kappa = detect_kappa(p.m, p.s, p.r);
  ASSERT_TRUE(kappa);
  EXPECT_EQ(kappa->str(), "1-lambda^2");
  StructureClass c = classify(p.m, p.s, p.lc, p.r);
  EXPECT_TRUE(c.is_contact_metric);
  EXPECT_FALSE(c.is_K_contact);
  EXPECT_FALSE(c.is_Sasakian);

  Pipeline p0(make_lambda_family(Rational(0)));
  StructureClass c0 = classify(p0.m, p0.s, p0.lc, p0.r);
  EXPECT_TRUE(c0.is_K_contact);
  EXPECT_TRUE(c0.is_Sasakian);
  EXPECT_EQ(*c0.kappa, Scalar(1));
}

TEST(Contact, Sasakian3AndHeisenberg) {
  Pipeline p(make_sasakian3());
  EXPECT_TRUE(classify(p.m, p.s, p.lc, p.r).is_Sasakian);
  EXPECT_TRUE(p.h.is_zero());

  LoadedManifest hz = load_data("heisenberg5.json");
  Pipeline ph(hz.manifold, hz.structure);
  StructureClass c = classify(ph.m, ph.s, ph.lc, ph.r);
  EXPECT_TRUE(c.is_Sasakian);
  EXPECT_EQ(*c.kappa, Scalar(1));
}

TEST(Contact, AbelianIsNotContactMetric) {
  ZooEntry e = make_abelian();
  VerificationReport r = validate_acm(e.manifold, e.structure);
  const Check* cc = r.find("acm.contact_condition");
  ASSERT_NE(cc, nullptr);
  EXPECT_EQ(cc->status, CheckStatus::fails);
  Pipeline p(e);
  EXPECT_FALSE(classify(p.m, p.s, p.lc, p.r).is_contact_metric);
}

TEST(Contact, RelabelSwap23Invariance) {
  // F1 = E1, F2 = E3, F3 = E2; phi F2 = -F3 so phi flips sign in the new frame.
  ParamSpace ps(std::vector<std::string>{"lambda"});
  Scalar l = Scalar::variable(ps, "lambda");
  FrameManifold m(3, ps, {{0, 1, 2, l - Scalar(1)}, {0, 2, 1, l + Scalar(1)}, {1, 2, 0, Scalar(-2)}});
  ZooEntry orig = make_lambda_family();
  AlmostContactData s = orig.structure;
  s.phi = orig.structure.phi.scaled(Scalar(-1));
  EXPECT_TRUE(validate_frame(m).all_hold());
  EXPECT_TRUE(validate_acm(m, s).all_hold());

  Pipeline p(m, s);
  EXPECT_EQ(detect_kappa(p.m, p.s, p.r)->str(), "1-lambda^2");
  EXPECT_EQ(p.h(1, 1).str(), "-lambda");
  EXPECT_EQ(p.h(2, 2).str(), "lambda");
  EXPECT_EQ(p.ric, Pipeline(orig).ric);
}

TEST(Contact, ValidateAcmRejectsPerturbedPhi) {
  ZooEntry e = make_lambda_family();
  AlmostContactData bad = e.structure;
  bad.phi(0, 1) = Scalar(1);
  EXPECT_FALSE(validate_acm(e.manifold, bad).all_hold());
}
