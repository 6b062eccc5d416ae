#include "fixtures.hpp"

#include "nkc/concircular.hpp"
#include "nkc/report.hpp"
#include "nkc/tanaka_webster.hpp"

#include <gtest/gtest.h>

using namespace nkc;
using namespace nkc::testing;

namespace {

struct Conc : Pipeline {
  GtwPackage g;
  ConcircularTensor z;
  explicit Conc(const FrameManifold& m_, const AlmostContactData& s_)
      : Pipeline(m_, s_), g(build_gtw(m, s, lc, h)), z(concircular(m, g.curv)) {}
  explicit Conc(const ZooEntry& e) : Conc(e.manifold, e.structure) {}
};

}  // namespace

TEST(Concircular, LambdaValues) {
  Conc c(make_lambda_family());
  EXPECT_EQ(c.z.k, q(-2, 3));
  EXPECT_EQ(c.z.z.on_basis(1, 0, 0).str(), "-2/3*E2");
  EXPECT_EQ(c.z.z.on_basis(0, 1, 1).str(), "-2/3*E1");
  EXPECT_EQ(c.z.z.on_basis(0, 1, 0).str(), "2/3*E2");
}

TEST(Concircular, Identities) {
  Conc c(make_lambda_family());
  VerificationReport r = concircular_identities(c.m, c.s, c.z);
  EXPECT_EQ(status_of(r, "conc.Z_X_xi_xi"), CheckStatus::holds);
  EXPECT_EQ(status_of(r, "conc.eta_Z"), CheckStatus::holds);
  const Check* printed = r.find("conc.eta_Z_printed");
  ASSERT_NE(printed, nullptr);
  EXPECT_EQ(printed->status, CheckStatus::fails);
  EXPECT_EQ(printed->witness->indices, (std::vector<int>{1, 2, 2}));
  EXPECT_EQ(printed->witness->residual, "-4/3");
}

TEST(Concircular, ActionConventionsAreNegatives) {
  Conc c(make_lambda_family());
  FrameVector x1 = c.m.basis(0), x2 = c.m.basis(1);
  BilinearForm p = tensor_dot_form(c.z.z, c.g.ricci, x1, x2, ActionConvention::additive);
  BilinearForm d = tensor_dot_form(c.z.z, c.g.ricci, x1, x2, ActionConvention::derivation);
  EXPECT_FALSE(p.is_zero());
  EXPECT_EQ(p + d, BilinearForm(3));
  EXPECT_EQ(p(1, 0), Scalar(q(4, 3)));
  EXPECT_EQ(d(1, 0), Scalar(q(-4, 3)));
}

TEST(Concircular, MetricCurvatureKillsMetric) {
  Conc c(make_lambda_family());
  BilinearForm g = BilinearForm::metric(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      EXPECT_TRUE(tensor_dot_form(c.r, g, c.m.basis(i), c.m.basis(j)).is_zero());
}

TEST(Concircular, ZeroActorActsTrivially) {
  Conc c(make_lambda_family());
  EXPECT_TRUE(tensor_dot_tensor(Curvature4Tensor(3), c.z.z, c.m.basis(0), c.m.basis(1)).is_zero());
}

TEST(Concircular, DotTensorXiSlice) {
  Conc c(make_lambda_family());
  Curvature4Tensor t = tensor_dot_tensor(c.z.z, c.z.z, c.m.basis(0), c.m.basis(1));
  EXPECT_EQ(t.on_basis(0, 2, 1).str(), "4/3*E3");
}

TEST(Theorem2, ObstructionOnLambda) {
  Conc c(make_lambda_family());
  VerificationReport r = theorem2_check(c.m, c.s, c.z);
  EXPECT_EQ(status_of(r, "theorem2.xi_flatness_obstruction"), CheckStatus::holds);
  EXPECT_EQ(value_of(r, "theorem2.Z_xi[2,1]"), "-2/3*E2");
}

TEST(Theorem2, ConstructedZeroTensorIsFlagged) {
  Conc c(make_lambda_family());
  ConcircularTensor zero{Curvature4Tensor(3), c.z.k};
  VerificationReport r = theorem2_check(c.m, c.s, zero);
  const Check* k = r.find("theorem2.xi_flatness_obstruction");
  ASSERT_NE(k, nullptr);
  EXPECT_EQ(k->status, CheckStatus::fails);
  bool noted = false;
  for (const auto& n : k->convention_notes) noted |= n.find("contradicts") != std::string::npos;
  EXPECT_TRUE(noted);
}

TEST(Theorem3, NotFlatOnLambda) {
  Conc c(make_lambda_family());
  VerificationReport r = theorem3_check(c.m, c.s, c.z, c.g.ricci);
  EXPECT_EQ(value_of(r, "theorem3.residual[2,3,3,2]"), "4/3");
  EXPECT_EQ(status_of(r, "theorem3.eta_einstein"), CheckStatus::not_applicable);
}

TEST(Theorem4, LambdaObstructionAndSign) {
  Conc c(make_lambda_family());
  VerificationReport r = theorem4_check(c.m, c.s, c.z, c.g.ricci);
  const Check* o = r.find("theorem4.ricci_semisymmetry_obstruction");
  ASSERT_NE(o, nullptr);
  EXPECT_EQ(o->status, CheckStatus::holds);
  EXPECT_EQ(value_of(r, "theorem4.xi_slice[2,2]"), "4/3");
  EXPECT_EQ(value_of(r, "theorem4.reduction_sign"), "-1");
}

TEST(Theorem5, LambdaObstruction) {
  Conc c(make_lambda_family());
  VerificationReport r = theorem5_check(c.m, c.s, c.z);
  EXPECT_EQ(status_of(r, "theorem5.semisymmetry_obstruction"), CheckStatus::holds);
}

TEST(Theorem45, Heisenberg5Counterexample) {
  LoadedManifest hz = load_data("heisenberg5.json");
  Conc c(hz.manifold, hz.structure);
  VerificationReport r4 = theorem4_check(c.m, c.s, c.z, c.g.ricci);
  EXPECT_EQ(status_of(r4, "theorem4.ricci_semisymmetry_obstruction"), CheckStatus::fails);
  EXPECT_EQ(value_of(r4, "theorem4.reduction_sign"), "undetermined");
  VerificationReport r5 = theorem5_check(c.m, c.s, c.z);
  EXPECT_EQ(status_of(r5, "theorem5.semisymmetry_obstruction"), CheckStatus::fails);
}
