#pragma once

#include "nkc/contact.hpp"
#include "nkc/report.hpp"
#include "nkc/tensor.hpp"

namespace nkc {

// Metricity, torsion-freeness, both curvature antisymmetries, first Bianchi
// and Ricci symmetry of a Levi-Civita connection and its curvature.
VerificationReport levi_civita_checks(const FrameManifold& m, const Connection& lc, const Curvature4Tensor& r);

// The N(kappa) identity suite: nabla xi, nabla phi, h^2, nabla h, nabla eta,
// the three kappa-nullity curvature forms, the Ricci closed form, S(X, xi),
// S(xi, xi) and the scalar curvature, each checked on every basis tuple.
VerificationReport verify_nkappa_suite(const FrameManifold& m, const AlmostContactData& s, const Connection& lc,
                                       const Curvature4Tensor& r, const Scalar& kappa);

// Sasakian characterizations through nabla phi and R(X, Y) xi. Entries are
// not_applicable when the instance is not Sasakian.
VerificationReport sasakian_checks(const FrameManifold& m, const AlmostContactData& s, const Connection& lc,
                                   const Curvature4Tensor& r);

}  // namespace nkc
