#pragma once

#include "nkc/contact.hpp"
#include "nkc/report.hpp"
#include "nkc/tensor.hpp"

namespace nkc {

struct ConcircularTensor {
  Curvature4Tensor z;
  Rational k;  // -2n/(2n+1)
};

// Z(X,Y)W = R0(X,Y)W - (2n/(2n+1)) (g(Y,W)X - g(X,W)Y).
ConcircularTensor concircular(const FrameManifold& m, const Curvature4Tensor& r0);

enum class ActionConvention {
  additive,    // w(T X3, X4) + w(X3, T X4)
  derivation,  // -w(T X3, X4) - w(X3, T X4)
};

// (T1(X1,X2).T2)(X3,X4)X5 = T1(X1,X2)T2(X3,X4)X5 - T2(T1(X1,X2)X3,X4)X5
//   - T2(X3,T1(X1,X2)X4)X5 - T2(X3,X4)T1(X1,X2)X5, on every basis triple (X3,X4,X5).
Curvature4Tensor tensor_dot_tensor(const Curvature4Tensor& t1, const Curvature4Tensor& t2, const FrameVector& x1,
                                   const FrameVector& x2);

// (T1(X1,X2).w)(X3,X4) on every basis pair.
BilinearForm tensor_dot_form(const Curvature4Tensor& t1, const BilinearForm& w, const FrameVector& x1,
                             const FrameVector& x2, ActionConvention conv = ActionConvention::additive);

// Closed forms of Z along xi, in the definitional and printed readings.
VerificationReport concircular_identities(const FrameManifold& m, const AlmostContactData& s,
                                          const ConcircularTensor& z);

// Z(X,Y)xi never vanishes identically.
VerificationReport theorem2_check(const FrameManifold& m, const AlmostContactData& s, const ConcircularTensor& z);

// phi-concircular flatness gate followed by the eta-Einstein fit of S0.
VerificationReport theorem3_check(const FrameManifold& m, const AlmostContactData& s, const ConcircularTensor& z,
                                  const BilinearForm& s0);

// Z(xi,X).S0 never vanishes identically.
VerificationReport theorem4_check(const FrameManifold& m, const AlmostContactData& s, const ConcircularTensor& z,
                                  const BilinearForm& s0);

// Z(xi,X).Z never vanishes identically.
VerificationReport theorem5_check(const FrameManifold& m, const AlmostContactData& s, const ConcircularTensor& z);

}  // namespace nkc
