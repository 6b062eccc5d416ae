#pragma once

#include "nkc/contact.hpp"
#include "nkc/linear.hpp"
#include "nkc/report.hpp"
#include "nkc/tensor.hpp"

#include <array>
#include <optional>
#include <vector>

namespace nkc {

struct GtwPackage {
  Connection conn;
  std::vector<FrameVector> torsion;  // T(E_i, E_j) at i * dim + j
  Curvature4Tensor curv;
  BilinearForm ricci;
  Scalar tau;

  const FrameVector& torsion_at(std::size_t i, std::size_t j) const { return torsion[i * curv.dim() + j]; }
};

// nabla0_X Y = nabla_X Y + g(X + hX, phi Y) xi + eta(X) phi Y + eta(Y) phi(hX + X)
// on basis pairs. Throws StructureError if the result is not metric.
Connection gtw_connection(const FrameManifold& m, const AlmostContactData& s, const Connection& lc,
                          const Endomorphism& h);

// T(E_i, E_j) = nabla_{E_i} E_j - nabla_{E_j} E_i - [E_i, E_j].
std::vector<FrameVector> gtw_torsion(const FrameManifold& m, const Connection& conn);

GtwPackage build_gtw(const FrameManifold& m, const AlmostContactData& s, const Connection& lc,
                     const Endomorphism& h);

// Torsion closed forms and the parallelism identities of xi, eta, g, phi and h.
VerificationReport gtw_parallelism_suite(const FrameManifold& m, const AlmostContactData& s, const Connection& lc,
                                         const GtwPackage& gtw, const Endomorphism& h, const Scalar& kappa,
                                         bool sasakian);

// Closed-form curvature, the symmetry relations and the h-corrected cyclic
// sum, one entry per index tuple for the printed closed forms.
VerificationReport closed_form_crosscheck(const FrameManifold& m, const AlmostContactData& s,
                                          const Curvature4Tensor& r_lc, const GtwPackage& gtw,
                                          const Endomorphism& h, const Scalar& kappa);

// Ricci symmetry and closed forms, S0(X, xi) = 0, and both scalar curvature forms.
VerificationReport gtw_ricci_scalar(const FrameManifold& m, const AlmostContactData& s, const BilinearForm& s_lc,
                                    const GtwPackage& gtw, const Endomorphism& h, const Scalar& kappa);

// Curvature template with coefficients F1, F2, F3:
//   F1 [g(Y,Z)X - g(X,Z)Y]
//   + F2 [g(X,phi Z)phi Y - g(Y,phi Z)phi X + 2 g(X,phi Y)phi Z]
//   + F3 [eta(X)eta(Z)Y - eta(Y)eta(Z)X + g(X,Z)eta(Y)xi - g(Y,Z)eta(X)xi].
// Returns the three basis tensors evaluated at (E_i, E_j) E_k.
std::array<FrameVector, 3> gssf_templates(const FrameManifold& m, const AlmostContactData& s, std::size_t i,
                                          std::size_t j, std::size_t k);

struct GssfFit {
  LinearSolution solution;  // unknowns (F1, F2, F3)
};

// Constant F1, F2, F3 reproducing the curvature on every basis triple, if
// any. Throws DomainError when the template has non-constant components.
std::optional<GssfFit> gssf_decompose(const FrameManifold& m, const AlmostContactData& s, const Curvature4Tensor& r);

// Report entries for the decomposition and the Killing-xi coefficients (kappa, 1, kappa).
VerificationReport gssf_report(const FrameManifold& m, const AlmostContactData& s, const Curvature4Tensor& r,
                               const Endomorphism& h, const Scalar& kappa);

struct EtaEinstein {
  Scalar a;
  Scalar b;
};

// form = A g + B eta (x) eta with constant A, B.
std::optional<EtaEinstein> eta_einstein_fit(const FrameManifold& m, const AlmostContactData& s,
                                            const BilinearForm& form);

}  // namespace nkc
