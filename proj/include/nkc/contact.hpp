#pragma once

#include "nkc/frame.hpp"
#include "nkc/report.hpp"
#include "nkc/tensor.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nkc {

// Almost contact metric data on a frame manifold. eta is stored through its
// metric dual, so eta(X) = dot(eta, X).
struct AlmostContactData {
  Endomorphism phi;
  FrameVector xi;
  FrameVector eta;

  Scalar eta_of(const FrameVector& x) const { return dot(eta, x); }

  friend bool operator==(const AlmostContactData& a, const AlmostContactData& b) {
    return a.phi == b.phi && a.xi == b.xi && a.eta == b.eta;
  }
};

struct StructureClass {
  bool is_contact_metric = false;
  bool is_K_contact = false;
  bool is_Sasakian = false;
  std::optional<Scalar> kappa;
};

// Report header lines naming the sign conventions in force.
std::vector<std::string> acm_convention_notes();

// Axioms phi xi = 0, eta(xi) = 1, eta o phi = 0, phi^2 = -I + eta (x) xi,
// g(phi X, phi Y) = g(X, Y) - eta(X) eta(Y), and the contact condition
// d eta(X, Y) = g(X, phi Y) with d eta(E_i, E_j) = -1/2 eta([E_i, E_j]).
VerificationReport validate_acm(const FrameManifold& m, const AlmostContactData& s);

// h = 1/2 L_xi phi, without any checks.
Endomorphism half_lie_phi(const FrameManifold& m, const AlmostContactData& s);

// Symmetry, anticommutation with phi, trace zero and h xi = 0.
VerificationReport h_lemma_checks(const FrameManifold& m, const AlmostContactData& s, const Endomorphism& h);

// h = 1/2 L_xi phi; throws StructureError naming the first violated property.
Endomorphism compute_h(const FrameManifold& m, const AlmostContactData& s);

// kappa with R(E_i, E_j) xi = kappa (eta(E_j) E_i - eta(E_i) E_j) for all i, j,
// if such a Scalar exists and is determined by at least one equation.
std::optional<Scalar> detect_kappa(const FrameManifold& m, const AlmostContactData& s, const Curvature4Tensor& r);

// (nabla_X phi) Y = g(X, Y) xi - eta(Y) X on all basis pairs.
Check sasakian_nabla_phi_check(const FrameManifold& m, const AlmostContactData& s, const Connection& lc);

StructureClass classify(const FrameManifold& m, const AlmostContactData& s, const Connection& lc,
                        const Curvature4Tensor& r);

}  // namespace nkc
