#include "nkc/contact.hpp"

#include "nkc/error.hpp"

namespace nkc {

namespace {

void check_shapes(const FrameManifold& m, const AlmostContactData& s) {
  if (s.phi.dim() != m.dim() || s.xi.size() != m.dim() || s.eta.size() != m.dim()) {
    throw DomainError("almost contact data does not match the frame dimension");
  }
}

}  // namespace

std::vector<std::string> acm_convention_notes() {
  return {"convention: phi^2 = -I + eta (x) xi and g(phi X, phi Y) = g(X, Y) - eta(X) eta(Y)",
          "convention: d eta(X, Y) = 1/2 (X eta(Y) - Y eta(X) - eta([X, Y])), contact condition d eta(X, Y) = g(X, phi Y)"};
}

VerificationReport validate_acm(const FrameManifold& m, const AlmostContactData& s) {
  check_shapes(m, s);
  const std::size_t d = m.dim();
  const Endomorphism phi2 = s.phi * s.phi;
  VerificationReport report;
  report.add(scan_vectors("acm.phi_xi", d, 0, [&](auto) { return s.phi.apply(s.xi); }));
  report.add(scan_scalars("acm.eta_xi", d, 0, [&](auto) { return s.eta_of(s.xi) - Scalar(1); }));
  report.add(scan_scalars("acm.eta_phi", d, 1, [&](auto t) { return s.eta_of(s.phi.apply(m.basis(t[0]))); }));
  report.add(scan_vectors("acm.phi_squared", d, 1, [&](auto t) {
    FrameVector x = m.basis(t[0]);
    return phi2.apply(x) - (s.eta_of(x) * s.xi - x);
  }));
  report.add(scan_scalars("acm.compatible_metric", d, 2, [&](auto t) {
    FrameVector x = m.basis(t[0]), y = m.basis(t[1]);
    return m.inner(s.phi.apply(x), s.phi.apply(y)) - (m.inner(x, y) - s.eta_of(x) * s.eta_of(y));
  }));
  report.add(scan_scalars("acm.contact_condition", d, 2, [&](auto t) {
    FrameVector x = m.basis(t[0]), y = m.basis(t[1]);
    Scalar deta = s.eta_of(m.bracket(x, y)).scaled(Rational(-1, 2));
    return deta - m.inner(x, s.phi.apply(y));
  }));
  for (const auto& note : acm_convention_notes()) report.add_note(note);

  // The alternative printed form d eta(X, Y) = g(phi X, Y) is recorded, not asserted.
  Check alt = scan_scalars("acm.contact_condition_phi_first_slot", d, 2, [&](auto t) {
    FrameVector x = m.basis(t[0]), y = m.basis(t[1]);
    return s.eta_of(m.bracket(x, y)).scaled(Rational(-1, 2)) - m.inner(s.phi.apply(x), y);
  });
  report.add_value("acm.contact_condition_phi_first_slot.residual",
                   alt.witness ? alt.witness->residual : std::string("0"));
  return report;
}

Endomorphism half_lie_phi(const FrameManifold& m, const AlmostContactData& s) {
  check_shapes(m, s);
  return m.lie_derive_endo(s.xi, s.phi).scaled(Scalar(Rational(1, 2)));
}

VerificationReport h_lemma_checks(const FrameManifold& m, const AlmostContactData& s, const Endomorphism& h) {
  const std::size_t d = m.dim();
  VerificationReport report;
  report.add(scan_scalars("h.symmetric", d, 2, [&](auto t) { return h(t[0], t[1]) - h(t[1], t[0]); }));
  const Endomorphism anti = h * s.phi + s.phi * h;
  report.add(scan_scalars("h.anticommutes_phi", d, 2, [&](auto t) { return anti(t[0], t[1]); }));
  report.add(scan_scalars("h.trace_free", d, 0, [&](auto) { return h.trace(); }));
  report.add(scan_vectors("h.kills_xi", d, 0, [&](auto) { return h.apply(s.xi); }));
  return report;
}

Endomorphism compute_h(const FrameManifold& m, const AlmostContactData& s) {
  Endomorphism h = half_lie_phi(m, s);
  VerificationReport lemma = h_lemma_checks(m, s, h);
  for (const auto& c : lemma.checks()) {
    if (c.status == CheckStatus::fails) {
      std::string where;
      for (int i : c.witness->indices) where += (where.empty() ? "" : ",") + std::to_string(i);
      throw StructureError(c.name + " violated at (" + where + "): " + c.witness->residual);
    }
  }
  return h;
}

std::optional<Scalar> detect_kappa(const FrameManifold& m, const AlmostContactData& s, const Curvature4Tensor& r) {
  const std::size_t d = m.dim();
  std::optional<Scalar> kappa;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      FrameVector ei = m.basis(i), ej = m.basis(j);
      FrameVector lhs = r.apply(ei, ej, s.xi);
      FrameVector shape = s.eta_of(ej) * ei - s.eta_of(ei) * ej;
      for (std::size_t l = 0; l < d; ++l) {
        if (shape[l].is_zero()) {
          if (!lhs[l].is_zero()) return std::nullopt;
          continue;
        }
        auto candidate = exact_divide(lhs[l], shape[l]);
        if (!candidate) return std::nullopt;
        if (!kappa) {
          kappa = *candidate;
        } else if (!(*kappa - *candidate).is_zero()) {
          return std::nullopt;
        }
      }
    }
  }
  return kappa;
}

Check sasakian_nabla_phi_check(const FrameManifold& m, const AlmostContactData& s, const Connection& lc) {
  return scan_vectors("sasakian.nabla_phi", m.dim(), 2, [&](auto t) {
    FrameVector x = m.basis(t[0]), y = m.basis(t[1]);
    return lc.nabla_endo(s.phi, x, y) - (m.inner(x, y) * s.xi - s.eta_of(y) * x);
  });
}

StructureClass classify(const FrameManifold& m, const AlmostContactData& s, const Connection& lc,
                        const Curvature4Tensor& r) {
  StructureClass out;
  out.is_contact_metric = validate_acm(m, s).all_hold();
  out.kappa = detect_kappa(m, s, r);
  if (out.is_contact_metric) {
    out.is_K_contact = half_lie_phi(m, s).is_zero();
    out.is_Sasakian = sasakian_nabla_phi_check(m, s, lc).status == CheckStatus::holds;
  }
  return out;
}

}  // namespace nkc
