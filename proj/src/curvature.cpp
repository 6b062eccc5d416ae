#include "nkc/curvature.hpp"

namespace nkc {

VerificationReport levi_civita_checks(const FrameManifold& m, const Connection& lc, const Curvature4Tensor& r) {
  const std::size_t d = m.dim();
  VerificationReport report;
  report.add(scan_scalars("lc.metric_compatible", d, 3,
                          [&](auto t) { return lc.gamma(t[0], t[1], t[2]) + lc.gamma(t[0], t[2], t[1]); }));
  report.add(scan_scalars("lc.torsion_free", d, 3, [&](auto t) {
    return lc.gamma(t[0], t[1], t[2]) - lc.gamma(t[1], t[0], t[2]) - m.c(t[0], t[1], t[2]);
  }));
  report.add(scan_scalars("lc.curvature_antisymmetry_first_pair", d, 4, [&](auto t) {
    return r.lowered(t[0], t[1], t[2], t[3]) + r.lowered(t[1], t[0], t[2], t[3]);
  }));
  report.add(scan_scalars("lc.curvature_antisymmetry_last_pair", d, 4, [&](auto t) {
    return r.lowered(t[0], t[1], t[2], t[3]) + r.lowered(t[0], t[1], t[3], t[2]);
  }));
  report.add(scan_vectors("lc.first_bianchi", d, 3, [&](auto t) {
    return r.on_basis(t[0], t[1], t[2]) + r.on_basis(t[1], t[2], t[0]) + r.on_basis(t[2], t[0], t[1]);
  }));
  const BilinearForm s = ricci(r);
  report.add(scan_scalars("lc.ricci_symmetric", d, 2, [&](auto t) { return s(t[0], t[1]) - s(t[1], t[0]); }));
  return report;
}

VerificationReport verify_nkappa_suite(const FrameManifold& m, const AlmostContactData& s, const Connection& lc,
                                       const Curvature4Tensor& r, const Scalar& kappa) {
  const std::size_t d = m.dim();
  const Scalar n(static_cast<long long>(m.n()));
  const Endomorphism h = half_lie_phi(m, s);
  const Endomorphism& phi = s.phi;
  const FrameVector& xi = s.xi;
  auto e = [&](std::size_t i) { return m.basis(i); };

  VerificationReport report;
  {
    Check& c = report.add(scan_vectors("nkappa.nabla_xi_minus_phi_minus_h", d, 1, [&](auto t) {
      FrameVector x = e(t[0]);
      return lc.covariant(x, xi) + phi.apply(x) + h.apply(x);
    }));
    c.convention_notes.push_back("as printed: nabla_X xi = -phi X - h X");
  }
  {
    Check& c = report.add(scan_vectors("nkappa.nabla_xi", d, 1, [&](auto t) {
      FrameVector x = e(t[0]);
      return lc.covariant(x, xi) + phi.apply(x) + phi.apply(h.apply(x));
    }));
    c.convention_notes.push_back("nabla_X xi = -phi X - phi h X, the form consistent with nabla eta and the Tanaka-Webster definition");
  }
  report.add(scan_vectors("nkappa.nabla_phi", d, 2, [&](auto t) {
    FrameVector x = e(t[0]), y = e(t[1]);
    FrameVector xh = x + h.apply(x);
    return lc.nabla_endo(phi, x, y) - (m.inner(xh, y) * xi - s.eta_of(y) * xh);
  }));
  {
    const Endomorphism lhs = h * h;
    const Endomorphism rhs = (phi * phi).scaled(kappa - Scalar(1));
    report.add(scan_scalars("nkappa.h_squared", d, 2, [&](auto t) { return lhs(t[0], t[1]) - rhs(t[0], t[1]); }));
  }
  report.add(scan_vectors("nkappa.nabla_h", d, 2, [&](auto t) {
    FrameVector x = e(t[0]), y = e(t[1]);
    Scalar coef = (Scalar(1) - kappa) * m.inner(x, phi.apply(y)) + m.inner(x, h.apply(phi.apply(y)));
    FrameVector tail = h.apply(phi.apply(x) + phi.apply(h.apply(x)));
    return lc.nabla_endo(h, x, y) - (coef * xi + s.eta_of(y) * tail);
  }));
  report.add(scan_scalars("nkappa.nabla_eta", d, 2, [&](auto t) {
    FrameVector x = e(t[0]), y = e(t[1]);
    return lc.nabla_covector(s.eta, x, y) - m.inner(x + h.apply(x), phi.apply(y));
  }));
  report.add(scan_vectors("nkappa.curvature_X_xi_xi", d, 1, [&](auto t) {
    FrameVector x = e(t[0]);
    return r.apply(x, xi, xi) - kappa * (x - s.eta_of(x) * xi);
  }));
  report.add(scan_vectors("nkappa.curvature_X_Y_xi", d, 2, [&](auto t) {
    FrameVector x = e(t[0]), y = e(t[1]);
    return r.apply(x, y, xi) - kappa * (s.eta_of(y) * x - s.eta_of(x) * y);
  }));
  report.add(scan_vectors("nkappa.curvature_X_xi_Y", d, 2, [&](auto t) {
    FrameVector x = e(t[0]), y = e(t[1]);
    return r.apply(x, xi, y) + kappa * (m.inner(x, y) * xi - s.eta_of(y) * x);
  }));

  const BilinearForm ric = ricci(r);
  const Scalar nm1 = n - Scalar(1);
  report.add(scan_scalars("nkappa.ricci_closed_form", d, 2, [&](auto t) {
    FrameVector x = e(t[0]), y = e(t[1]);
    Scalar closed = Scalar(2) * nm1 * m.inner(x, y) + Scalar(2) * nm1 * m.inner(h.apply(x), y) +
                    (Scalar(2) * n * kappa - Scalar(2) * nm1) * s.eta_of(x) * s.eta_of(y);
    return ric(t[0], t[1]) - closed;
  }));
  report.add(scan_scalars("nkappa.ricci_X_xi", d, 1, [&](auto t) {
    FrameVector x = e(t[0]);
    return ric.apply(x, xi) - Scalar(2) * kappa * n * s.eta_of(x);
  }));
  report.add(scan_scalars("nkappa.ricci_xi_xi", d, 0,
                          [&](auto) { return ric.apply(xi, xi) - Scalar(2) * kappa * n; }));
  report.add(scan_scalars("nkappa.scalar_curvature", d, 0, [&](auto) {
    return scalar_curvature(ric) - Scalar(2) * n * (Scalar(2) * n - Scalar(2) + kappa);
  }));
  return report;
}

VerificationReport sasakian_checks(const FrameManifold& m, const AlmostContactData& s, const Connection& lc,
                                   const Curvature4Tensor& r) {
  const std::size_t d = m.dim();
  VerificationReport report;
  Check nabla_phi = sasakian_nabla_phi_check(m, s, lc);
  if (nabla_phi.status != CheckStatus::holds) {
    nabla_phi.status = CheckStatus::not_applicable;
    nabla_phi.convention_notes.push_back("instance is not Sasakian; first nonzero residual recorded");
    report.add(std::move(nabla_phi));
    report.add("sasakian.curvature_xi", CheckStatus::not_applicable, std::nullopt,
               {"instance is not Sasakian"});
    return report;
  }
  report.add(std::move(nabla_phi));
  auto e = [&](std::size_t i) { return m.basis(i); };
  // Printed orientation eta(X) Y - eta(Y) X versus the kappa = 1 nullity orientation.
  Check printed = scan_vectors("printed", d, 2, [&](auto t) {
    FrameVector x = e(t[0]), y = e(t[1]);
    return r.apply(x, y, s.xi) - (s.eta_of(x) * y - s.eta_of(y) * x);
  });
  Check nullity = scan_vectors("nullity", d, 2, [&](auto t) {
    FrameVector x = e(t[0]), y = e(t[1]);
    return r.apply(x, y, s.xi) - (s.eta_of(y) * x - s.eta_of(x) * y);
  });
  Check out{"sasakian.curvature_xi", CheckStatus::holds, std::nullopt, {}};
  if (printed.status == CheckStatus::holds) {
    out.convention_notes.push_back("holds in the orientation R(X,Y)xi = eta(X)Y - eta(Y)X");
  }
  if (nullity.status == CheckStatus::holds) {
    out.convention_notes.push_back("holds in the orientation R(X,Y)xi = eta(Y)X - eta(X)Y");
  }
  if (printed.status == CheckStatus::fails) {
    out.convention_notes.push_back("orientation R(X,Y)xi = eta(X)Y - eta(Y)X fails at (" +
                                   std::to_string(printed.witness->indices[0]) + "," +
                                   std::to_string(printed.witness->indices[1]) + "): " + printed.witness->residual);
  }
  if (printed.status == CheckStatus::fails && nullity.status == CheckStatus::fails) {
    out.status = CheckStatus::fails;
    out.witness = nullity.witness;
  }
  report.add(std::move(out));
  return report;
}

}  // namespace nkc
