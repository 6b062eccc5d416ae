#include "nkc/concircular.hpp"

#include "nkc/tanaka_webster.hpp"

#include <string>

namespace nkc {

namespace {

std::string indexed(const std::string& base, std::initializer_list<std::size_t> idx) {
  std::string out = base + "[";
  bool first = true;
  for (auto i : idx) {
    if (!first) out += ",";
    out += std::to_string(i + 1);
    first = false;
  }
  return out + "]";
}

}  // namespace

ConcircularTensor concircular(const FrameManifold& m, const Curvature4Tensor& r0) {
  const std::size_t d = m.dim();
  const long long n = static_cast<long long>(m.n());
  const Rational k(-2 * n, 2 * n + 1);
  Curvature4Tensor z(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t l = 0; l < d; ++l) {
        FrameVector v = r0.on_basis(i, j, l);
        if (j == l) v[i] += Scalar(k);
        if (i == l) v[j] -= Scalar(k);
        z.at(i, j, l) = std::move(v);
      }
    }
  }
  return ConcircularTensor{std::move(z), k};
}

Curvature4Tensor tensor_dot_tensor(const Curvature4Tensor& t1, const Curvature4Tensor& t2, const FrameVector& x1,
                                   const FrameVector& x2) {
  const std::size_t d = t2.dim();
  auto act = [&](const FrameVector& v) { return t1.apply(x1, x2, v); };
  Curvature4Tensor out(d);
  for (std::size_t a = 0; a < d; ++a) {
    const FrameVector x3 = FrameVector::basis(d, a);
    const FrameVector t1x3 = act(x3);
    for (std::size_t b = 0; b < d; ++b) {
      const FrameVector x4 = FrameVector::basis(d, b);
      const FrameVector t1x4 = act(x4);
      for (std::size_t c = 0; c < d; ++c) {
        const FrameVector x5 = FrameVector::basis(d, c);
        out.at(a, b, c) = act(t2.on_basis(a, b, c)) - t2.apply(t1x3, x4, x5) - t2.apply(x3, t1x4, x5) -
                          t2.apply(x3, x4, act(x5));
      }
    }
  }
  return out;
}

BilinearForm tensor_dot_form(const Curvature4Tensor& t1, const BilinearForm& w, const FrameVector& x1,
                             const FrameVector& x2, ActionConvention conv) {
  const std::size_t d = w.dim();
  BilinearForm out(d);
  for (std::size_t a = 0; a < d; ++a) {
    const FrameVector x3 = FrameVector::basis(d, a);
    for (std::size_t b = 0; b < d; ++b) {
      const FrameVector x4 = FrameVector::basis(d, b);
      Scalar v = w.apply(t1.apply(x1, x2, x3), x4) + w.apply(x3, t1.apply(x1, x2, x4));
      out(a, b) = conv == ActionConvention::additive ? v : -v;
    }
  }
  return out;
}

VerificationReport concircular_identities(const FrameManifold& m, const AlmostContactData& s,
                                          const ConcircularTensor& zt) {
  const std::size_t d = m.dim();
  const Curvature4Tensor& z = zt.z;
  const Scalar k(zt.k);
  auto e = [&](std::size_t i) { return m.basis(i); };
  VerificationReport report;

  {
    Check& c = report.add(scan_vectors("conc.Z_X_xi_xi", d, 1, [&](auto t) {
      FrameVector x = e(t[0]);
      return z.apply(x, s.xi, s.xi) - k * (x - s.eta_of(x) * s.xi);
    }));
    c.convention_notes.push_back(
        "definitional expansion K(X - eta(X)xi); the printed K phi^2 X matches it only under phi^2 = I - eta(x)xi");
  }
  Check printed = scan_vectors("printed", d, 1, [&](auto t) {
    FrameVector x = e(t[0]);
    return z.apply(x, s.xi, s.xi) - k * s.phi.apply(s.phi.apply(x));
  });
  report.add_value("conc.Z_X_xi_xi_printed.residual",
                   printed.witness ? "E" + std::to_string(printed.witness->indices[0]) + ": " +
                                         printed.witness->residual
                                   : "0");

  report.add(scan_vectors("conc.Z_X_Y_xi", d, 2, [&](auto t) {
    FrameVector x = e(t[0]), y = e(t[1]);
    return z.apply(x, y, s.xi) - k * (s.eta_of(y) * x - s.eta_of(x) * y);
  }));
  report.add(scan_vectors("conc.Z_X_xi_Y", d, 2, [&](auto t) {
    FrameVector x = e(t[0]), y = e(t[1]);
    return z.apply(x, s.xi, y) - k * (s.eta_of(y) * x - m.inner(x, y) * s.xi);
  }));
  {
    Check& c = report.add(scan_scalars("conc.eta_Z_printed", d, 3, [&](auto t) {
      FrameVector x = e(t[0]), y = e(t[1]), w = e(t[2]);
      return s.eta_of(z.apply(x, y, w)) - k * (s.eta_of(w) * m.inner(x, y) - s.eta_of(x) * m.inner(w, y));
    }));
    c.convention_notes.push_back("as printed: eta(Z(X,Y)W) = K(eta(W)g(X,Y) - eta(X)g(W,Y))");
  }
  {
    Check& c = report.add(scan_scalars("conc.eta_Z", d, 3, [&](auto t) {
      FrameVector x = e(t[0]), y = e(t[1]), w = e(t[2]);
      return s.eta_of(z.apply(x, y, w)) - k * (s.eta_of(x) * m.inner(y, w) - s.eta_of(y) * m.inner(x, w));
    }));
    c.convention_notes.push_back("eta(Z(X,Y)W) = K(eta(X)g(Y,W) - eta(Y)g(X,W)), from metricity and R0(X,Y)xi = 0");
  }
  return report;
}

VerificationReport theorem2_check(const FrameManifold& m, const AlmostContactData& s, const ConcircularTensor& zt) {
  const std::size_t d = m.dim();
  const Scalar k(zt.k);
  VerificationReport report;
  Check closed = scan_vectors("closed", d, 2, [&](auto t) {
    FrameVector x = m.basis(t[0]), y = m.basis(t[1]);
    return zt.z.apply(x, y, s.xi) - k * (s.eta_of(y) * x - s.eta_of(x) * y);
  });
  Check flat = scan_vectors("theorem2.xi_flatness_obstruction", d, 2,
                            [&](auto t) { return zt.z.apply(m.basis(t[0]), m.basis(t[1]), s.xi); });
  Check out{"theorem2.xi_flatness_obstruction", CheckStatus::holds, flat.witness, {}};
  if (flat.status == CheckStatus::holds) {
    out.status = CheckStatus::fails;
    out.witness = Witness{{}, "0"};
    out.convention_notes.push_back("Z(X,Y)xi vanishes identically: xi-concircular flatness achieved, contradicts the theorem");
  } else if (closed.status == CheckStatus::fails) {
    out.status = CheckStatus::fails;
    out.witness = closed.witness;
    out.convention_notes.push_back("Z(X,Y)xi differs from K(eta(Y)X - eta(X)Y)");
  } else {
    out.convention_notes.push_back("first nonzero Z(E_i,E_j)xi");
  }
  report.add(std::move(out));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      FrameVector v = zt.z.apply(m.basis(i), m.basis(j), s.xi);
      if (!v.is_zero()) report.add_value(indexed("theorem2.Z_xi", {i, j}), v.str());
    }
  }
  return report;
}

VerificationReport theorem3_check(const FrameManifold& m, const AlmostContactData& s, const ConcircularTensor& zt,
                                  const BilinearForm& s0) {
  const std::size_t d = m.dim();
  const Endomorphism& phi = s.phi;
  VerificationReport report;
  Check flat = scan_scalars("theorem3.phi_flatness", d, 4, [&](auto t) {
    return m.inner(zt.z.apply(phi.apply(m.basis(t[0])), phi.apply(m.basis(t[1])), phi.apply(m.basis(t[2]))),
                   phi.apply(m.basis(t[3])));
  });
  if (d >= 3) {
    const FrameVector p2 = phi.apply(m.basis(1)), p3 = phi.apply(m.basis(2));
    report.add_value("theorem3.residual[2,3,3,2]", m.inner(zt.z.apply(p2, p3, p3), p2).str());
  }
  if (flat.status == CheckStatus::fails) {
    report.add_value("theorem3.phi_flatness_residual", flat.witness->residual);
    report.add("theorem3.eta_einstein", CheckStatus::not_applicable, flat.witness,
               {"instance is not phi-concircularly flat; first nonzero g(Z(phiE_i,phiE_j)phiE_k,phiE_l)"});
    return report;
  }
  report.add_value("theorem3.phi_flatness_residual", "0");
  const long long n = static_cast<long long>(m.n());
  const Scalar c(Rational(2 * n * (2 * n - 1), 2 * n + 1));
  report.add(scan_scalars("theorem3.ricci_waypoint", d, 2, [&](auto t) {
    return s0(t[0], t[1]) - c * m.inner(phi.apply(m.basis(t[0])), phi.apply(m.basis(t[1])));
  }));
  auto fit = eta_einstein_fit(m, s, s0);
  if (fit) {
    report.add_value("theorem3.A", fit->a.str());
    report.add_value("theorem3.B", fit->b.str());
    report.add("theorem3.eta_einstein", CheckStatus::holds);
  } else {
    report.add("theorem3.eta_einstein", CheckStatus::fails, Witness{{}, s0.str()},
               {"phi-concircularly flat but S0 is not eta-Einstein: contradicts the theorem"});
  }
  return report;
}

VerificationReport theorem4_check(const FrameManifold& m, const AlmostContactData& s, const ConcircularTensor& zt,
                                  const BilinearForm& s0) {
  const std::size_t d = m.dim();
  const Scalar k(zt.k);
  VerificationReport report;
  std::vector<BilinearForm> act, act_derivation;
  for (std::size_t i = 0; i < d; ++i) {
    act.push_back(tensor_dot_form(zt.z, s0, s.xi, m.basis(i), ActionConvention::additive));
    act_derivation.push_back(tensor_dot_form(zt.z, s0, s.xi, m.basis(i), ActionConvention::derivation));
  }
  Check c = scan_scalars("theorem4.ricci_semisymmetry_obstruction", d, 3,
                         [&](auto t) { return act[t[0]](t[1], t[2]); });
  Check out{c.name, CheckStatus::holds, c.witness, {"additive convention: w(T X3,X4) + w(X3,T X4)"}};
  if (c.status == CheckStatus::holds) {
    out.status = CheckStatus::fails;
    out.witness = Witness{{}, "0"};
    out.convention_notes.push_back("Z(xi,X).S0 vanishes identically: contradicts the theorem");
  }
  report.add(std::move(out));

  Check dc = scan_scalars("derivation", d, 3, [&](auto t) { return act_derivation[t[0]](t[1], t[2]); });
  report.add_value("theorem4.derivation_convention.first_nonzero",
                   dc.witness ? dc.witness->residual : std::string("0"));

  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      Scalar v = act[i].apply(m.basis(j), s.xi);
      if (!v.is_zero()) report.add_value(indexed("theorem4.xi_slice", {i, j}), v.str());
    }
  }
  // (E_j, xi)-slice against sigma K S0(E_i, E_j).
  Check ks = scan_scalars("ks", d, 2, [&](auto t) { return k * s0(t[0], t[1]); });
  if (ks.status == CheckStatus::holds) {
    Check r = scan_scalars("theorem4.reduction", d, 2,
                           [&](auto t) { return act[t[0]].apply(m.basis(t[1]), s.xi); });
    r.convention_notes.push_back("K S0 vanishes identically; the sign is undetermined");
    report.add_value("theorem4.reduction_sign", "undetermined");
    report.add(std::move(r));
    return report;
  }
  std::optional<int> sign;
  for (int sigma : {1, -1}) {
    Check r = scan_scalars("reduction", d, 2, [&](auto t) {
      return act[t[0]].apply(m.basis(t[1]), s.xi) - Scalar(sigma) * k * s0(t[0], t[1]);
    });
    if (r.status == CheckStatus::holds) {
      sign = sigma;
      break;
    }
  }
  if (sign) {
    report.add_value("theorem4.reduction_sign", std::to_string(*sign));
    report.add("theorem4.reduction", CheckStatus::holds, std::nullopt,
               {"(Z(xi,E_i).S0)(E_j,xi) = " + std::string(*sign > 0 ? "" : "-") + "K S0(E_i,E_j)"});
  } else {
    Check r = scan_scalars("theorem4.reduction", d, 2, [&](auto t) {
      return act[t[0]].apply(m.basis(t[1]), s.xi) - k * s0(t[0], t[1]);
    });
    r.convention_notes.push_back("slice matches neither K S0 nor -K S0");
    report.add(std::move(r));
  }
  return report;
}

VerificationReport theorem5_check(const FrameManifold& m, const AlmostContactData& s, const ConcircularTensor& zt) {
  const std::size_t d = m.dim();
  const Scalar k(zt.k);
  const Curvature4Tensor& z = zt.z;
  std::vector<Curvature4Tensor> act;
  for (std::size_t i = 0; i < d; ++i) act.push_back(tensor_dot_tensor(z, z, s.xi, m.basis(i)));
  VerificationReport report;
  Check c = scan_vectors("theorem5.semisymmetry_obstruction", d, 4,
                         [&](auto t) { return act[t[0]].on_basis(t[1], t[2], t[3]); });
  Check out{c.name, CheckStatus::holds, c.witness, {}};
  if (c.status == CheckStatus::holds) {
    out.status = CheckStatus::fails;
    out.witness = Witness{{}, "0"};
    out.convention_notes.push_back("Z(xi,X).Z vanishes identically: contradicts the theorem");
  }
  report.add(std::move(out));

  // X5 = xi slice with Z(.,.)xi and Z(xi,X)Y replaced by their closed forms.
  report.add(scan_vectors("theorem5.xi_slice_reduction", d, 3, [&](auto t) {
    const FrameVector x2 = m.basis(t[0]), x3 = m.basis(t[1]), x4 = m.basis(t[2]);
    auto z_xi = [&](const FrameVector& y) { return k * (m.inner(x2, y) * s.xi - s.eta_of(y) * x2); };
    auto z_at_xi = [&](const FrameVector& a, const FrameVector& b) {
      return k * (s.eta_of(b) * a - s.eta_of(a) * b);
    };
    FrameVector reduced =
        z_xi(z_at_xi(x3, x4)) - z_at_xi(z_xi(x3), x4) - z_at_xi(x3, z_xi(x4)) - z.apply(x3, x4, z_xi(s.xi));
    return act[t[0]].apply(x3, x4, s.xi) - reduced;
  }));
  return report;
}

}  // namespace nkc
