#include "nkc/tanaka_webster.hpp"

#include "nkc/error.hpp"

#include <string>

namespace nkc {

namespace {

std::string tuple_name(const std::string& base, std::initializer_list<std::size_t> idx) {
  std::string out = base + "[";
  bool first = true;
  for (auto i : idx) {
    if (!first) out += ",";
    out += std::to_string(i + 1);
    first = false;
  }
  return out + "]";
}

Check tuple_check(std::string name, std::vector<int> indices, const std::string& residual, bool zero) {
  Check c{std::move(name), zero ? CheckStatus::holds : CheckStatus::fails, std::nullopt, {}};
  if (!zero) c.witness = Witness{std::move(indices), residual};
  return c;
}

}  // namespace

Connection gtw_connection(const FrameManifold& m, const AlmostContactData& s, const Connection& lc,
                          const Endomorphism& h) {
  const std::size_t d = m.dim();
  std::vector<FrameVector> table;
  table.reserve(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    const FrameVector x = m.basis(i);
    const FrameVector xh = x + h.apply(x);
    for (std::size_t j = 0; j < d; ++j) {
      const FrameVector y = m.basis(j);
      const FrameVector phy = s.phi.apply(y);
      table.push_back(lc.on_basis(i, j) + m.inner(xh, phy) * s.xi + s.eta_of(x) * phy +
                      s.eta_of(y) * s.phi.apply(xh));
    }
  }
  Connection conn(d, ConnectionKind::tanaka_webster, std::move(table));
  Check metric = scan_scalars("gtw.metric", d, 3, [&](auto t) {
    return conn.nabla_metric(m.basis(t[0]), m.basis(t[1]), m.basis(t[2]));
  });
  if (metric.status == CheckStatus::fails) {
    const auto& w = *metric.witness;
    throw StructureError("generalized Tanaka-Webster connection is not metric at (" + std::to_string(w.indices[0]) +
                         "," + std::to_string(w.indices[1]) + "," + std::to_string(w.indices[2]) +
                         "): " + w.residual);
  }
  return conn;
}

std::vector<FrameVector> gtw_torsion(const FrameManifold& m, const Connection& conn) {
  const std::size_t d = m.dim();
  std::vector<FrameVector> out;
  out.reserve(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      out.push_back(conn.on_basis(i, j) - conn.on_basis(j, i) - m.bracket(m.basis(i), m.basis(j)));
    }
  }
  return out;
}

GtwPackage build_gtw(const FrameManifold& m, const AlmostContactData& s, const Connection& lc,
                     const Endomorphism& h) {
  Connection conn = gtw_connection(m, s, lc, h);
  std::vector<FrameVector> torsion = gtw_torsion(m, conn);
  Curvature4Tensor curv = riemann(m, conn);
  BilinearForm ric = ricci(curv);
  Scalar tau = scalar_curvature(ric);
  return GtwPackage{std::move(conn), std::move(torsion), std::move(curv), std::move(ric), std::move(tau)};
}

VerificationReport gtw_parallelism_suite(const FrameManifold& m, const AlmostContactData& s, const Connection& lc,
                                         const GtwPackage& gtw, const Endomorphism& h, const Scalar& kappa,
                                         bool sasakian) {
  const std::size_t d = m.dim();
  const Endomorphism& phi = s.phi;
  const Connection& c0 = gtw.conn;
  auto e = [&](std::size_t i) { return m.basis(i); };
  VerificationReport report;

  {
    Check& c = report.add(Check{"gtw.torsion_nonzero", CheckStatus::holds, std::nullopt, {}});
    bool any = false;
    for (const auto& t : gtw.torsion) any = any || !t.is_zero();
    if (!any) {
      c.status = CheckStatus::fails;
      c.witness = Witness{{}, "0"};
      c.convention_notes.push_back("torsion vanishes identically");
    }
  }
  {
    Check& c = report.add(scan_vectors("gtw.torsion_closed_form_printed", d, 2, [&](auto t) {
      FrameVector x = e(t[0]), y = e(t[1]);
      Scalar coef = m.inner(x + h.apply(x), phi.apply(y)) - m.inner(y + h.apply(y), phi.apply(x));
      FrameVector rhs = coef * s.xi + s.eta_of(y) * (phi.apply(x) + phi.apply(h.apply(x))) -
                        s.eta_of(x) * (phi.apply(y) + phi.apply(h.apply(y)));
      return gtw.torsion_at(t[0], t[1]) - rhs;
    }));
    c.convention_notes.push_back(
        "as printed: T(X,Y) = (g(X+hX,phiY) - g(Y+hY,phiX))xi + eta(Y)(phiX+phihX) - eta(X)(phiY+phihY)");
  }
  {
    Check& c = report.add(scan_vectors("gtw.torsion", d, 2, [&](auto t) {
      FrameVector x = e(t[0]), y = e(t[1]);
      FrameVector rhs = Scalar(2) * m.inner(x, phi.apply(y)) * s.xi + s.eta_of(y) * phi.apply(h.apply(x)) -
                        s.eta_of(x) * phi.apply(h.apply(y));
      return gtw.torsion_at(t[0], t[1]) - rhs;
    }));
    c.convention_notes.push_back("T(X,Y) = 2g(X,phiY)xi + eta(Y)phihX - eta(X)phihY, expanded from the connection");
  }

  report.add(scan_vectors("gtw.nabla_xi", d, 1, [&](auto t) { return c0.covariant(e(t[0]), s.xi); }));
  report.add(scan_scalars("gtw.nabla_eta", d, 2,
                          [&](auto t) { return c0.nabla_covector(s.eta, e(t[0]), e(t[1])); }));
  report.add(scan_scalars("gtw.metric", d, 3,
                          [&](auto t) { return c0.nabla_metric(e(t[0]), e(t[1]), e(t[2])); }));
  report.add(scan_vectors("gtw.nabla_phi_closed_form", d, 2, [&](auto t) {
    FrameVector x = e(t[0]), y = e(t[1]);
    FrameVector rhs = lc.nabla_endo(phi, x, y) - m.inner(x + h.apply(x), y) * s.xi + s.eta_of(y) * h.apply(x) +
                      s.eta_of(y) * x;
    return c0.nabla_endo(phi, x, y) - rhs;
  }));
  {
    Check& c = report.add(scan_vectors("gtw.nabla_h_closed_form_printed", d, 2, [&](auto t) {
      FrameVector x = e(t[0]), y = e(t[1]);
      Scalar coef = (kappa - Scalar(1)) * m.inner(phi.apply(x), y) + m.inner(h.apply(x), phi.apply(y));
      FrameVector rhs = coef * s.xi + s.eta_of(x) * phi.apply(y + h.apply(y));
      return c0.nabla_endo(h, x, y) - rhs;
    }));
    c.convention_notes.push_back("as printed: [(kappa-1)g(phiX,Y) + g(hX,phiY)]xi + eta(X)phi(Y+hY)");
  }
  {
    Check& c = report.add(scan_vectors("gtw.nabla_h", d, 2, [&](auto t) {
      FrameVector x = e(t[0]), y = e(t[1]);
      return c0.nabla_endo(h, x, y) - Scalar(2) * s.eta_of(x) * phi.apply(h.apply(y));
    }));
    c.convention_notes.push_back("(nabla0_X h)Y = 2 eta(X) phi h Y, expanded from the connection");
  }
  report.add(scan_vectors("gtw.nabla_phi_vanishes", d, 2,
                          [&](auto t) { return c0.nabla_endo(phi, e(t[0]), e(t[1])); }));
  if (sasakian) {
    report.add(scan_vectors("gtw.sasakian_nabla_phi", d, 2,
                            [&](auto t) { return c0.nabla_endo(phi, e(t[0]), e(t[1])); }));
  } else {
    report.add("gtw.sasakian_nabla_phi", CheckStatus::not_applicable, std::nullopt, {"instance is not Sasakian"});
  }
  return report;
}

VerificationReport closed_form_crosscheck(const FrameManifold& m, const AlmostContactData& s,
                                          const Curvature4Tensor& r_lc, const GtwPackage& gtw,
                                          const Endomorphism& h, const Scalar& kappa) {
  const std::size_t d = m.dim();
  const Endomorphism& phi = s.phi;
  const Curvature4Tensor& r0 = gtw.curv;
  const Endomorphism phih = phi * h;
  auto e = [&](std::size_t i) { return m.basis(i); };
  auto g = [&](const FrameVector& a, const FrameVector& b) { return m.inner(a, b); };
  VerificationReport report;

  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        FrameVector x = e(i), y = e(j), z = e(k);
        FrameVector rhs =
            r_lc.on_basis(i, j, k) +
            kappa * ((s.eta_of(y) * g(x, z) - s.eta_of(x) * g(y, z)) * s.xi - s.eta_of(y) * s.eta_of(z) * x +
                     s.eta_of(x) * s.eta_of(z) * y) -
            g(y + h.apply(y), phi.apply(z)) * (phi.apply(x) + phih.apply(x)) +
            g(x + h.apply(x), phi.apply(z)) * (phi.apply(y) + phih.apply(y)) +
            (g(x, phi.apply(y) + phih.apply(y)) + g(y, phi.apply(x) + phih.apply(x))) * phi.apply(z);
        FrameVector diff = r0.on_basis(i, j, k) - rhs;
        report.add(tuple_check(tuple_name("gtw.curvature_closed_form", {i, j, k}),
                               {int(i + 1), int(j + 1), int(k + 1)}, diff.str(), diff.is_zero()));
      }
    }
  }

  report.add(scan_vectors("gtw.curvature_X_Y_xi", d, 2, [&](auto t) { return r0.apply(e(t[0]), e(t[1]), s.xi); }));
  report.add(scan_vectors("gtw.curvature_xi_X_Y", d, 2, [&](auto t) { return r0.apply(s.xi, e(t[0]), e(t[1])); }));
  report.add(scan_vectors("gtw.curvature_X_xi_xi", d, 1, [&](auto t) { return r0.apply(e(t[0]), s.xi, s.xi); }));
  report.add(scan_scalars("gtw.curvature_antisymmetry_first_pair", d, 4, [&](auto t) {
    return r0.lowered(t[0], t[1], t[2], t[3]) + r0.lowered(t[1], t[0], t[2], t[3]);
  }));
  report.add(scan_scalars("gtw.curvature_antisymmetry_last_pair", d, 4, [&](auto t) {
    return r0.lowered(t[0], t[1], t[2], t[3]) + r0.lowered(t[0], t[1], t[3], t[2]);
  }));
  {
    Check& c = report.add(scan_scalars("gtw.curvature_swap_both_pairs_printed", d, 4, [&](auto t) {
      return r0.lowered(t[0], t[1], t[2], t[3]) + r0.lowered(t[1], t[0], t[3], t[2]);
    }));
    c.convention_notes.push_back("as printed: R0(X1,X2,X3,X4) + R0(X2,X1,X4,X3) = 0");
  }

  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      for (std::size_t c = 0; c < d; ++c) {
        for (std::size_t f = 0; f < d; ++f) {
          FrameVector x1 = e(a), x2 = e(b), x3 = e(c), x4 = e(f);
          Scalar rhs = Scalar(-2) * (g(phi.apply(x1), x4) * g(h.apply(x2), phi.apply(x3)) -
                                     g(x2, phi.apply(x3)) * g(phih.apply(x1), x4) -
                                     g(h.apply(x1), phi.apply(x3)) * g(x2, phi.apply(x4)) +
                                     g(x1, phi.apply(x3)) * g(phih.apply(x2), x4) -
                                     g(x3, phih.apply(x4)) * g(phi.apply(x1), x2));
          Scalar diff = r0.lowered(a, b, c, f) + r0.lowered(c, f, a, b) - rhs;
          report.add(tuple_check(tuple_name("gtw.pair_interchange", {a, b, c, f}),
                                 {int(a + 1), int(b + 1), int(c + 1), int(f + 1)}, diff.str(), diff.is_zero()));
        }
      }
    }
  }

  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        FrameVector x = e(i), y = e(j), z = e(k);
        FrameVector lhs = r0.on_basis(i, j, k) + r0.on_basis(j, k, i) + r0.on_basis(k, i, j);
        FrameVector rhs = Scalar(2) * (g(phi.apply(x), y) * phih.apply(z) - g(phi.apply(x), z) * phih.apply(y) +
                                       g(phi.apply(y), z) * phih.apply(x));
        FrameVector diff = lhs - rhs;
        report.add(tuple_check(tuple_name("gtw.cyclic_sum", {i, j, k}), {int(i + 1), int(j + 1), int(k + 1)},
                               diff.str(), diff.is_zero()));
      }
    }
  }
  return report;
}

VerificationReport gtw_ricci_scalar(const FrameManifold& m, const AlmostContactData& s, const BilinearForm& s_lc,
                                    const GtwPackage& gtw, const Endomorphism& h, const Scalar& kappa) {
  const std::size_t d = m.dim();
  const Scalar n(static_cast<long long>(m.n()));
  const BilinearForm& s0 = gtw.ricci;
  auto e = [&](std::size_t i) { return m.basis(i); };
  auto eta = [&](std::size_t i) { return s.eta_of(e(i)); };
  VerificationReport report;

  report.add(scan_scalars("gtw.ricci_symmetric", d, 2, [&](auto t) { return s0(t[0], t[1]) - s0(t[1], t[0]); }));
  report.add(scan_scalars("gtw.ricci_intermediate_form", d, 2, [&](auto t) {
    Scalar rhs = s_lc(t[0], t[1]) + (Scalar(3) - kappa) * m.inner(e(t[0]), e(t[1])) +
                 (-(Scalar(2) * n - Scalar(1)) * kappa - Scalar(3)) * eta(t[0]) * eta(t[1]) -
                 m.inner(h.apply(e(t[0])), h.apply(e(t[1])));
    return s0(t[0], t[1]) - rhs;
  }));
  report.add(scan_scalars("gtw.ricci_closed_form", d, 2, [&](auto t) {
    Scalar rhs = s_lc(t[0], t[1]) + Scalar(2) * m.inner(e(t[0]), e(t[1])) -
                 Scalar(2) * (n * kappa + Scalar(1)) * eta(t[0]) * eta(t[1]);
    return s0(t[0], t[1]) - rhs;
  }));
  report.add(scan_scalars("gtw.ricci_alt_closed_form", d, 2, [&](auto t) {
    Scalar rhs = Scalar(2) * n * m.inner(e(t[0]), e(t[1])) +
                 Scalar(2) * (n - Scalar(1)) * m.inner(h.apply(e(t[0])), e(t[1])) -
                 Scalar(2) * n * eta(t[0]) * eta(t[1]);
    return s0(t[0], t[1]) - rhs;
  }));
  report.add(scan_scalars("gtw.ricci_X_xi", d, 1, [&](auto t) { return s0.apply(e(t[0]), s.xi); }));
  report.add(scan_scalars("gtw.ricci_xi_xi", d, 0, [&](auto) { return s0.apply(s.xi, s.xi); }));
  report.add(scan_scalars("gtw.scalar_shift", d, 0, [&](auto) {
    return gtw.tau - (scalar_curvature(s_lc) + Scalar(4) * n - Scalar(2) * n * kappa);
  }));
  report.add(scan_scalars("gtw.scalar_curvature", d, 0, [&](auto) { return gtw.tau - Scalar(4) * n * n; }));
  report.add_value("gtw.ricci", s0.str());
  report.add_value("gtw.scalar", gtw.tau.str());
  return report;
}

std::array<FrameVector, 3> gssf_templates(const FrameManifold& m, const AlmostContactData& s, std::size_t i,
                                          std::size_t j, std::size_t k) {
  const FrameVector x = m.basis(i), y = m.basis(j), z = m.basis(k);
  const Endomorphism& phi = s.phi;
  auto g = [&](const FrameVector& a, const FrameVector& b) { return m.inner(a, b); };
  FrameVector t1 = g(y, z) * x - g(x, z) * y;
  FrameVector t2 = g(x, phi.apply(z)) * phi.apply(y) - g(y, phi.apply(z)) * phi.apply(x) +
                   Scalar(2) * g(x, phi.apply(y)) * phi.apply(z);
  FrameVector t3 = s.eta_of(x) * s.eta_of(z) * y - s.eta_of(y) * s.eta_of(z) * x + g(x, z) * s.eta_of(y) * s.xi -
                   g(y, z) * s.eta_of(x) * s.xi;
  return {t1, t2, t3};
}

std::optional<GssfFit> gssf_decompose(const FrameManifold& m, const AlmostContactData& s,
                                      const Curvature4Tensor& r) {
  const std::size_t d = m.dim();
  std::vector<std::vector<Rational>> a;
  std::vector<Scalar> b;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        auto t = gssf_templates(m, s, i, j, k);
        for (std::size_t l = 0; l < d; ++l) {
          std::vector<Rational> row;
          for (const auto& v : t) {
            auto c = v[l].constant_value();
            if (!c) throw DomainError("curvature template has a non-constant component");
            row.push_back(*c);
          }
          a.push_back(std::move(row));
          b.push_back(r.on_basis(i, j, k)[l]);
        }
      }
    }
  }
  auto sol = solve_linear(std::move(a), std::move(b), 3);
  if (!sol) return std::nullopt;
  return GssfFit{std::move(*sol)};
}

namespace {

std::string rational_tuple(const std::vector<Rational>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].str();
  }
  return out + ")";
}

}  // namespace

VerificationReport gssf_report(const FrameManifold& m, const AlmostContactData& s, const Curvature4Tensor& r,
                               const Endomorphism& h, const Scalar& kappa) {
  const std::size_t d = m.dim();
  VerificationReport report;
  std::optional<GssfFit> fit;
  try {
    fit = gssf_decompose(m, s, r);
  } catch (const DomainError& err) {
    report.add("gssf.decomposition", CheckStatus::not_applicable, std::nullopt, {err.what()});
  }
  if (fit) {
    const auto& p = fit->solution.particular;
    report.add_value("gssf.F1", p[0].str());
    report.add_value("gssf.F2", p[1].str());
    report.add_value("gssf.F3", p[2].str());
    std::string nulls;
    for (const auto& v : fit->solution.null_basis) nulls += (nulls.empty() ? "" : ";") + rational_tuple(v);
    report.add_value("gssf.null_directions", nulls.empty() ? "none" : nulls);
    Check& c = report.add("gssf.decomposition", CheckStatus::holds);
    if (!fit->solution.null_basis.empty()) {
      c.convention_notes.push_back("coefficients are not unique; particular solution has free coefficients set to 0");
    }
  } else if (!report.find("gssf.decomposition")) {
    report.add_value("gssf.F1", "none");
    report.add_value("gssf.F2", "none");
    report.add_value("gssf.F3", "none");
    report.add("gssf.decomposition", CheckStatus::not_applicable, std::nullopt,
               {"no constant coefficients reproduce the curvature"});
  }

  if (!h.is_zero()) {
    report.add("gssf.killing_theorem", CheckStatus::not_applicable, std::nullopt, {"xi is not Killing (h != 0)"});
    return report;
  }
  Check& k = report.add(scan_vectors("gssf.killing_theorem", d, 3, [&](auto t) {
    auto tm = gssf_templates(m, s, t[0], t[1], t[2]);
    return r.on_basis(t[0], t[1], t[2]) - (kappa * tm[0] + tm[1] + kappa * tm[2]);
  }));
  k.convention_notes.push_back("coefficients (F1,F2,F3) = (kappa,1,kappa)");
  return report;
}

std::optional<EtaEinstein> eta_einstein_fit(const FrameManifold& m, const AlmostContactData& s,
                                            const BilinearForm& form) {
  const std::size_t d = m.dim();
  std::vector<std::vector<Rational>> a;
  std::vector<Scalar> b;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      auto gij = m.inner(m.basis(i), m.basis(j)).constant_value();
      auto eij = (s.eta_of(m.basis(i)) * s.eta_of(m.basis(j))).constant_value();
      if (!gij || !eij) throw DomainError("eta has non-constant components");
      a.push_back({*gij, *eij});
      b.push_back(form(i, j));
    }
  }
  auto sol = solve_linear(std::move(a), std::move(b), 2);
  if (!sol) return std::nullopt;
  return EtaEinstein{sol->particular[0], sol->particular[1]};
}

}  // namespace nkc
