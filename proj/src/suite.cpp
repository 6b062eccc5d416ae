#include "nkc/suite.hpp"

#include "nkc/concircular.hpp"
#include "nkc/curvature.hpp"
#include "nkc/error.hpp"
#include "nkc/manifest.hpp"
#include "nkc/tanaka_webster.hpp"

#include <optional>

namespace nkc {

Suite parse_suite(const std::string& name) {
  if (name == "frame") return Suite::frame;
  if (name == "nkappa") return Suite::nkappa;
  if (name == "gtw") return Suite::gtw;
  if (name == "concircular") return Suite::concircular;
  if (name == "all") return Suite::all;
  throw DomainError("unknown suite '" + name + "'");
}

std::string to_string(Suite s) {
  switch (s) {
    case Suite::frame: return "frame";
    case Suite::nkappa: return "nkappa";
    case Suite::gtw: return "gtw";
    case Suite::concircular: return "concircular";
    case Suite::all: return "all";
  }
  return "?";
}

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

std::string flag(bool b) { return b ? "true" : "false"; }

// Levi-Civita data plus the gate verdict shared by the gated suites.
struct Context {
  Connection lc;
  Curvature4Tensor r;
  BilinearForm ric;
  Endomorphism h;
  StructureClass cls;
};

Context make_context(const FrameManifold& m, const AlmostContactData& s) {
  Connection lc = levi_civita(m);
  Curvature4Tensor r = riemann(m, lc);
  BilinearForm ric = ricci(r);
  Endomorphism h = half_lie_phi(m, s);
  StructureClass cls = classify(m, s, lc, r);
  return Context{std::move(lc), std::move(r), std::move(ric), std::move(h), std::move(cls)};
}

bool gate(const Context& ctx, VerificationReport& report, const std::string& prefix) {
  if (!ctx.cls.is_contact_metric) {
    report.add(prefix + ".structure", CheckStatus::not_applicable, std::nullopt,
               {"no contact metric structure; suite skipped"});
    return false;
  }
  if (!ctx.cls.kappa) {
    report.add(prefix + ".kappa", CheckStatus::not_applicable, std::nullopt,
               {"xi is not in any kappa-nullity distribution; suite skipped"});
    return false;
  }
  return true;
}

void frame_suite(const FrameManifold& m, const AlmostContactData& s, VerificationReport& report) {
  report.append(validate_frame(m));
  report.append(validate_acm(m, s));
  report.append(h_lemma_checks(m, s, half_lie_phi(m, s)));
}

void classification_values(const Context& ctx, VerificationReport& report) {
  report.add_value("class.contact_metric", flag(ctx.cls.is_contact_metric));
  report.add_value("class.K_contact", flag(ctx.cls.is_K_contact));
  report.add_value("class.Sasakian", flag(ctx.cls.is_Sasakian));
  report.add_value("class.kappa", ctx.cls.kappa ? ctx.cls.kappa->str() : "none");
}

void nkappa_suite(const FrameManifold& m, const AlmostContactData& s, const Context& ctx,
                  VerificationReport& report) {
  if (!gate(ctx, report, "nkappa")) return;
  report.append(levi_civita_checks(m, ctx.lc, ctx.r));
  report.append(verify_nkappa_suite(m, s, ctx.lc, ctx.r, *ctx.cls.kappa));
  report.append(sasakian_checks(m, s, ctx.lc, ctx.r));
  report.add_value("nkappa.ricci", ctx.ric.str());
  report.add_value("nkappa.scalar", scalar_curvature(ctx.ric).str());
}

std::optional<GtwPackage> gtw_package(const FrameManifold& m, const AlmostContactData& s, const Context& ctx,
                                      VerificationReport& report, const std::string& prefix) {
  try {
    return build_gtw(m, s, ctx.lc, ctx.h);
  } catch (const StructureError& e) {
    report.add(prefix + ".construction", CheckStatus::fails, Witness{{}, e.what()}, {});
    return std::nullopt;
  }
}

void gtw_suite(const FrameManifold& m, const AlmostContactData& s, const Context& ctx, VerificationReport& report) {
  if (!gate(ctx, report, "gtw")) return;
  auto gtw = gtw_package(m, s, ctx, report, "gtw");
  if (!gtw) return;
  const Scalar& kappa = *ctx.cls.kappa;
  report.append(gtw_parallelism_suite(m, s, ctx.lc, *gtw, ctx.h, kappa, ctx.cls.is_Sasakian));
  report.append(closed_form_crosscheck(m, s, ctx.r, *gtw, ctx.h, kappa));
  report.append(gtw_ricci_scalar(m, s, ctx.ric, *gtw, ctx.h, kappa));
  report.append(gssf_report(m, s, gtw->curv, ctx.h, kappa));

  std::optional<EtaEinstein> fit;
  try {
    fit = eta_einstein_fit(m, s, gtw->ricci);
  } catch (const DomainError&) {
  }
  report.add_value("gtw.eta_einstein.A", fit ? fit->a.str() : "none");
  report.add_value("gtw.eta_einstein.B", fit ? fit->b.str() : "none");
  if (!ctx.cls.is_Sasakian) {
    report.add("gtw.sasakian_eta_einstein", CheckStatus::not_applicable, std::nullopt, {"instance is not Sasakian"});
  } else {
    const Scalar n(static_cast<long long>(m.n()));
    const bool ok = fit && fit->a == Scalar(2) * n && fit->b == Scalar(-2) * n;
    report.add("gtw.sasakian_eta_einstein", ok ? CheckStatus::holds : CheckStatus::fails,
               ok ? std::nullopt : std::optional<Witness>(Witness{{}, gtw->ricci.str()}),
               {"S0 = 2n g - 2n eta (x) eta"});
  }
}

void concircular_suite(const FrameManifold& m, const AlmostContactData& s, const Context& ctx,
                       VerificationReport& report) {
  if (!gate(ctx, report, "conc")) return;
  auto gtw = gtw_package(m, s, ctx, report, "conc");
  if (!gtw) return;
  const ConcircularTensor z = concircular(m, gtw->curv);
  report.add_value("conc.K", z.k.str());
  report.append(concircular_identities(m, s, z));
  report.append(theorem2_check(m, s, z));
  report.append(theorem3_check(m, s, z, gtw->ricci));
  report.append(theorem4_check(m, s, z, gtw->ricci));
  report.append(theorem5_check(m, s, z));
}

}  // namespace

VerificationReport run_suite(const FrameManifold& m, const AlmostContactData& s, Suite suite) {
  VerificationReport report;
  report.provenance = Provenance{manifest_hash(m, s), engine_version};
  for (const auto& note : acm_convention_notes()) report.add_note(note);

  if (suite == Suite::frame || suite == Suite::all) frame_suite(m, s, report);
  if (suite == Suite::frame) return report;

  const Context ctx = make_context(m, s);
  classification_values(ctx, report);
  if (suite == Suite::nkappa || suite == Suite::all) nkappa_suite(m, s, ctx, report);
  if (suite == Suite::gtw || suite == Suite::all) gtw_suite(m, s, ctx, report);
  if (suite == Suite::concircular || suite == Suite::all) concircular_suite(m, s, ctx, report);
  return report;
}

VerificationReport curvature_report(const FrameManifold& m, const AlmostContactData& s, ConnectionKind kind) {
  const std::size_t d = m.dim();
  VerificationReport report;
  report.provenance = Provenance{manifest_hash(m, s), engine_version};
  const Connection lc = levi_civita(m);
  std::optional<Connection> conn;
  if (kind == ConnectionKind::levi_civita) {
    conn = lc;
  } else {
    conn = gtw_connection(m, s, lc, compute_h(m, s));
    const auto torsion = gtw_torsion(m, *conn);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = i + 1; j < d; ++j) report.add_value(indexed("torsion", {i, j}), torsion[i * d + j].str());
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) report.add_value(indexed("connection", {i, j}), conn->on_basis(i, j).str());
  }
  const Curvature4Tensor r = riemann(m, *conn);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        if (!r.on_basis(i, j, k).is_zero()) report.add_value(indexed("curvature", {i, j, k}), r.on_basis(i, j, k).str());
      }
    }
  }
  const BilinearForm ric = ricci(r);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) report.add_value(indexed("ricci", {i, j}), ric(i, j).str());
  }
  report.add_value("scalar", scalar_curvature(ric).str());
  return report;
}

}  // namespace nkc
