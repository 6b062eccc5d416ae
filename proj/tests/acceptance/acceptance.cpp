// One line per acceptance criterion. Criteria named with --expect-red are
// known not to hold; they still print FAIL, and the exit status flags any
// other failure or a red criterion that starts passing.

#include "nkc/concircular.hpp"
#include "nkc/contact.hpp"
#include "nkc/curvature.hpp"
#include "nkc/suite.hpp"
#include "nkc/tanaka_webster.hpp"
#include "nkc/zoo.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace nkc;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

struct Lambda {
  ZooEntry e = make_lambda_family();
  Scalar l = Scalar::variable(e.manifold.params(), "lambda");
  FrameVector E(std::size_t i) const { return e.manifold.basis(i - 1); }
};

Verdict criterion1() {
  Verdict v;
  Lambda L;
  const auto& m = L.e.manifold;
  const auto& s = L.e.structure;
  Connection lc = levi_civita(m);
  GtwPackage g = build_gtw(m, s, lc, compute_h(m, s));
  for (std::size_t i = 1; i <= 3; ++i) {
    for (std::size_t j = 1; j <= 3; ++j) {
      FrameVector expect(3);
      if (i == 1 && j == 2) expect = L.E(3);
      if (i == 1 && j == 3) expect = Scalar(-1) * L.E(2);
      v.require(g.conn.on_basis(i - 1, j - 1) == expect,
                "nabla0_E" + std::to_string(i) + "E" + std::to_string(j) + " = " + g.conn.on_basis(i - 1, j - 1).str());
    }
  }
  v.require(g.curv.on_basis(1, 2, 1) == Scalar(-2) * L.E(3), "R0_232");
  v.require(g.curv.on_basis(1, 2, 2) == Scalar(2) * L.E(2), "R0_233");
  for (auto [i, j, k] : std::vector<std::array<int, 3>>{{1, 2, 1}, {1, 2, 2}, {1, 2, 3}, {1, 3, 1}, {1, 3, 2},
                                                        {1, 3, 3}, {2, 3, 1}}) {
    v.require(g.curv.on_basis(i - 1, j - 1, k - 1).is_zero(),
              "R0_" + std::to_string(i) + std::to_string(j) + std::to_string(k) + " != 0");
  }
  BilinearForm expect(3);
  expect(1, 1) = Scalar(2);
  expect(2, 2) = Scalar(2);
  v.require(g.ricci == expect, "S0 = " + g.ricci.str());
  v.require(g.tau == Scalar(4), "tau0 = " + g.tau.str());
  v.require(g.tau.is_constant() && g.ricci(1, 1).is_constant(), "lambda-dependent result");
  return v;
}

Verdict criterion2() {
  Verdict v;
  Lambda L;
  const auto& m = L.e.manifold;
  const auto& s = L.e.structure;
  Connection lc = levi_civita(m);
  const Scalar one(1);
  std::vector<std::tuple<int, int, FrameVector>> table = {
      {2, 1, Scalar(-1) * (one + L.l) * L.E(3)},
      {2, 3, (one + L.l) * L.E(1)},
      {3, 1, (one - L.l) * L.E(2)},
      {3, 2, Scalar(-1) * (one - L.l) * L.E(1)},
  };
  for (std::size_t i = 1; i <= 3; ++i) {
    for (std::size_t j = 1; j <= 3; ++j) {
      FrameVector expect(3);
      for (const auto& [a, b, val] : table) {
        if (a == int(i) && b == int(j)) expect = val;
      }
      v.require(lc.on_basis(i - 1, j - 1) == expect,
                "nabla_E" + std::to_string(i) + "E" + std::to_string(j) + " = " + lc.on_basis(i - 1, j - 1).str());
    }
  }
  Endomorphism h = compute_h(m, s);
  v.require(h.apply(L.E(1)).is_zero(), "hE1");
  v.require(h.apply(L.E(2)) == L.l * L.E(2), "hE2");
  v.require(h.apply(L.E(3)) == Scalar(-1) * L.l * L.E(3), "hE3");
  auto kappa = detect_kappa(m, s, riemann(m, lc));
  v.require(kappa && *kappa == one - L.l * L.l, "kappa = " + (kappa ? kappa->str() : std::string("none")));
  return v;
}

Verdict criterion3() {
  Verdict v;
  Lambda L;
  VerificationReport r = run_suite(L.e.manifold, L.e.structure, Suite::all);
  const std::vector<std::string> entries = {
      "nkappa.nabla_xi_minus_phi_minus_h", "nkappa.nabla_phi", "nkappa.h_squared", "nkappa.nabla_h",
      "nkappa.nabla_eta", "nkappa.curvature_X_xi_xi", "nkappa.curvature_X_Y_xi", "nkappa.curvature_X_xi_Y",
      "nkappa.ricci_closed_form", "nkappa.ricci_X_xi", "nkappa.ricci_xi_xi", "nkappa.scalar_curvature",
      "gtw.nabla_xi", "gtw.nabla_eta", "gtw.nabla_phi_closed_form", "gtw.nabla_h_closed_form_printed",
      "gtw.curvature_X_Y_xi", "gtw.curvature_xi_X_Y", "gtw.curvature_X_xi_xi", "gtw.ricci_closed_form",
      "gtw.ricci_X_xi", "gtw.ricci_xi_xi", "gtw.scalar_curvature", "conc.Z_X_xi_xi", "conc.Z_X_Y_xi",
      "conc.Z_X_xi_Y", "conc.eta_Z_printed", "gtw.metric", "gtw.curvature_antisymmetry_first_pair",
      "gtw.curvature_antisymmetry_last_pair"};
  for (const auto& name : entries) {
    const Check* c = r.find(name);
    if (!c) {
      v.require(false, name + " missing");
      continue;
    }
    std::string w;
    if (c->witness) {
      w = " at (";
      for (std::size_t i = 0; i < c->witness->indices.size(); ++i) {
        w += (i ? "," : "") + std::to_string(c->witness->indices[i]);
      }
      w += "): " + c->witness->residual;
    }
    v.require(c->status == CheckStatus::holds, name + " " + to_string(c->status) + w);
  }
  return v;
}

Verdict criterion4() {
  Verdict v;
  ZooEntry e = make_sasakian3();
  Connection lc = levi_civita(e.manifold);
  GtwPackage g = build_gtw(e.manifold, e.structure, lc, compute_h(e.manifold, e.structure));
  auto fit = gssf_decompose(e.manifold, e.structure, g.curv);
  if (!fit) {
    v.require(false, "no decomposition");
    return v;
  }
  const auto& p = fit->solution.particular;
  std::string got = "(" + p[0].str() + "," + p[1].str() + "," + p[2].str() + ")";
  for (const auto& n : fit->solution.null_basis) {
    got += " + t(" + n[0].str() + "," + n[1].str() + "," + n[2].str() + ")";
  }
  v.require(fit->solution.null_basis.empty() && p[0] == Scalar(1) && p[1] == Scalar(1) && p[2] == Scalar(1),
            "decomposition is " + got);
  return v;
}

Verdict criterion5() {
  Verdict v;
  Lambda L;
  const auto& m = L.e.manifold;
  const auto& s = L.e.structure;
  Connection lc = levi_civita(m);
  GtwPackage g = build_gtw(m, s, lc, compute_h(m, s));
  ConcircularTensor z = concircular(m, g.curv);
  FrameVector z21 = z.z.apply(L.E(2), L.E(1), s.xi);
  v.require(z21 == Scalar(Rational(-2, 3)) * L.E(2), "Z(E2,E1)xi = " + z21.str());
  Scalar t4 = tensor_dot_form(z.z, g.ricci, s.xi, L.E(2)).apply(L.E(2), s.xi);
  v.require(t4 == Scalar(Rational(4, 3)), "(Z(xi,E2).S0)(E2,xi) = " + t4.str());
  VerificationReport t5 = theorem5_check(m, s, z);
  const Check* c5 = t5.find("theorem5.semisymmetry_obstruction");
  v.require(c5 && c5->status == CheckStatus::holds && c5->witness && !c5->witness->indices.empty(),
            "theorem5 has no nonzero witness");
  for (const auto& [rep, name] :
       std::vector<std::pair<VerificationReport, std::string>>{
           {theorem2_check(m, s, z), "theorem2.xi_flatness_obstruction"},
           {theorem4_check(m, s, z, g.ricci), "theorem4.ricci_semisymmetry_obstruction"}}) {
    const Check* c = rep.find(name);
    v.require(c && c->status == CheckStatus::holds, name + " does not hold");
  }
  return v;
}

Verdict criterion6() {
  Verdict v;
  std::vector<ZooEntry> entries = {make_lambda_family(), make_lambda_family(Rational(0)),
                                   make_lambda_family(Rational(1, 2)), make_lambda_family(Rational(-3, 7))};
  for (const auto& e : entries) {
    const auto& m = e.manifold;
    Connection lc = levi_civita(m);
    StructureClass cls = classify(m, e.structure, lc, riemann(m, lc));
    v.require(cls.is_contact_metric && cls.kappa, "instance not validated");
    GtwPackage g = build_gtw(m, e.structure, lc, compute_h(m, e.structure));
    const Scalar n(static_cast<long long>(m.n()));
    v.require(g.tau == Scalar(4) * n * n, "tau0 = " + g.tau.str());
  }
  return v;
}

Verdict criterion7(std::string& summary) {
  Verdict v;
  Lambda L;
  VerificationReport a = run_suite(L.e.manifold, L.e.structure, Suite::gtw);
  VerificationReport b = run_suite(L.e.manifold, L.e.structure, Suite::gtw);
  v.require(emit(a, Format::json) == emit(b, Format::json), "json differs between runs");
  v.require(emit(a, Format::text) == emit(b, Format::text), "text differs between runs");
  std::size_t closed = 0, closed_fail = 0, pairs = 0, pairs_fail = 0;
  for (const auto& c : a.checks()) {
    if (c.name.rfind("gtw.curvature_closed_form[", 0) == 0) {
      ++closed;
      closed_fail += c.status == CheckStatus::fails;
    }
    if (c.name.rfind("gtw.pair_interchange[", 0) == 0) {
      ++pairs;
      pairs_fail += c.status == CheckStatus::fails;
    }
  }
  v.require(closed == 27, "closed-form report has " + std::to_string(closed) + " triples");
  v.require(pairs == 81, "pair-interchange report has " + std::to_string(pairs) + " tuples");
  summary = "closed form disagrees on " + std::to_string(closed_fail) + "/27 triples, pair interchange on " +
            std::to_string(pairs_fail) + "/81 tuples";
  return v;
}

Scalar random_scalar(std::mt19937& rng, const ParamSpace& ps) {
  // Total degree at most 3 in at most two parameters.
  std::uniform_int_distribution<int> coef(-5, 5), den(1, 4), terms(0, 4);
  Scalar out = Scalar::constant(Rational(0), ps);
  int t = terms(rng);
  for (int i = 0; i < t; ++i) {
    Scalar term = Scalar::constant(Rational(coef(rng), den(rng)), ps);
    int budget = 3;
    for (const auto& name : ps.names()) {
      int e = std::uniform_int_distribution<int>(0, budget)(rng);
      budget -= e;
      term *= Scalar::variable(ps, name).pow(static_cast<unsigned>(e));
    }
    out += term;
  }
  return out;
}

Verdict criterion8() {
  Verdict v;
  std::mt19937 rng(20261014);
  const ParamSpace ps({"kappa", "lambda"});
  std::uniform_int_distribution<int> val(-6, 6), den(1, 5);
  for (int i = 0; i < 100; ++i) {
    Scalar a = random_scalar(rng, ps), b = random_scalar(rng, ps), c = random_scalar(rng, ps);
    v.require(is_zero(a + b - (b + a)), "commutativity");
    v.require(is_zero((a * b) * c - a * (b * c)), "associativity");
    v.require(is_zero(a * (b + c) - (a * b + a * c)), "distributivity");
    std::map<std::string, Rational> at = {{"kappa", Rational(val(rng), den(rng))},
                                          {"lambda", Rational(val(rng), den(rng))}};
    v.require((a * b).substitute(at) == a.substitute(at) * b.substitute(at), "multiplicative homomorphism");
    v.require((a + b).substitute(at) == a.substitute(at) + b.substitute(at), "additive homomorphism");
  }
  Lambda L;
  const auto& m = L.e.manifold;
  for (int i = 0; i < 100; ++i) {
    FrameVector x(3), y(3), w(3);
    for (std::size_t k = 0; k < 3; ++k) {
      x[k] = Scalar(Rational(val(rng), den(rng)));
      y[k] = Scalar(Rational(val(rng), den(rng)));
      w[k] = Scalar(Rational(val(rng), den(rng)));
    }
    Scalar t(Rational(val(rng), den(rng)));
    v.require(m.bracket(x, y) == Scalar(-1) * m.bracket(y, x), "bracket antisymmetry");
    v.require(m.bracket(t * x + w, y) == t * m.bracket(x, y) + m.bracket(w, y), "bracket bilinearity");
  }
  VerificationReport a = run_suite(m, L.e.structure, Suite::all);
  VerificationReport b = run_suite(m, L.e.structure, Suite::all);
  v.require(emit(a, Format::json) == emit(b, Format::json), "json report not byte-identical");
  return v;
}

Verdict criterion9() {
  Verdict v;
  BoeckxValue bv = boeckx_invariant(Rational(1) - Rational(1, 4), Rational(0));
  v.require(bv.exact && *bv.exact == Rational(2), "boeckx(3/4,0) not exactly 2");
  const ParamSpace ps({"kappa", "mu"});
  const Scalar k = Scalar::variable(ps, "kappa"), mu = Scalar::variable(ps, "mu");
  auto [kb, mb] = dhomothetic_invariants(k, mu, Scalar(1));
  v.require(kb == k && mb == mu, "dhomothetic(kappa,mu,1) = (" + kb.str() + "," + mb.str() + ")");
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expect_red;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--expect-red" && i + 1 < argc) {
      std::stringstream ss(argv[++i]);
      std::string tok;
      while (std::getline(ss, tok, ',')) expect_red.insert(std::stoi(tok));
    }
  }
  std::string summary7;
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"GTW golden table on the symbolic lambda family", criterion1},
      {"Levi-Civita table, h eigen-action and kappa = 1-lambda^2", criterion2},
      {"identity suites hold symbolically on the lambda family", criterion3},
      {"curvature decomposition at lambda = 0 is exactly (1,1,1)", criterion4},
      {"concircular obstructions are nonzero", criterion5},
      {"tau0 = 4n^2 on every validated zoo instance", criterion6},
      {"closed-form and pair-interchange cross-check reports", [&] { return criterion7(summary7); }},
      {"randomized ring, homomorphism, bracket and determinism properties", criterion8},
      {"Boeckx invariant and identity deformation", criterion9},
  };
  int unexpected = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i + 1);
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << criteria[i].first;
    if (id == 7 && !summary7.empty()) std::cout << " (" << summary7 << ")";
    if (!v.detail.empty()) std::cout << " -- " << v.detail;
    std::cout << " [" << static_cast<long>(ms) << " ms]";
    const bool red = expect_red.count(id) > 0;
    if (red) std::cout << " [expected red]";
    std::cout << "\n";
    if (v.pass == red) ++unexpected;
  }
  return unexpected == 0 ? 0 : 1;
}
