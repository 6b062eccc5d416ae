#include "nkc/nkc.h"

#include "nkc/error.hpp"
#include "nkc/manifest.hpp"
#include "nkc/suite.hpp"
#include "nkc/zoo.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

struct nkc_structure {
  nkc::FrameManifold manifold;
  nkc::AlmostContactData data;
};

struct nkc_report {
  nkc::VerificationReport report;
};

namespace {

thread_local std::string last_error;

template <class F>
nkc_status guard(F&& f) {
  try {
    f();
    last_error.clear();
    return NKC_OK;
  } catch (const nkc::ParseError& e) {
    last_error = e.what();
    return NKC_ERR_PARSE;
  } catch (const nkc::ManifestError& e) {
    last_error = e.what();
    return NKC_ERR_MANIFEST;
  } catch (const nkc::ParameterMismatch& e) {
    last_error = e.what();
    return NKC_ERR_PARAMETER_MISMATCH;
  } catch (const nkc::IncompleteAssignment& e) {
    last_error = e.what();
    return NKC_ERR_INCOMPLETE_ASSIGNMENT;
  } catch (const nkc::DomainError& e) {
    last_error = e.what();
    return NKC_ERR_DOMAIN;
  } catch (const nkc::StructureError& e) {
    last_error = e.what();
    return NKC_ERR_STRUCTURE;
  } catch (const std::invalid_argument& e) {
    last_error = e.what();
    return NKC_ERR_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return NKC_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return NKC_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

nkc::Rational rational_arg(const char* text, const char* what) {
  require(text != nullptr, what);
  nkc::Scalar s = nkc::parse_scalar(text, nkc::ParamSpace());
  auto c = s.constant_value();
  if (!c) throw nkc::DomainError(std::string(what) + " must be a rational constant");
  return *c;
}

nkc_report* wrap(nkc::VerificationReport r) { return new nkc_report{std::move(r)}; }

nkc::Provenance plain_provenance() { return nkc::Provenance{"", nkc::engine_version}; }

nkc_check_status to_c(nkc::CheckStatus s) {
  switch (s) {
    case nkc::CheckStatus::holds: return NKC_CHECK_HOLDS;
    case nkc::CheckStatus::fails: return NKC_CHECK_FAILS;
    case nkc::CheckStatus::not_applicable: return NKC_CHECK_NOT_APPLICABLE;
  }
  return NKC_CHECK_FAILS;
}

}  // namespace

extern "C" {

const char* nkc_version(void) { return nkc::engine_version; }

const char* nkc_status_name(nkc_status status) {
  switch (status) {
    case NKC_OK: return "ok";
    case NKC_ERR_PARSE: return "parse error";
    case NKC_ERR_MANIFEST: return "manifest error";
    case NKC_ERR_PARAMETER_MISMATCH: return "parameter mismatch";
    case NKC_ERR_INCOMPLETE_ASSIGNMENT: return "incomplete assignment";
    case NKC_ERR_DOMAIN: return "domain error";
    case NKC_ERR_STRUCTURE: return "structure error";
    case NKC_ERR_INVALID_ARGUMENT: return "invalid argument";
    case NKC_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* nkc_last_error(void) { return last_error.c_str(); }

void nkc_string_free(char* s) { std::free(s); }

nkc_status nkc_structure_from_manifest(const char* document, size_t length, nkc_structure** out) {
  return guard([&] {
    require(document != nullptr && out != nullptr, "null argument");
    auto loaded = nkc::load_manifest(std::string_view(document, length));
    *out = new nkc_structure{std::move(loaded.manifold), std::move(loaded.structure)};
  });
}

nkc_status nkc_structure_from_zoo(const char* label, const char* lambda, nkc_structure** out) {
  return guard([&] {
    require(label != nullptr && out != nullptr, "null argument");
    std::optional<nkc::Rational> l;
    const auto labels = nkc::zoo_labels();
    require(std::find(labels.begin(), labels.end(), std::string(label)) != labels.end(), "unknown zoo label");
    require(lambda == nullptr || std::string(label) == "lambda", "this zoo label takes no lambda value");
    if (lambda) l = rational_arg(lambda, "lambda");
    auto e = nkc::make_zoo(label, l);
    *out = new nkc_structure{std::move(e.manifold), std::move(e.structure)};
  });
}

void nkc_structure_free(nkc_structure* s) { delete s; }

size_t nkc_structure_dimension(const nkc_structure* s) { return s ? s->manifold.dim() : 0; }

nkc_status nkc_structure_emit_manifest(const nkc_structure* s, char** out) {
  return guard([&] {
    require(s != nullptr && out != nullptr, "null argument");
    *out = dup(nkc::emit_manifest(s->manifold, s->data));
  });
}

nkc_status nkc_zoo_labels(char** out) {
  return guard([&] {
    require(out != nullptr, "null argument");
    std::string text;
    for (const auto& l : nkc::zoo_labels()) text += (text.empty() ? "" : "\n") + l;
    *out = dup(text);
  });
}

nkc_status nkc_run_suite(const nkc_structure* s, const char* suite, nkc_report** out) {
  return guard([&] {
    require(s != nullptr && suite != nullptr && out != nullptr, "null argument");
    const std::string name = suite;
    require(name == "all" || name == "frame" || name == "nkappa" || name == "gtw" || name == "concircular",
            "unknown suite");
    *out = wrap(nkc::run_suite(s->manifold, s->data, nkc::parse_suite(name)));
  });
}

nkc_status nkc_curvature(const nkc_structure* s, const char* connection, nkc_report** out) {
  return guard([&] {
    require(s != nullptr && connection != nullptr && out != nullptr, "null argument");
    const std::string c = connection;
    nkc::ConnectionKind kind;
    if (c == "lc") kind = nkc::ConnectionKind::levi_civita;
    else if (c == "gtw") kind = nkc::ConnectionKind::tanaka_webster;
    else throw std::invalid_argument("unknown connection '" + c + "'");
    *out = wrap(nkc::curvature_report(s->manifold, s->data, kind));
  });
}

nkc_status nkc_deform(const char* kappa, const char* mu, const char* a, int literal_c, nkc_report** out) {
  return guard([&] {
    require(out != nullptr, "null argument");
    const nkc::Rational k = rational_arg(kappa, "kappa"), m = rational_arg(mu, "mu"), av = rational_arg(a, "a");
    auto [kb, mb] = nkc::dhomothetic_invariants(k, m, av, literal_c != 0);
    nkc::VerificationReport r;
    r.provenance = plain_provenance();
    r.add_value("deform.kappa_bar", kb.str());
    r.add_value("deform.mu_bar", mb.str());
    r.add_note(literal_c ? "mu_bar = (mu + 2c - 2)/a with c = a - 1" : "mu_bar = (mu + 2a - 2)/a");
    *out = wrap(std::move(r));
  });
}

nkc_status nkc_boeckx(const char* kappa, const char* mu, nkc_report** out) {
  return guard([&] {
    require(out != nullptr, "null argument");
    auto v = nkc::boeckx_invariant(rational_arg(kappa, "kappa"), rational_arg(mu, "mu"));
    nkc::VerificationReport r;
    r.provenance = plain_provenance();
    if (v.exact) {
      r.add_value("boeckx.value", v.exact->str());
    } else {
      r.add_value("boeckx.square", v.square.str());
      r.add_value("boeckx.sign", std::to_string(v.sign));
      r.add_value("boeckx.approx", std::to_string(v.approx));
      r.add_note("1 - kappa is not a rational square; boeckx.approx is approximate");
    }
    *out = wrap(std::move(r));
  });
}

nkc_status nkc_example1(long long n, int sign, nkc_report** out) {
  return guard([&] {
    require(out != nullptr, "null argument");
    require(sign == 1 || sign == -1, "sign must be +1 or -1");
    auto p = nkc::example1_pipeline(n, sign > 0 ? nkc::ExampleSign::plus : nkc::ExampleSign::minus);
    nkc::VerificationReport r;
    r.provenance = plain_provenance();
    r.add_value("example1.c_surd", p.constants.c_surd);
    if (p.constants.c) {
      r.add_value("example1.c", p.constants.c->str());
      r.add_value("example1.a", p.constants.a->str());
      r.add_value("example1.kappa", p.kappa->str());
      r.add_value("example1.mu", p.mu->str());
      r.add_value("example1.kappa_bar", p.kappa_bar->str());
      r.add_value("example1.mu_bar", p.mu_bar->str());
      r.add_value("example1.mu_bar_literal_c", p.mu_bar_literal->str());
    } else {
      r.add_value("example1.c_approx", std::to_string(p.constants.c_approx));
      r.add_value("example1.a_approx", std::to_string(p.constants.a_approx));
      r.add_note("sqrt(n) is irrational; c and a are approximate and stay out of the exact pipeline");
    }
    r.add_value("example1.target_kappa", p.target_kappa.str());
    if (p.difference) r.add_value("example1.kappa_bar_minus_target", p.difference->str());
    if (p.target_boeckx.exact) r.add_value("example1.target_boeckx", p.target_boeckx.exact->str());
    else r.add_value("example1.target_boeckx_square", p.target_boeckx.square.str());
    *out = wrap(std::move(r));
  });
}

void nkc_report_free(nkc_report* r) { delete r; }

nkc_status nkc_report_emit(const nkc_report* r, nkc_format format, char** out) {
  return guard([&] {
    require(r != nullptr && out != nullptr, "null argument");
    require(format == NKC_FORMAT_JSON || format == NKC_FORMAT_TEXT, "unknown format");
    *out = dup(nkc::emit(r->report, format == NKC_FORMAT_JSON ? nkc::Format::json : nkc::Format::text));
  });
}

size_t nkc_report_check_count(const nkc_report* r) { return r ? r->report.checks().size() : 0; }

size_t nkc_report_fail_count(const nkc_report* r) { return r ? r->report.fail_count() : 0; }


nkc_status nkc_report_check(const nkc_report* r, size_t index, const char** name, nkc_check_status* status) {
  return guard([&] {
    require(r != nullptr, "null argument");
    require(index < r->report.checks().size(), "check index out of range");
    const auto& c = r->report.checks()[index];
    if (name) *name = c.name.c_str();
    if (status) *status = to_c(c.status);
  });
}

nkc_status nkc_report_find(const nkc_report* r, const char* name, nkc_check_status* status) {
  return guard([&] {
    require(r != nullptr && name != nullptr, "null argument");
    const auto* c = r->report.find(name);
    require(c != nullptr, "no such check");
    if (status) *status = to_c(c->status);
  });
}

nkc_status nkc_report_value(const nkc_report* r, const char* name, const char** value) {
  return guard([&] {
    require(r != nullptr && name != nullptr && value != nullptr, "null argument");
    const auto* v = r->report.value(name);
    require(v != nullptr, "no such value");
    *value = v->c_str();
  });
}

}  // extern "C"
