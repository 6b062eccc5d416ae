#include "nkc/nkc.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

namespace {

constexpr int exit_fails = 1;
constexpr int exit_error = 2;

struct StructureDeleter {
  void operator()(nkc_structure* s) const { nkc_structure_free(s); }
};
struct ReportDeleter {
  void operator()(nkc_report* r) const { nkc_report_free(r); }
};
using StructurePtr = std::unique_ptr<nkc_structure, StructureDeleter>;
using ReportPtr = std::unique_ptr<nkc_report, ReportDeleter>;

struct Failure {
  int code;
};

void check(nkc_status st) {
  if (st == NKC_OK) return;
  const std::string name = nkc_status_name(st), message = nkc_last_error();
  if (message.rfind(name, 0) == 0) {
    std::cerr << "nkc: " << message << "\n";
  } else {
    std::cerr << "nkc: " << name << ": " << message << "\n";
  }
  throw Failure{exit_error};
}

std::string take(char* s) {
  std::string out(s);
  nkc_string_free(s);
  return out;
}

StructurePtr load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "nkc: cannot read " << path << "\n";
    throw Failure{exit_error};
  }
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string doc = ss.str();
  nkc_structure* s = nullptr;
  check(nkc_structure_from_manifest(doc.data(), doc.size(), &s));
  return StructurePtr(s);
}

int print(nkc_report* raw, nkc_format format) {
  ReportPtr r(raw);
  char* text = nullptr;
  check(nkc_report_emit(r.get(), format, &text));
  std::cout << take(text);
  return nkc_report_fail_count(r.get()) == 0 ? 0 : exit_fails;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification engine for N(kappa)-contact metric frame manifolds"};
  app.require_subcommand(1);
  app.set_version_flag("--version", nkc_version());

  std::string format = "json";
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));

  std::string manifest;
  auto* validate = app.add_subcommand("validate", "Frame, almost contact metric and h checks");
  validate->add_option("manifest", manifest, "Manifest path")->required();

  std::string connection = "lc";
  auto* curvature = app.add_subcommand("curvature", "Connection, curvature, Ricci and scalar curvature");
  curvature->add_option("manifest", manifest, "Manifest path")->required();
  curvature->add_option("--connection", connection, "lc or gtw")->check(CLI::IsMember({"lc", "gtw"}));

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("manifest", manifest, "Manifest path")->required();
  verify->add_option("--suite", suite, "all, frame, nkappa, gtw or concircular")
      ->check(CLI::IsMember({"all", "frame", "nkappa", "gtw", "concircular"}));

  std::string label, lambda;
  bool symbolic = false, emit_manifest = false;
  std::string zoo_suite = "all";
  auto* zoo = app.add_subcommand("zoo", "Built-in examples");
  zoo->add_option("label", label, "lambda, sasakian3 or abelian")->required();
  auto* lambda_opt = zoo->add_option("--lambda", lambda, "Rational lambda for the lambda family");
  zoo->add_flag("--symbolic", symbolic, "Keep lambda symbolic (default)")->excludes(lambda_opt);
  zoo->add_flag("--emit-manifest", emit_manifest, "Print the manifest instead of a report");
  zoo->add_option("--suite", zoo_suite, "Suite to run")
      ->check(CLI::IsMember({"all", "frame", "nkappa", "gtw", "concircular"}));

  std::string kappa, mu, a;
  bool literal_c = false;
  auto* deform = app.add_subcommand("deform", "D-homothetic invariants");
  deform->add_option("--kappa", kappa)->required();
  deform->add_option("--mu", mu)->required();
  deform->add_option("--a", a)->required();
  deform->add_flag("--literal-c", literal_c, "Read c in the mu formula literally, c = a - 1");

  auto* boeckx = app.add_subcommand("boeckx", "Boeckx invariant");
  boeckx->add_option("--kappa", kappa)->required();
  boeckx->add_option("--mu", mu)->required();

  long long n = 0;
  std::string sign = "plus";
  auto* example1 = app.add_subcommand("example1", "Example 1 constants and deformation pipeline");
  example1->add_option("--n", n)->required();
  example1->add_option("--sign", sign)->check(CLI::IsMember({"plus", "minus"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : exit_error;
  }

  const nkc_format fmt = format == "json" ? NKC_FORMAT_JSON : NKC_FORMAT_TEXT;
  try {
    nkc_report* r = nullptr;
    if (*validate) {
      auto s = load(manifest);
      check(nkc_run_suite(s.get(), "frame", &r));
    } else if (*curvature) {
      auto s = load(manifest);
      check(nkc_curvature(s.get(), connection.c_str(), &r));
    } else if (*verify) {
      auto s = load(manifest);
      check(nkc_run_suite(s.get(), suite.c_str(), &r));
    } else if (*zoo) {
      nkc_structure* raw = nullptr;
      check(nkc_structure_from_zoo(label.c_str(), lambda.empty() ? nullptr : lambda.c_str(), &raw));
      StructurePtr s(raw);
      if (emit_manifest) {
        char* text = nullptr;
        check(nkc_structure_emit_manifest(s.get(), &text));
        std::cout << take(text);
        return 0;
      }
      check(nkc_run_suite(s.get(), zoo_suite.c_str(), &r));
    } else if (*deform) {
      check(nkc_deform(kappa.c_str(), mu.c_str(), a.c_str(), literal_c ? 1 : 0, &r));
    } else if (*boeckx) {
      check(nkc_boeckx(kappa.c_str(), mu.c_str(), &r));
    } else if (*example1) {
      check(nkc_example1(n, sign == "plus" ? 1 : -1, &r));
    }
    return print(r, fmt);
  } catch (const Failure& f) {
    return f.code;
  }
}
