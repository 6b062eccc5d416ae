#pragma once

#include "nkc/contact.hpp"
#include "nkc/manifest.hpp"
#include "nkc/report.hpp"
#include "nkc/tensor.hpp"
#include "nkc/zoo.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>

namespace nkc {

inline void PrintTo(const Rational& r, std::ostream* os) { *os << r.str(); }
inline void PrintTo(const Scalar& s, std::ostream* os) { *os << s.str(); }
inline void PrintTo(const FrameVector& v, std::ostream* os) { *os << v.str(); }
inline void PrintTo(const BilinearForm& b, std::ostream* os) { *os << b.str(); }

}  // namespace nkc

namespace nkc::testing {

inline Scalar lam(const std::string& text) { return parse_scalar(text, std::vector<std::string>{"lambda"}); }

inline Rational q(long long n, long long d = 1) { return Rational(Rational::Int(n), Rational::Int(d)); }

// Status of a named check; a missing name is a test failure.
inline CheckStatus status_of(const VerificationReport& r, const std::string& name) {
  const Check* c = r.find(name);
  if (c == nullptr) {
    ADD_FAILURE() << "no check named " << name;
    return CheckStatus::not_applicable;
  }
  return c->status;
}

inline std::string value_of(const VerificationReport& r, const std::string& name) {
  const std::string* v = r.value(name);
  if (v == nullptr) {
    ADD_FAILURE() << "no value named " << name;
    return {};
  }
  return *v;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline LoadedManifest load_data(const std::string& name) {
  return load_manifest(read_file(std::string(NKC_DATA_DIR) + "/manifests/" + name));
}

// Full pipeline for a manifold with detected kappa.
struct Pipeline {
  FrameManifold m;
  AlmostContactData s;
  Connection lc;
  Curvature4Tensor r;
  BilinearForm ric;
  Endomorphism h;

  Pipeline(FrameManifold m_, AlmostContactData s_)
      : m(std::move(m_)), s(std::move(s_)), lc(levi_civita(m)), r(riemann(m, lc)), ric(ricci(r)),
        h(compute_h(m, s)) {}

  explicit Pipeline(const ZooEntry& e) : Pipeline(e.manifold, e.structure) {}
};

}  // namespace nkc::testing
