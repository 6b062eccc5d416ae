#pragma once

#include "nkc/contact.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nkc {

struct ZooEntry {
  std::string label;
  FrameManifold manifold;
  AlmostContactData structure;
  Scalar expected_kappa;
  std::vector<std::string> notes;
};

// Three-dimensional N(1 - lambda^2) family: [E1,E2] = (1+lambda)E3,
// [E2,E3] = 2E1, [E3,E1] = (1-lambda)E2, xi = E1, phi E2 = E3, phi E3 = -E2.
// Symbolic in "lambda" when no value is given.
ZooEntry make_lambda_family(std::optional<Rational> lambda = std::nullopt);
ZooEntry make_sasakian3();
// Flat frame carrying the lambda-family phi, xi, eta (not contact metric).
ZooEntry make_abelian();

std::vector<std::string> zoo_labels();
// "lambda" honours the optional value; other labels reject one.
ZooEntry make_zoo(const std::string& label, std::optional<Rational> lambda = std::nullopt);

// kappa' = (kappa + a^2 - 1)/a, mu' = (mu + 2a - 2)/a. With literal_c the mu
// numerator uses 2c with c = a - 1. Throws DomainError when a does not divide exactly.
std::pair<Scalar, Scalar> dhomothetic_invariants(const Scalar& kappa, const Scalar& mu, const Scalar& a,
                                                 bool literal_c = false);

struct BoeckxValue {
  std::optional<Rational> exact;
  Rational square;  // I^2
  int sign = 0;     // sign of I
  double approx = 0.0;
};

// I = (1 - mu/2)/sqrt(1 - kappa); kappa >= 1 is a DomainError.
BoeckxValue boeckx_invariant(const Rational& kappa, const Rational& mu);

enum class ExampleSign { plus, minus };

struct Example1Constants {
  std::optional<Rational> c;
  std::optional<Rational> a;
  double c_approx = 0.0;
  double a_approx = 0.0;
  // c = (n + 1 +- 2 sqrt(n))/(n - 1) rendered with sqrt(n) unexpanded.
  std::string c_surd;
};

// c = (sqrt(n) +- 1)^2/(n - 1), a = 1 + c; n <= 1 is a DomainError.
Example1Constants make_example1_constants(long long n, ExampleSign sign);

struct Example1Pipeline {
  Example1Constants constants;
  std::optional<Scalar> kappa, mu, kappa_bar, mu_bar, mu_bar_literal;
  Rational target_kappa;  // 1 - 1/n
  std::optional<Rational> difference;  // kappa_bar - target
  BoeckxValue target_boeckx;           // invariant of N(1 - 1/n, 0)
};

Example1Pipeline example1_pipeline(long long n, ExampleSign sign);

}  // namespace nkc
