#include "nkc/zoo.hpp"

#include "nkc/error.hpp"

#include <cmath>

namespace nkc {

namespace {

AlmostContactData lambda_structure(const ParamSpace& params) {
  const std::size_t d = 3;
  Endomorphism phi(d);
  phi(2, 1) = Scalar::constant(Rational(1), params);
  phi(1, 2) = Scalar::constant(Rational(-1), params);
  FrameVector xi = FrameVector::basis(d, 0);
  return AlmostContactData{phi, xi, xi};
}

}  // namespace

ZooEntry make_lambda_family(std::optional<Rational> lambda) {
  ParamSpace params = lambda ? ParamSpace() : ParamSpace({"lambda"});
  Scalar l = lambda ? Scalar(*lambda) : Scalar::variable(params, "lambda");
  Scalar one = Scalar::constant(Rational(1), params);
  std::vector<StructureConstant> c = {
      {0, 1, 2, one + l},
      {0, 2, 1, l - one},  // [E3,E1] = (1-lambda)E2
      {1, 2, 0, Scalar::constant(Rational(2), params)},
  };
  ZooEntry out{"lambda", FrameManifold(3, params, c), lambda_structure(params), one - l * l, {}};
  out.notes.push_back("[E1,E2] = (1+lambda)E3 reproduces the worked Levi-Civita table; the printed (1-lambda)E3 does not");
  return out;
}

ZooEntry make_sasakian3() {
  ZooEntry e = make_lambda_family(Rational(0));
  e.label = "sasakian3";
  return e;
}

ZooEntry make_abelian() {
  ParamSpace params;
  return ZooEntry{"abelian", FrameManifold(3, params, {}), lambda_structure(params), Scalar(0),
                  {"flat frame; the contact condition cannot hold"}};
}

std::vector<std::string> zoo_labels() { return {"lambda", "sasakian3", "abelian"}; }

ZooEntry make_zoo(const std::string& label, std::optional<Rational> lambda) {
  if (label == "lambda") return make_lambda_family(lambda);
  if (lambda) throw DomainError("zoo entry '" + label + "' takes no lambda value");
  if (label == "sasakian3") return make_sasakian3();
  if (label == "abelian") return make_abelian();
  throw DomainError("unknown zoo label '" + label + "'");
}

namespace {

Scalar divide_by(const Scalar& p, const Scalar& a) {
  if (a.is_zero()) throw DomainError("deformation constant a must be nonzero");
  if (auto c = a.constant_value()) return p.scaled(Rational(1) / *c);
  auto q = exact_divide(p, a);
  if (!q) throw DomainError("a does not divide " + p.str() + " exactly");
  return *q;
}

}  // namespace

std::pair<Scalar, Scalar> dhomothetic_invariants(const Scalar& kappa, const Scalar& mu, const Scalar& a,
                                                 bool literal_c) {
  Scalar kbar = divide_by(kappa + a * a - Scalar(1), a);
  Scalar two_c = literal_c ? Scalar(2) * (a - Scalar(1)) : Scalar(2) * a;
  Scalar mbar = divide_by(mu + two_c - Scalar(2), a);
  return {kbar, mbar};
}

BoeckxValue boeckx_invariant(const Rational& kappa, const Rational& mu) {
  if (kappa >= Rational(1)) throw DomainError("Boeckx invariant needs kappa < 1, got " + kappa.str());
  const Rational num = Rational(1) - mu / Rational(2);
  const Rational rad = Rational(1) - kappa;
  BoeckxValue v;
  v.square = num * num / rad;
  v.sign = num.sign();
  if (auto r = rad.exact_sqrt()) v.exact = num / *r;
  v.approx = num.to_double() / std::sqrt(rad.to_double());
  return v;
}

Example1Constants make_example1_constants(long long n, ExampleSign sign) {
  if (n == 1) throw DomainError("n = 1 divides by zero in c = (sqrt(n) +- 1)^2/(n - 1)");
  if (n < 1) throw DomainError("n must be a positive integer");
  const char op = sign == ExampleSign::plus ? '+' : '-';
  Example1Constants out;
  out.c_surd = "(" + std::to_string(n + 1) + op + "2*sqrt(" + std::to_string(n) + "))/" + std::to_string(n - 1);
  const double sq = std::sqrt(static_cast<double>(n));
  const double s = sign == ExampleSign::plus ? 1.0 : -1.0;
  out.c_approx = (sq + s) * (sq + s) / static_cast<double>(n - 1);
  out.a_approx = 1.0 + out.c_approx;
  if (auto r = Rational(n).exact_sqrt()) {
    Rational t = *r + Rational(sign == ExampleSign::plus ? 1 : -1);
    out.c = t * t / Rational(n - 1);
    out.a = Rational(1) + *out.c;
  }
  return out;
}

Example1Pipeline example1_pipeline(long long n, ExampleSign sign) {
  Example1Pipeline p;
  p.constants = make_example1_constants(n, sign);
  p.target_kappa = Rational(1) - Rational(1, n);
  p.target_boeckx = boeckx_invariant(p.target_kappa, Rational(0));
  if (p.constants.c) {
    const Scalar c(*p.constants.c), a(*p.constants.a);
    p.kappa = c * (Scalar(2) - c);
    p.mu = Scalar(-2) * c;
    auto [kb, mb] = dhomothetic_invariants(*p.kappa, *p.mu, a);
    p.kappa_bar = kb;
    p.mu_bar = mb;
    p.mu_bar_literal = dhomothetic_invariants(*p.kappa, *p.mu, a, true).second;
    p.difference = *kb.constant_value() - p.target_kappa;
  }
  return p;
}

}  // namespace nkc
