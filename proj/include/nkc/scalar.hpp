#pragma once

#include "nkc/rational.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nkc {

// Ordered list of declared symbolic parameters shared by a family of Scalars.
class ParamSpace {
 public:
  ParamSpace() : names_(std::make_shared<const std::vector<std::string>>()) {}
  explicit ParamSpace(std::vector<std::string> names);

  const std::vector<std::string>& names() const { return *names_; }
  std::size_t size() const { return names_->size(); }
  bool empty() const { return names_->empty(); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const ParamSpace& a, const ParamSpace& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

// Multivariate polynomial with rational coefficients over a ParamSpace.
//
// Terms are keyed by dense exponent vectors (one entry per declared
// parameter) and kept canonical: no zero coefficients are ever stored, so
// equality of term maps is equality of polynomials. A Scalar declared over
// the empty ParamSpace is a constant and combines with Scalars over any
// space; mixing two different non-empty spaces raises ParameterMismatch.
class Scalar {
 public:
  using Exponents = std::vector<unsigned>;
  using Terms = std::map<Exponents, Rational>;

  Scalar() = default;
  Scalar(const Rational& c);  // NOLINT(google-explicit-constructor)
  Scalar(long long c) : Scalar(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  Scalar(int c) : Scalar(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static Scalar constant(const Rational& c, const ParamSpace& params);
  static Scalar variable(const ParamSpace& params, std::string_view name);
  // Build from explicit terms; zero coefficients are dropped.
  static Scalar from_terms(const ParamSpace& params, const Terms& terms);

  const ParamSpace& params() const { return params_; }
  const Terms& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::optional<Rational> constant_value() const;
  unsigned total_degree() const;

  // Exact evaluation; every parameter with a nonzero exponent must be assigned.
  Rational substitute(const std::map<std::string, Rational>& assignment) const;
  // Partial evaluation keeping the same ParamSpace.
  Scalar partial_substitute(const std::map<std::string, Rational>& assignment) const;

  // Canonical rendering in the expression grammar, ascending lexicographic
  // exponent order (constant term first).
  std::string str() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }

  Scalar scaled(const Rational& r) const;
  Scalar pow(unsigned e) const;

  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  Scalar(ParamSpace params, Terms terms) : params_(std::move(params)), terms_(std::move(terms)) {}

  // Re-express over `target`, which must equal params_ or params_ must be empty.
  Scalar promoted(const ParamSpace& target) const;
  static ParamSpace unify(const Scalar& a, const Scalar& b);

  ParamSpace params_;
  Terms terms_;
};

bool is_zero(const Scalar& s);

// Exact quotient p / q when q divides p in Q[params]; nullopt otherwise.
std::optional<Scalar> exact_divide(const Scalar& p, const Scalar& q);

// Parse the expression grammar
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' uint)?
//   base   := int | int '/' int | name | '(' expr ')' | '-' base
// over the declared parameter names. Throws ParseError with a 0-based offset.
Scalar parse_scalar(std::string_view text, const ParamSpace& params);
Scalar parse_scalar(std::string_view text, const std::vector<std::string>& params);

}  // namespace nkc
