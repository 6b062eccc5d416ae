#include "nkc/scalar.hpp"

#include "nkc/error.hpp"

#include <algorithm>
#include <cctype>

namespace nkc {

ParamSpace::ParamSpace(std::vector<std::string> names)
    : names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {
  for (std::size_t i = 0; i < names_->size(); ++i) {
    for (std::size_t j = i + 1; j < names_->size(); ++j) {
      if ((*names_)[i] == (*names_)[j]) throw DomainError("duplicate parameter name '" + (*names_)[i] + "'");
    }
  }
}

std::optional<std::size_t> ParamSpace::index_of(std::string_view name) const {
  auto it = std::find(names_->begin(), names_->end(), name);
  if (it == names_->end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_->begin());
}

Scalar::Scalar(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(Exponents{}, c);
}

Scalar Scalar::constant(const Rational& c, const ParamSpace& params) {
  Terms t;
  if (!c.is_zero()) t.emplace(Exponents(params.size(), 0), c);
  return Scalar(params, std::move(t));
}

Scalar Scalar::variable(const ParamSpace& params, std::string_view name) {
  auto idx = params.index_of(name);
  if (!idx) throw DomainError("unknown parameter '" + std::string(name) + "'");
  Exponents e(params.size(), 0);
  e[*idx] = 1;
  return Scalar(params, Terms{{e, Rational(1)}});
}

Scalar Scalar::from_terms(const ParamSpace& params, const Terms& terms) {
  Terms t;
  for (const auto& [e, c] : terms) {
    if (e.size() != params.size()) throw DomainError("exponent vector length does not match parameter list");
    if (!c.is_zero()) t.emplace(e, c);
  }
  return Scalar(params, std::move(t));
}

bool Scalar::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
}

std::optional<Rational> Scalar::constant_value() const {
  if (!is_constant()) return std::nullopt;
  if (terms_.empty()) return Rational(0);
  return terms_.begin()->second;
}

unsigned Scalar::total_degree() const {
  unsigned best = 0;
  for (const auto& [e, c] : terms_) {
    unsigned d = 0;
    for (unsigned x : e) d += x;
    best = std::max(best, d);
  }
  return best;
}

Rational Scalar::substitute(const std::map<std::string, Rational>& assignment) const {
  const auto& names = params_.names();
  std::vector<std::optional<Rational>> values(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (auto it = assignment.find(names[i]); it != assignment.end()) values[i] = it->second;
  }
  Rational total;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!values[i]) throw IncompleteAssignment("no value assigned to parameter '" + names[i] + "'");
      for (unsigned k = 0; k < e[i]; ++k) term *= *values[i];
    }
    total += term;
  }
  return total;
}

Scalar Scalar::partial_substitute(const std::map<std::string, Rational>& assignment) const {
  const auto& names = params_.names();
  Terms out;
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      auto it = assignment.find(names[i]);
      if (it == assignment.end()) continue;
      for (unsigned k = 0; k < e[i]; ++k) term *= it->second;
      rest[i] = 0;
    }
    if (term.is_zero()) continue;
    auto [pos, inserted] = out.try_emplace(rest, term);
    if (!inserted) {
      pos->second += term;
      if (pos->second.is_zero()) out.erase(pos);
    }
  }
  return Scalar(params_, std::move(out));
}

namespace {

std::string monomial_str(const ParamSpace& params, const Scalar::Exponents& e, bool& first_has_power) {
  std::string out;
  first_has_power = false;
  bool first = true;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += params.names()[i];
    if (e[i] > 1) {
      out += "^" + std::to_string(e[i]);
      if (first) first_has_power = true;
    }
    first = false;
  }
  return out;
}

}  // namespace

std::string Scalar::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool leading = true;
  for (const auto& [e, c] : terms_) {
    bool powered = false;
    std::string mono = monomial_str(params_, e, powered);
    std::string term;
    if (mono.empty()) {
      term = c.str();
    } else if (c == Rational(1)) {
      term = mono;
    } else if (c == Rational(-1)) {
      // "-x^2" would parse as (-x)^2 under the grammar.
      term = (leading && powered) ? "-1*" + mono : "-" + mono;
    } else {
      term = c.str() + "*" + mono;
    }
    if (!leading && term.front() != '-') out += "+";
    out += term;
    leading = false;
  }
  return out;
}

ParamSpace Scalar::unify(const Scalar& a, const Scalar& b) {
  if (a.params_ == b.params_) return a.params_;
  if (a.params_.empty()) return b.params_;
  if (b.params_.empty()) return a.params_;
  throw ParameterMismatch("scalars declared over different parameter lists");
}

Scalar Scalar::promoted(const ParamSpace& target) const {
  if (params_ == target) return *this;
  Terms t;
  for (const auto& [e, c] : terms_) t.emplace(Exponents(target.size(), 0), c);
  return Scalar(target, std::move(t));
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  ParamSpace target = unify(*this, o);
  *this = promoted(target);
  Scalar rhs = o.promoted(target);
  for (const auto& [e, c] : rhs.terms_) {
    auto [pos, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      pos->second += c;
      if (pos->second.is_zero()) terms_.erase(pos);
    }
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  ParamSpace target = unify(*this, o);
  Scalar lhs = promoted(target);
  Scalar rhs = o.promoted(target);
  Terms out;
  for (const auto& [ea, ca] : lhs.terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      Rational c = ca * cb;
      auto [pos, inserted] = out.try_emplace(std::move(e), c);
      if (!inserted) {
        pos->second += c;
        if (pos->second.is_zero()) out.erase(pos);
      }
    }
  }
  *this = Scalar(target, std::move(out));
  return *this;
}

Scalar Scalar::scaled(const Rational& r) const {
  if (r.is_zero()) return Scalar(params_, {});
  Scalar out = *this;
  for (auto& [e, c] : out.terms_) c *= r;
  return out;
}

Scalar Scalar::pow(unsigned e) const {
  Scalar result = Scalar::constant(1, params_);
  Scalar base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

bool operator==(const Scalar& a, const Scalar& b) { return (a - b).is_zero(); }

bool is_zero(const Scalar& s) { return s.is_zero(); }

std::optional<Scalar> exact_divide(const Scalar& p, const Scalar& q) {
  if (q.is_zero()) throw DomainError("division by the zero polynomial");
  if (auto c = q.constant_value()) return p.scaled(Rational(1) / *c);
  // Lex-order leading-term division; q | p iff the remainder vanishes.
  Scalar remainder = p;
  Scalar quotient = Scalar::constant(0, q.params());
  const auto& [lead_e, lead_c] = *q.terms().rbegin();
  while (!remainder.is_zero()) {
    Scalar r = remainder;  // unify parameter spaces
    r += Scalar::constant(0, q.params());
    const auto& [re, rc] = *r.terms().rbegin();
    Scalar::Exponents diff(re.size());
    for (std::size_t i = 0; i < re.size(); ++i) {
      if (re[i] < lead_e[i]) return std::nullopt;
      diff[i] = re[i] - lead_e[i];
    }
    Scalar step = Scalar::from_terms(q.params(), {{diff, rc / lead_c}});
    quotient += step;
    remainder = r - step * q;
  }
  return quotient;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const ParamSpace& params) : text_(text), params_(params) {}

  Scalar parse() {
    Scalar value = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  bool at_digit() {
    skip_ws();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  Rational::Int integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return Rational::Int(std::string(text_.substr(start, pos_ - start)));
  }

  Scalar expr() {
    Scalar value = term();
    while (true) {
      if (accept('+')) {
        value += term();
      } else if (accept('-')) {
        value -= term();
      } else {
        return value;
      }
    }
  }

  Scalar term() {
    Scalar value = factor();
    while (accept('*')) value *= factor();
    return value;
  }

  Scalar factor() {
    Scalar value = base();
    if (accept('^')) {
      if (!at_digit()) fail("expected unsigned integer exponent");
      Rational::Int e = integer();
      if (e > 1024) fail("exponent too large");
      value = value.pow(e.convert_to<unsigned>());
    }
    if (peek('/')) fail("'/' is only allowed between integer literals");
    return value;
  }

  Scalar base() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational::Int num = integer();
      if (accept('/')) {
        if (!at_digit()) fail("division by a non-constant");
        std::size_t at = pos_;
        Rational::Int den = integer();
        if (den == 0) throw ParseError(at, "division by zero");
        return Scalar::constant(Rational(num, den), params_);
      }
      return Scalar::constant(Rational::from_int(num), params_);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string_view name = text_.substr(start, pos_ - start);
      if (!params_.index_of(name)) throw ParseError(start, "unknown identifier '" + std::string(name) + "'");
      return Scalar::variable(params_, name);
    }
    if (accept('(')) {
      Scalar inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (accept('-')) return -base();
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const ParamSpace& params_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text, const ParamSpace& params) { return Parser(text, params).parse(); }

Scalar parse_scalar(std::string_view text, const std::vector<std::string>& params) {
  return parse_scalar(text, ParamSpace(params));
}

}  // namespace nkc
