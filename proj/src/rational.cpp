#include "nkc/rational.hpp"

#include "nkc/error.hpp"

namespace nkc {

Rational::Rational(const Int& numerator, const Int& denominator) {
  if (denominator == 0) throw DomainError("rational with zero denominator");
  if (denominator < 0) {
    value_ = Value(Int(-numerator), Int(-denominator));
  } else {
    value_ = Value(numerator, denominator);
  }
}

Rational Rational::from_int(const Int& value) { return Rational(value, Int(1)); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  value_ /= o.value_;
  return *this;
}

namespace {

std::optional<Rational::Int> exact_isqrt(const Rational::Int& v) {
  if (v < 0) return std::nullopt;
  Rational::Int r = boost::multiprecision::sqrt(v);
  if (r * r != v) return std::nullopt;
  return r;
}

}  // namespace

std::optional<Rational> Rational::exact_sqrt() const {
  auto num = exact_isqrt(numerator());
  auto den = exact_isqrt(denominator());
  if (!num || !den) return std::nullopt;
  return Rational(*num, *den);
}

double Rational::to_double() const { return value_.convert_to<double>(); }

std::string Rational::str() const {
  if (is_integer()) return numerator().str();
  return numerator().str() + "/" + denominator().str();
}

}  // namespace nkc
