#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <optional>
#include <string>

namespace nkc {

// Exact rational number in lowest terms with a positive denominator.
class Rational {
 public:
  using Int = boost::multiprecision::cpp_int;

  Rational() = default;
  Rational(long long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const Int& numerator, const Int& denominator);

  static Rational from_int(const Int& value);

  Int numerator() const { return boost::multiprecision::numerator(value_); }
  Int denominator() const { return boost::multiprecision::denominator(value_); }

  bool is_zero() const { return value_ == 0; }
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return value_.sign(); }

  // Square root when both numerator and denominator are perfect squares.
  std::optional<Rational> exact_sqrt() const;
  double to_double() const;

  // "n" or "n/d".
  std::string str() const;

  Rational operator-() const { return Rational(Raw{-value_}); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  using Value = boost::multiprecision::cpp_rational;
  struct Raw {
    Value v;
  };
  explicit Rational(Raw raw) : value_(std::move(raw.v)) {}

  Value value_;
};

}  // namespace nkc
