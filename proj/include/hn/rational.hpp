#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hn {

// Exact rational number, always in lowest terms with a positive denominator.
// Backed by GMP so that no operation can overflow.
class Rational {
 public:
  Rational() = default;
  Rational(long long value);  // NOLINT: integers promote implicitly
  Rational(long long numerator, long long denominator);
  explicit Rational(mpq_class value);

  // Accepts "p" or "p/q" with an optional leading '-'; q must be nonzero.
  static Rational parse(std::string_view text);

  // Canonical ASCII form: "p" for integers, otherwise "p/q".
  std::string to_string() const;

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational abs() const;
  Rational floor() const;
  Rational ceil() const;

  // Integral value if it is an integer representable in 64 bits.
  std::optional<std::int64_t> to_int64() const;

  const mpq_class& gmp() const { return value_; }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);  // throws std::domain_error on zero

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return lhs.value_ == rhs.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) <=> 0;
  }

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace hn
