#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hn/rational.hpp"

namespace hn {

// Degree of a polynomial. The zero polynomial has degree minus infinity,
// which compares below every finite degree.
class Degree {
 public:
  constexpr explicit Degree(std::size_t value) : value_(value), finite_(true) {}
  static constexpr Degree minus_infinity() { return Degree(); }

  constexpr bool is_minus_infinity() const { return !finite_; }
  std::size_t value() const;  // throws std::logic_error on minus infinity

  friend constexpr bool operator==(Degree, Degree) = default;
  friend constexpr std::strong_ordering operator<=>(Degree lhs, Degree rhs) {
    if (lhs.finite_ != rhs.finite_) return lhs.finite_ <=> rhs.finite_;
    return lhs.value_ <=> rhs.value_;
  }

 private:
  constexpr Degree() = default;
  std::size_t value_ = 0;
  bool finite_ = false;
};

std::ostream& operator<<(std::ostream& os, Degree d);

// Element of Q[λ], stored in the monomial basis with trailing zeros trimmed.
//
// The relational operators implement the eventual order: f < g iff
// f(m) < g(m) for every sufficiently large integer m. This is a total order,
// decided by the sign of the leading coefficient of f - g.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);
  RatPoly(std::initializer_list<Rational> coeffs);

  static RatPoly constant(const Rational& c);
  static RatPoly monomial(const Rational& c, std::size_t power);

  // Lowest degree first.
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t power) const;

  Degree degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  Rational leading_coefficient() const;

  Rational evaluate(std::int64_t m) const;
  Rational evaluate(const Rational& x) const;

  RatPoly& operator+=(const RatPoly& rhs);
  RatPoly& operator-=(const RatPoly& rhs);
  RatPoly& operator*=(const Rational& c);

  friend RatPoly operator+(RatPoly lhs, const RatPoly& rhs) { return lhs += rhs; }
  friend RatPoly operator-(RatPoly lhs, const RatPoly& rhs) { return lhs -= rhs; }
  friend RatPoly operator*(RatPoly lhs, const Rational& c) { return lhs *= c; }
  friend RatPoly operator*(const Rational& c, RatPoly rhs) { return rhs *= c; }
  RatPoly operator-() const;

  // Full polynomial product (used for basis changes).
  friend RatPoly operator*(const RatPoly& lhs, const RatPoly& rhs);

  friend bool operator==(const RatPoly& lhs, const RatPoly& rhs) {
    return lhs.coeffs_ == rhs.coeffs_;
  }
  friend std::strong_ordering operator<=>(const RatPoly& lhs, const RatPoly& rhs);

  // Human-readable form in the variable λ, e.g. "1/2λ^2 + 3/2λ + 1".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const RatPoly& f);

// Sign of f - g at all sufficiently large integers.
std::strong_ordering eventual_cmp(const RatPoly& f, const RatPoly& g);

inline RatPoly add(const RatPoly& f, const RatPoly& g) { return f + g; }
inline RatPoly sub(const RatPoly& f, const RatPoly& g) { return f - g; }
inline RatPoly scale(const Rational& c, const RatPoly& f) { return c * f; }
inline Rational evaluate(const RatPoly& f, std::int64_t m) { return f.evaluate(m); }

// Coefficients b_k with f = sum_k b_k * C(λ, k), computed as the forward
// differences Δ^k f(0).
std::vector<Rational> to_binomial_basis(const RatPoly& f);
RatPoly from_binomial_basis(std::span<const Rational> coeffs);

// f(Z) ⊂ Z, i.e. every binomial-basis coefficient is an integer.
bool is_numerical(const RatPoly& f);

// An m0 with sign(f(m) - g(m)) constant for all integers m >= m0, from the
// Cauchy root bound of f - g. Throws std::invalid_argument when f == g.
std::int64_t stabilization_bound(const RatPoly& f, const RatPoly& g);

// A RatPoly known to be integer-valued on the integers.
class NumPoly {
 public:
  NumPoly() = default;
  explicit NumPoly(RatPoly f);  // throws NotNumerical

  static std::optional<NumPoly> try_make(RatPoly f);
  // Convenience for integer coefficients, lowest degree first.
  static NumPoly from_integers(std::initializer_list<long long> coeffs);

  const RatPoly& poly() const { return poly_; }
  operator const RatPoly&() const { return poly_; }  // NOLINT: NumPoly is-a RatPoly

  Degree degree() const { return poly_.degree(); }
  bool is_zero() const { return poly_.is_zero(); }

  // r(f): leading coefficient times d!, or 0 for the zero polynomial.
  std::int64_t rank() const;

  NumPoly& operator+=(const NumPoly& rhs);
  NumPoly& operator-=(const NumPoly& rhs);
  friend NumPoly operator+(NumPoly lhs, const NumPoly& rhs) { return lhs += rhs; }
  friend NumPoly operator-(NumPoly lhs, const NumPoly& rhs) { return lhs -= rhs; }
  friend NumPoly operator*(std::int64_t c, const NumPoly& f);
  NumPoly operator-() const;

  friend bool operator==(const NumPoly& lhs, const NumPoly& rhs) = default;
  friend std::strong_ordering operator<=>(const NumPoly& lhs, const NumPoly& rhs) {
    return lhs.poly_ <=> rhs.poly_;
  }

  std::string to_string() const { return poly_.to_string(); }

 private:
  struct Trusted {};
  NumPoly(RatPoly f, Trusted) : poly_(std::move(f)) {}
  RatPoly poly_;
};

inline std::int64_t rank(const NumPoly& f) { return f.rank(); }

std::ostream& operator<<(std::ostream& os, const NumPoly& f);

}  // namespace hn
