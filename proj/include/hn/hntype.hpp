#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hn/error.hpp"
#include "hn/polynomial.hpp"

namespace hn {

enum class TypeViolation {
  Empty,
  Condition1,         // 0 < f_1 < ... < f_p fails
  Condition2,         // degrees differ
  NonIncreasingRank,  // r(f_i) == r(f_{i-1}); the slope quotient is undefined
  Condition3,         // reduced slopes not strictly decreasing
};

// "Condition1Violation", "NonIncreasingRank", ...
std::string_view to_string(TypeViolation v);

class HnTypeError : public Error {
 public:
  // `index` is the 1-based position i of the polynomial f_i at which the
  // check failed (0 for an empty sequence).
  HnTypeError(TypeViolation violation, std::size_t index, const std::string& message);

  TypeViolation violation() const noexcept { return violation_; }
  std::size_t index() const noexcept { return index_; }

 private:
  TypeViolation violation_;
  std::size_t index_;
};

// A Harder-Narasimhan type (f_1, ..., f_p). Instances only exist in validated
// form; build them with validate_hn_type().
class HnType {
 public:
  const std::vector<NumPoly>& polys() const { return polys_; }
  std::size_t length() const { return polys_.size(); }
  const NumPoly& operator[](std::size_t i) const { return polys_[i]; }
  const NumPoly& front() const { return polys_.front(); }
  const NumPoly& back() const { return polys_.back(); }
  auto begin() const { return polys_.begin(); }
  auto end() const { return polys_.end(); }

  Degree degree() const { return polys_.front().degree(); }

  friend bool operator==(const HnType&, const HnType&) = default;

  std::string to_string() const;

 private:
  friend HnType validate_hn_type(std::vector<NumPoly> polys);
  explicit HnType(std::vector<NumPoly> polys) : polys_(std::move(polys)) {}
  std::vector<NumPoly> polys_;
};

// Non-throwing check; returns the first violated condition, if any.
std::optional<HnTypeError> diagnose_hn_type(std::span<const NumPoly> polys);

// Throws HnTypeError on failure.
HnType validate_hn_type(std::vector<NumPoly> polys);

// (f_2 - f_1, ..., f_p - f_1). Requires length >= 2.
HnType quotient_shift(const HnType& type);

struct PolygonPoint {
  Rational a;
  RatPoly f;

  friend bool operator==(const PolygonPoint&, const PolygonPoint&) = default;
};

// Concave piecewise-linear path through (0, 0) and (r(f_i), f_i).
class HnPolygon {
 public:
  const std::vector<PolygonPoint>& vertices() const { return vertices_; }
  const Rational& width() const { return vertices_.back().a; }

  // Slope polynomial of segment i (from vertex i to vertex i + 1).
  RatPoly slope(std::size_t segment) const;

 private:
  friend HnPolygon polygon_of(const HnType& type);
  explicit HnPolygon(std::vector<PolygonPoint> vertices) : vertices_(std::move(vertices)) {}
  std::vector<PolygonPoint> vertices_;
};

HnPolygon polygon_of(const HnType& type);

class OutOfRange : public Error {
 public:
  explicit OutOfRange(const std::string& message) : Error("OutOfRange", message) {}
};

// The h with (a, h) on the polygon. Throws OutOfRange unless 0 <= a <= r(f_p).
RatPoly interpolate_at(const HnPolygon& polygon, const Rational& a);

// Throws std::invalid_argument if point.a is not an integer.
bool lies_under(const PolygonPoint& point, const HnPolygon& polygon);

// Every vertex (r(f_i), f_i) of `lhs` lies under the polygon of `rhs`.
bool hnt_leq(const HnType& lhs, const HnType& rhs);

enum class TypeComparison { Less, Greater, Equal, Incomparable };

// LEQ / GEQ / EQ / INCOMPARABLE
std::string_view to_string(TypeComparison c);
TypeComparison compare_types(const HnType& lhs, const HnType& rhs);

}  // namespace hn
