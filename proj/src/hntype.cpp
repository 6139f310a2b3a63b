#include "hn/hntype.hpp"

#include <stdexcept>

namespace hn {

std::string_view to_string(TypeViolation v) {
  switch (v) {
    case TypeViolation::Empty: return "EmptyType";
    case TypeViolation::Condition1: return "Condition1Violation";
    case TypeViolation::Condition2: return "Condition2Violation";
    case TypeViolation::NonIncreasingRank: return "NonIncreasingRank";
    case TypeViolation::Condition3: return "Condition3Violation";
  }
  return "Unknown";
}

HnTypeError::HnTypeError(TypeViolation violation, std::size_t index, const std::string& message)
    : Error(std::string(to_string(violation)), message), violation_(violation), index_(index) {}

std::string HnType::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < polys_.size(); ++i) {
    if (i) out += ", ";
    out += polys_[i].to_string();
  }
  return out + ")";
}

std::optional<HnTypeError> diagnose_hn_type(std::span<const NumPoly> polys) {
  if (polys.empty()) return HnTypeError(TypeViolation::Empty, 0, "HN type must be nonempty");
  const std::size_t p = polys.size();

  const NumPoly zero;
  for (std::size_t i = 0; i < p; ++i) {
    const NumPoly& prev = i == 0 ? zero : polys[i - 1];
    if (!(prev < polys[i])) {
      return HnTypeError(TypeViolation::Condition1, i + 1,
                         "f_" + std::to_string(i + 1) + " = " + polys[i].to_string() +
                             " is not strictly above " + prev.to_string());
    }
  }
  for (std::size_t i = 1; i < p; ++i) {
    if (polys[i].degree() != polys[0].degree()) {
      return HnTypeError(TypeViolation::Condition2, i + 1,
                         "f_" + std::to_string(i + 1) + " has a different degree than f_1");
    }
  }
  for (std::size_t i = 1; i < p; ++i) {
    if (polys[i].rank() <= polys[i - 1].rank()) {
      return HnTypeError(TypeViolation::NonIncreasingRank, i + 1,
                         "r(f_" + std::to_string(i + 1) + ") does not exceed r(f_" +
                             std::to_string(i) + ")");
    }
  }
  // slope_i = (f_i - f_{i-1}) / (r_i - r_{i-1}), with f_0 = 0 and r_0 = 0.
  // slope_i > slope_{i+1} is checked cross-multiplied by the positive rank gaps.
  for (std::size_t i = 1; i < p; ++i) {
    const RatPoly lower = i == 1 ? RatPoly{} : polys[i - 2].poly();
    const std::int64_t r_lower = i == 1 ? 0 : polys[i - 2].rank();
    const RatPoly rise_left = polys[i - 1].poly() - lower;
    const RatPoly rise_right = polys[i].poly() - polys[i - 1].poly();
    const Rational run_left(polys[i - 1].rank() - r_lower);
    const Rational run_right(polys[i].rank() - polys[i - 1].rank());
    if (!(rise_left * run_right > rise_right * run_left)) {
      return HnTypeError(TypeViolation::Condition3, i + 1,
                         "slope of segment " + std::to_string(i + 1) +
                             " is not strictly below slope of segment " + std::to_string(i));
    }
  }
  return std::nullopt;
}

HnType validate_hn_type(std::vector<NumPoly> polys) {
  if (auto err = diagnose_hn_type(polys)) throw *err;
  return HnType(std::move(polys));
}

HnType quotient_shift(const HnType& type) {
  if (type.length() < 2) throw std::invalid_argument("quotient_shift needs a type of length >= 2");
  std::vector<NumPoly> shifted;
  shifted.reserve(type.length() - 1);
  for (std::size_t i = 1; i < type.length(); ++i) shifted.push_back(type[i] - type.front());
  if (auto err = diagnose_hn_type(shifted)) {
    throw InvariantViolation("quotient_shift of " + type.to_string() +
                             " failed validation: " + err->what());
  }
  return validate_hn_type(std::move(shifted));
}

RatPoly HnPolygon::slope(std::size_t segment) const {
  const auto& lo = vertices_.at(segment);
  const auto& hi = vertices_.at(segment + 1);
  return Rational(1) / (hi.a - lo.a) * (hi.f - lo.f);
}

HnPolygon polygon_of(const HnType& type) {
  std::vector<PolygonPoint> vertices;
  vertices.reserve(type.length() + 1);
  vertices.push_back({Rational(0), RatPoly{}});
  for (const auto& f : type) vertices.push_back({Rational(f.rank()), f.poly()});
  return HnPolygon(std::move(vertices));
}

RatPoly interpolate_at(const HnPolygon& polygon, const Rational& a) {
  const auto& v = polygon.vertices();
  if (a < Rational(0) || a > polygon.width()) {
    throw OutOfRange("abscissa " + a.to_string() + " outside [0, " +
                     polygon.width().to_string() + "]");
  }
  std::size_t i = 0;
  while (i + 2 < v.size() && a > v[i + 1].a) ++i;
  const Rational t = (v[i + 1].a - a) / (v[i + 1].a - v[i].a);
  return t * v[i].f + (Rational(1) - t) * v[i + 1].f;
}

bool lies_under(const PolygonPoint& point, const HnPolygon& polygon) {
  if (!point.a.is_integer()) {
    throw std::invalid_argument("lies_under needs an integer abscissa, got " + point.a.to_string());
  }
  if (point.a < Rational(0) || point.a > polygon.width()) return false;
  return point.f <= interpolate_at(polygon, point.a);
}

bool hnt_leq(const HnType& lhs, const HnType& rhs) {
  const HnPolygon polygon = polygon_of(rhs);
  for (const auto& f : lhs) {
    if (!lies_under({Rational(f.rank()), f.poly()}, polygon)) return false;
  }
  return true;
}

std::string_view to_string(TypeComparison c) {
  switch (c) {
    case TypeComparison::Less: return "LEQ";
    case TypeComparison::Greater: return "GEQ";
    case TypeComparison::Equal: return "EQ";
    case TypeComparison::Incomparable: return "INCOMPARABLE";
  }
  return "INCOMPARABLE";
}

TypeComparison compare_types(const HnType& lhs, const HnType& rhs) {
  const bool le = hnt_leq(lhs, rhs);
  const bool ge = hnt_leq(rhs, lhs);
  if (le && ge) return TypeComparison::Equal;
  if (le) return TypeComparison::Less;
  if (ge) return TypeComparison::Greater;
  return TypeComparison::Incomparable;
}

}  // namespace hn
