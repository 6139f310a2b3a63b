#include "hn/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "hn/error.hpp"

namespace hn {

std::size_t Degree::value() const {
  if (!finite_) throw std::logic_error("degree of the zero polynomial is minus infinity");
  return value_;
}

std::ostream& operator<<(std::ostream& os, Degree d) {
  if (d.is_minus_infinity()) return os << "-inf";
  return os << d.value();
}

// ---------------------------------------------------------------------------
// RatPoly

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RatPoly::RatPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

RatPoly RatPoly::constant(const Rational& c) { return RatPoly({c}); }

RatPoly RatPoly::monomial(const Rational& c, std::size_t power) {
  std::vector<Rational> coeffs(power + 1);
  coeffs[power] = c;
  return RatPoly(std::move(coeffs));
}

void RatPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational RatPoly::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Rational{};
}

Degree RatPoly::degree() const {
  return coeffs_.empty() ? Degree::minus_infinity() : Degree(coeffs_.size() - 1);
}

Rational RatPoly::leading_coefficient() const {
  return coeffs_.empty() ? Rational{} : coeffs_.back();
}

Rational RatPoly::evaluate(std::int64_t m) const { return evaluate(Rational(m)); }

Rational RatPoly::evaluate(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

RatPoly& RatPoly::operator+=(const RatPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& a : coeffs_) a *= c;
  return *this;
}

RatPoly RatPoly::operator-() const {
  RatPoly out = *this;
  for (auto& a : out.coeffs_) a = -a;
  return out;
}

RatPoly operator*(const RatPoly& lhs, const RatPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return RatPoly(std::move(out));
}

std::strong_ordering operator<=>(const RatPoly& lhs, const RatPoly& rhs) {
  const std::size_t n = std::max(lhs.coeffs_.size(), rhs.coeffs_.size());
  for (std::size_t k = n; k-- > 0;) {
    const auto c = lhs.coefficient(k) <=> rhs.coefficient(k);
    if (c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering eventual_cmp(const RatPoly& f, const RatPoly& g) { return f <=> g; }

std::string RatPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    const Rational mag = c.abs();
    if (k == 0 || mag != Rational(1)) out += mag.to_string();
    if (k >= 1) out += "λ";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const RatPoly& f) { return os << f.to_string(); }

// ---------------------------------------------------------------------------
// Binomial basis

std::vector<Rational> to_binomial_basis(const RatPoly& f) {
  if (f.is_zero()) return {};
  const std::size_t d = f.degree().value();
  std::vector<Rational> diffs(d + 1);
  for (std::size_t m = 0; m <= d; ++m) diffs[m] = f.evaluate(static_cast<std::int64_t>(m));
  // In-place forward differences; afterwards diffs[k] = Δ^k f(0).
  for (std::size_t k = 1; k <= d; ++k) {
    for (std::size_t m = d; m >= k; --m) diffs[m] -= diffs[m - 1];
  }
  return diffs;
}

RatPoly from_binomial_basis(std::span<const Rational> coeffs) {
  RatPoly out;
  RatPoly basis = RatPoly::constant(1);  // C(λ, k)
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    out += coeffs[k] * basis;
    // C(λ, k+1) = C(λ, k) * (λ - k) / (k + 1)
    basis = basis * RatPoly({Rational(-static_cast<long long>(k)), Rational(1)});
    basis *= Rational(1, static_cast<long long>(k + 1));
  }
  return out;
}

bool is_numerical(const RatPoly& f) {
  const auto b = to_binomial_basis(f);
  return std::all_of(b.begin(), b.end(), [](const Rational& c) { return c.is_integer(); });
}

std::int64_t stabilization_bound(const RatPoly& f, const RatPoly& g) {
  const RatPoly h = f - g;
  if (h.is_zero()) throw std::invalid_argument("stabilization_bound: polynomials are equal");
  // Every real root x of h satisfies |x| < 1 + max_i |a_i / a_n|.
  const Rational lead = h.leading_coefficient().abs();
  Rational worst;
  const auto& a = h.coefficients();
  for (std::size_t i = 0; i + 1 < a.size(); ++i) worst = std::max(worst, a[i].abs() / lead);
  const Rational bound = (Rational(1) + worst).floor() + Rational(1);
  const auto m0 = bound.to_int64();
  if (!m0) throw std::overflow_error("stabilization_bound exceeds 64-bit range");
  return *m0;
}

// ---------------------------------------------------------------------------
// NumPoly

NumPoly::NumPoly(RatPoly f) : poly_(std::move(f)) {
  if (!is_numerical(poly_)) {
    throw NotNumerical("'" + poly_.to_string() + "' is not integer-valued on the integers");
  }
}

std::optional<NumPoly> NumPoly::try_make(RatPoly f) {
  if (!is_numerical(f)) return std::nullopt;
  return NumPoly(std::move(f), Trusted{});
}

NumPoly NumPoly::from_integers(std::initializer_list<long long> coeffs) {
  std::vector<Rational> q;
  q.reserve(coeffs.size());
  for (long long c : coeffs) q.emplace_back(c);
  return NumPoly(RatPoly(std::move(q)), Trusted{});
}

std::int64_t NumPoly::rank() const {
  if (poly_.is_zero()) return 0;
  const std::size_t d = poly_.degree().value();
  Rational r = poly_.leading_coefficient();
  for (std::size_t k = 2; k <= d; ++k) r *= Rational(static_cast<long long>(k));
  const auto out = r.to_int64();
  if (!out) throw std::overflow_error("rank of '" + poly_.to_string() + "' out of range");
  return *out;
}

NumPoly& NumPoly::operator+=(const NumPoly& rhs) {
  poly_ += rhs.poly_;
  return *this;
}

NumPoly& NumPoly::operator-=(const NumPoly& rhs) {
  poly_ -= rhs.poly_;
  return *this;
}

NumPoly operator*(std::int64_t c, const NumPoly& f) {
  return NumPoly(Rational(c) * f.poly_, NumPoly::Trusted{});
}

NumPoly NumPoly::operator-() const { return NumPoly(-poly_, Trusted{}); }

std::ostream& operator<<(std::ostream& os, const NumPoly& f) { return os << f.poly(); }

}  // namespace hn
