#include <doctest.h>

#include <random>

#include "hn/polynomial.hpp"
#include "support/generators.hpp"

using namespace hn;
using hn::testing::poly;

namespace {

RatPoly rp(std::initializer_list<Rational> c) { return RatPoly(c); }

// Number of monomials of degree m in `vars` variables, by enumeration.
long long monomial_count(int vars, int m) {
  if (vars == 1) return 1;
  long long total = 0;
  for (int e = 0; e <= m; ++e) total += monomial_count(vars - 1, m - e);
  return total;
}

int sign_of(const Rational& q) { return q.sign(); }

RatPoly random_ratpoly(std::mt19937_64& rng, int max_degree, int max_den) {
  std::uniform_int_distribution<int> deg(0, max_degree), num(-6, 6), den(1, max_den);
  std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& a : c) a = Rational(num(rng), den(rng));
  return RatPoly(std::move(c));
}

NumPoly random_numpoly(std::mt19937_64& rng, std::size_t d) {
  std::uniform_int_distribution<int> b(-5, 5);
  std::vector<Rational> coeffs(d + 1);
  for (auto& x : coeffs) x = Rational(b(rng));
  return NumPoly(from_binomial_basis(coeffs));
}

}  // namespace

TEST_CASE("rational literals") {
  CHECK(Rational::parse("3/6").to_string() == "1/2");
  CHECK(Rational::parse("-4/2").to_string() == "-2");
  CHECK(Rational::parse("0").is_zero());
  CHECK(Rational(7, -14) == Rational(-1, 2));
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1.5"), ParseError);
  CHECK_THROWS_AS(Rational::parse(""), ParseError);
  CHECK_THROWS_AS(Rational::parse("--1"), ParseError);
  CHECK(Rational(-7, 2).floor() == Rational(-4));
  CHECK(Rational(-7, 2).ceil() == Rational(-3));
}

TEST_CASE("ring operations") {
  CHECK(sub(rp({2, 2}), rp({2, 1})) == rp({0, 1}));
  CHECK(evaluate(rp({2, 1}), 5) == Rational(7));
  CHECK(scale(Rational(1, 2), rp({0, 1, 1})) == rp({0, Rational(1, 2), Rational(1, 2)}));
  CHECK(add(rp({1, 1}), rp({-1, -1})).is_zero());
  CHECK(scale(Rational(0), rp({1, 2, 3})).is_zero());
}

TEST_CASE("zero polynomial has degree minus infinity") {
  const RatPoly zero;
  CHECK(zero.degree().is_minus_infinity());
  CHECK(zero.degree() < Degree(0));
  CHECK(rp({5}).degree() == Degree(0));
  CHECK_THROWS_AS((void)zero.degree().value(), std::logic_error);
  CHECK(rp({1, 0, 0}).degree() == Degree(0));  // trailing zeros trimmed
}

TEST_CASE("eventual comparison") {
  CHECK(eventual_cmp(rp({5, 1}), rp({0, 2})) == std::strong_ordering::less);
  const RatPoly f = rp({3, -1, 2});
  CHECK(eventual_cmp(f, f) == std::strong_ordering::equal);
  CHECK(eventual_cmp(rp({0, -100, 1}), rp({0, 1})) == std::strong_ordering::greater);
  CHECK(rp({-1000}) < rp({0, Rational(1, 1000)}));
}

TEST_CASE("rank") {
  CHECK(rank(NumPoly{}) == 0);
  CHECK(rank(poly({2, 2})) == 2);
  const NumPoly plane(rp({1, Rational(3, 2), Rational(1, 2)}));
  CHECK(rank(plane) == 1);

  // λ²/2 + 3λ/2 + 1 is C(λ+2, 2): it counts monomials of degree m in three
  // variables, and its binomial expansion is (1, 2, 1).
  CHECK(plane.poly() == Rational(1, 2) * (rp({1, 1}) * rp({2, 1})));
  for (int m = 0; m <= 12; ++m) CHECK(plane.poly().evaluate(m) == Rational(monomial_count(3, m)));
  CHECK(to_binomial_basis(plane) == std::vector<Rational>{1, 2, 1});
}

TEST_CASE("numerical polynomials") {
  CHECK(is_numerical(rp({0, Rational(1, 2), Rational(1, 2)})));
  CHECK(to_binomial_basis(rp({0, Rational(1, 2), Rational(1, 2)})) ==
        std::vector<Rational>{0, 1, 1});
  CHECK_FALSE(is_numerical(rp({0, Rational(1, 2)})));
  CHECK(is_numerical(rp({-3, 7, 0, 11})));
  CHECK(is_numerical(RatPoly{}));
  CHECK_THROWS_AS(NumPoly(rp({0, Rational(1, 2)})), NotNumerical);
  CHECK_FALSE(NumPoly::try_make(rp({Rational(1, 3)})).has_value());

  // Integer values on d+1 consecutive integers force integrality everywhere,
  // so sampling [-20, 20] is an exact oracle for degree <= 4.
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const RatPoly f = random_ratpoly(rng, 4, 6);
    bool sampled = true;
    for (int m = -20; m <= 20; ++m) sampled = sampled && f.evaluate(m).is_integer();
    CHECK(is_numerical(f) == sampled);
  }
}

TEST_CASE("stabilization bound satisfies its contract") {
  auto contract = [](const RatPoly& f, const RatPoly& g) {
    const std::int64_t m0 = stabilization_bound(f, g);
    const int s = sign_of((f - g).evaluate(m0));
    bool ok = s != 0;
    for (std::int64_t m = m0; m < m0 + 300; ++m) ok = ok && sign_of((f - g).evaluate(m)) == s;
    return std::make_pair(m0, ok);
  };
  const auto [m1, ok1] = contract(rp({0, 2}), rp({5, 1}));
  CHECK(ok1);
  CHECK(m1 >= 6);  // λ - 5 vanishes at 5
  const auto [m2, ok2] = contract(rp({0, 0, 1}), rp({0, 1}));
  CHECK(ok2);
  CHECK(m2 >= 2);  // roots 0 and 1
  CHECK(contract(rp({3, 1}), rp({4, 1})).second);
  CHECK_THROWS_AS(stabilization_bound(rp({1, 1}), rp({1, 1})), std::invalid_argument);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const RatPoly f = random_ratpoly(rng, 3, 4);
    const RatPoly g = random_ratpoly(rng, 3, 4);
    if (f == g) continue;
    CHECK(contract(f, g).second);
  }
}

TEST_CASE("eventual order is a total order that agrees with evaluation") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const NumPoly f = random_numpoly(rng, rng() % 3);
    const NumPoly g = random_numpoly(rng, rng() % 3);
    const NumPoly h = random_numpoly(rng, rng() % 3);
    CHECK(eventual_cmp(f, f) == 0);
    CHECK((0 <=> eventual_cmp(g, f)) == eventual_cmp(f, g));  // antisymmetry
    CHECK((eventual_cmp(f, g) == 0) == (f == g));
    if (f <= g && g <= h) CHECK(f <= h);
    CHECK((f < g || g < f || f == g));
    if (f != g) {
      const std::int64_t m0 = stabilization_bound(f, g);
      for (std::int64_t m : {m0, m0 + 1, m0 + 2}) {
        CHECK((f.poly().evaluate(m) <=> g.poly().evaluate(m)) == eventual_cmp(f, g));
      }
    }
  }
}

TEST_CASE("rank additivity and integrality closure") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t df = rng() % 3, dg = rng() % 3;
    const NumPoly f = random_numpoly(rng, df);
    const NumPoly g = random_numpoly(rng, dg);
    const NumPoly sum = f + g;  // closure: NumPoly arithmetic never leaves Z-valued polys
    CHECK(is_numerical(sum));
    CHECK(is_numerical(f - g));
    if (f.is_zero() || g.is_zero()) continue;
    if (f.degree() == g.degree()) {
      if (!sum.is_zero() && sum.degree() == f.degree()) CHECK(sum.rank() == f.rank() + g.rank());
    } else {
      const NumPoly& higher = f.degree() > g.degree() ? f : g;
      CHECK(sum.rank() == higher.rank());
    }
  }
}

TEST_CASE("binomial basis round trip") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const RatPoly f = random_ratpoly(rng, 5, 7);
    CHECK(from_binomial_basis(to_binomial_basis(f)) == f);
  }
  CHECK(to_binomial_basis(RatPoly{}).empty());
}

TEST_CASE("pretty printing") {
  CHECK(rp({2, 2}).to_string() == "2λ + 2");
  CHECK(rp({1, Rational(3, 2), Rational(1, 2)}).to_string() == "1/2λ^2 + 3/2λ + 1");
  CHECK(rp({0, -1}).to_string() == "-λ");
  CHECK(RatPoly{}.to_string() == "0");
}
