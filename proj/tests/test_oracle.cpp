#include <random>

#include "doctest.h"
#include "legendrian/curve.hpp"
#include "legendrian/errors.hpp"
#include "legendrian/oracle.hpp"
#include "legendrian/semigroup.hpp"

using namespace legendrian;

namespace {

PlaneCurveGerm curve(int n, std::map<int, Rational> coeffs, int accuracy = -1) {
  return PlaneCurveGerm(n, coeffs, accuracy);
}

PlaneCurveGerm random_curve(std::mt19937_64& rng, int n, int m, long range) {
  std::uniform_int_distribution<long> dist(-range, range);
  std::map<int, Rational> coeffs{{m, Rational(1)}};
  for (int i = m + 1; i < PlaneCurveGerm::default_accuracy(n, m); ++i) coeffs[i] = Rational(dist(rng));
  return PlaneCurveGerm(n, coeffs);
}

}  // namespace

TEST_CASE("plane curve validation") {
  CHECK_THROWS_AS(curve(3, {{9, 1}}), DomainError);
  CHECK_THROWS_AS(curve(3, {{2, 1}}), DomainError);
  CHECK_THROWS_AS(curve(3, {{10, 0}}), DomainError);
  CHECK_THROWS_AS(curve(3, {}), DomainError);
  const auto c = curve(3, {{10, 1}, {11, 2}, {40, 5}});
  CHECK(c.m() == 10);
  CHECK(c.accuracy() == 18);
  CHECK(c.conductor() == 18);
  CHECK_FALSE(c.coefficients().contains(40));
  CHECK(c.coefficient(11) == Rational(2));
  CHECK_THROWS_AS(c.coefficient(18), InsufficientPrecision);
  CHECK(strong_generic_position(c));
  CHECK_FALSE(strong_generic_position(curve(3, {{5, 1}})));
  CHECK(equisingularity_type(c) == std::pair{3, 10});
}

TEST_CASE("conormal slope") {
  const auto c = curve(3, {{10, 1}, {11, Rational(-2)}}, 20);
  const auto tri = conormal(c);
  CHECK(tri.P.accuracy() == 17);
  CHECK(tri.P[7] == Rational(10, 3));
  CHECK(tri.P[8] == Rational(-22, 3));
  // dy/dt = p dx/dt.
  const auto dy = tri.Y.derivative();
  const auto rhs = tri.P * tri.X.derivative();
  for (int k = 0; k < 16; ++k) CHECK(dy[k] == rhs[k]);
}

TEST_CASE("reparametrize round trip") {
  // x = t^3 (1 + t), y = t^10: rewrite in s and map back.
  Series<Rational> xs(30), ys(30);
  xs.set(3, 1);
  xs.set(4, 1);
  ys.set(10, 1);
  const auto c = reparametrize(xs, ys, 3);
  CHECK(c.n() == 3);
  CHECK(c.m() == 10);
  CHECK(c.coefficient(10) == Rational(1));
  CHECK(c.coefficient(11) == Rational(-10, 3));
  // Substituting s(t) back must return ys.
  Series<Rational> u = xs.shifted(-3);
  const auto s = nth_root(u, 3).shifted(1);
  const auto back = compose(c.y_series(), s);
  for (int k = 0; k < std::min(back.accuracy(), 30); ++k) CHECK(back[k] == ys[k]);
  Series<Rational> bad(10);
  bad.set(3, 2);
  CHECK_THROWS_AS(reparametrize(bad, ys, 3), DomainError);
}

TEST_CASE("oracle fixtures") {
  CHECK(conormal_semigroup(curve(3, {{10, 1}})) == NumericalSemigroup::generated_by({3, 7}));
  CHECK(conormal_semigroup(curve(3, {{10, 1}, {11, 1}})) == gamma(3, 10).semigroup);
  CHECK(conormal_semigroup(curve(3, {{10, 1}, {11, 1}, {13, 1}})) == gamma(3, 10).semigroup);
  CHECK_FALSE(conormal_semigroup(curve(3, {{10, 1}, {12, 1}})) == gamma(3, 10).semigroup);
  CHECK(conormal_semigroup(curve(2, {{7, 1}, {8, 3}})) == gamma(2, 7).semigroup);
  CHECK_THROWS_AS(conormal_semigroup(curve(3, {{10, 1}}, 15)), InsufficientPrecision);
}

TEST_CASE("oracle serial and parallel agree") {
  std::mt19937_64 rng(7);
  for (auto [n, m] : std::vector<std::pair<int, int>>{{3, 10}, {4, 9}, {4, 11}}) {
    const auto c = random_curve(rng, n, m, 1000);
    const auto rs = monomial_rows(c, c.conductor(), Execution::Serial);
    const auto rp = monomial_rows(c, c.conductor(), Execution::Parallel);
    REQUIRE(rs.size() == rp.size());
    for (std::size_t r = 0; r < rs.size(); ++r) {
      CHECK(rs[r].index == rp[r].index);
      CHECK(rs[r].coefficients == rp[r].coefficients);
    }
    CHECK(conormal_semigroup(c, Execution::Serial) == conormal_semigroup(c, Execution::Parallel));
  }
}

TEST_CASE("oracle matches gamma on random curves") {
  std::mt19937_64 rng(11);
  for (auto [n, m] : std::vector<std::pair<int, int>>{{3, 10}, {3, 11}, {4, 9}}) {
    for (int trial = 0; trial < 4; ++trial) {
      const auto c = random_curve(rng, n, m, 1000000);
      CHECK_MESSAGE(conormal_semigroup(c) == gamma(n, m).semigroup, c.to_string());
    }
  }
}

TEST_CASE("oracle over cyclotomic coefficients") {
  PlaneCurve<Cyclotomic> c(3, {{10, Cyclotomic(Rational(1))}, {11, Cyclotomic::root_of_unity(3, 1)}});
  CHECK(conormal_semigroup(c) == gamma(3, 10).semigroup);
}

TEST_CASE("echelon pivots") {
  Echelon<Rational> e(3);
  CHECK(e.insert({1, 2, 3}, 0) == 0);
  CHECK(e.insert({2, 4, 7}, 1) == 2);
  CHECK(e.insert({3, 6, 10}, 2) == -1);
  CHECK(e.insert({0, 1, 0}, 3) == 1);
  CHECK(e.pivots() == std::vector<int>{0, 1, 2});
}

TEST_CASE("realize order") {
  const auto c = curve(3, {{10, 1}, {11, 1}});
  const auto tri = conormal_exact(c, 30);
  for (int w : {13, 14, 16, 17}) {
    const auto f = realize_order(c, w, false);
    const auto v = f.evaluate(tri.X, tri.Y, tri.P);
    CHECK(v.valuation() == w);
    CHECK(v[w] == Rational(1));
  }
  CHECK_THROWS_WITH_AS(realize_order(c, 8, false), doctest::Contains("not realizable"), DomainError);
}

TEST_CASE("two-term curves x = t^3, y = t^m + t^(m+3nu+eps-3)") {
  for (int m : {10, 11, 13, 14, 16, 17}) {
    const int s = m / 3, eps = m % 3;
    for (int nu = 1; nu <= s - 1; ++nu) {
      const int k = m + 3 * nu + eps - 3;
      const PlaneCurveGerm c(3, {{m, Rational(1)}, {k, Rational(1)}});
      CAPTURE(m);
      CAPTURE(nu);
      // The third generator is the second exponent itself; at nu = s-1 it is 2(m-3).
      CHECK(conormal_semigroup(c) == NumericalSemigroup::generated_by({3, m - 3, k}));
    }
    CHECK(gamma(3, m).semigroup == NumericalSemigroup::generated_by({3, m - 3, m + eps}));
  }
}
