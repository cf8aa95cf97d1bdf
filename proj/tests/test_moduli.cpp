#include <random>

#include "doctest.h"
#include "legendrian/contact.hpp"
#include "legendrian/errors.hpp"
#include "legendrian/moduli.hpp"
#include "legendrian/oracle.hpp"

using namespace legendrian;

namespace {

PlaneCurveGerm curve(int n, std::map<int, Rational> coeffs, int accuracy = -1) {
  return PlaneCurveGerm(n, coeffs, accuracy);
}

GermQ random_germ(std::mt19937_64& rng, Weights w, int vmin, int accuracy, bool p_free) {
  GermQ g(w, accuracy);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> pick(0, 9);
  for (const auto& J : w.monomials_below(accuracy)) {
    if (w.of(J) < vmin || (p_free && J.l > 0) || J == Monomial{1, 0, 0}) continue;
    if (pick(rng) < 3) g.add_term(J, Rational(coeff(rng)));
  }
  return g;
}

}  // namespace

TEST_CASE("short form predicate") {
  CHECK(is_short_form(curve(3, {{10, 1}, {11, 2}})));
  CHECK_FALSE(is_short_form(curve(3, {{10, 1}, {13, 1}})));
  CHECK_FALSE(is_short_form(curve(3, {{10, 2}, {11, 1}})));
  CHECK(is_short_form(curve(2, {{7, 1}})));
  CHECK_FALSE(is_short_form(curve(3, {{10, 1}, {11, 2}, {14, 5}})));
}

TEST_CASE("normal form fixture") {
  const auto nf = normal_form(curve(3, {{10, 1}, {11, 1}, {13, 1}}));
  CHECK(is_short_form(nf.curve));
  std::vector<int> support;
  for (const auto& [i, a] : nf.curve.coefficients()) support.push_back(i);
  CHECK(support == std::vector<int>{10, 11});
  CHECK_FALSE(nf.curve.coefficient(11).is_zero());
  CHECK(nf.curve.accuracy() == 18);
  REQUIRE_FALSE(nf.log.steps.empty());
  for (std::size_t k = 1; k < nf.log.steps.size(); ++k)
    CHECK(nf.log.steps[k - 1].target < nf.log.steps[k].target);
  for (const auto& step : nf.log.steps) CHECK(verify_contact(step.map).ok);

  const auto again = normal_form(nf.curve);
  CHECK(again.curve == nf.curve);
  CHECK(again.log.steps.empty());
  CHECK(conormal_semigroup(nf.curve) == gamma(3, 10).semigroup);
}

TEST_CASE("normal form rejects non-generic curves") {
  CHECK_THROWS_WITH_AS(normal_form(curve(3, {{10, 1}, {12, 1}})), doctest::Contains("non-generic"),
                       NonGenericCurve);
  CHECK_THROWS_AS(normal_form(curve(3, {{10, 1}}, 15)), InsufficientPrecision);
}

TEST_CASE("normal form scales a_m") {
  const auto nf = normal_form(curve(3, {{10, 4}, {11, 2}}));
  CHECK(nf.curve.coefficient(10) == Rational(1));
  CHECK(nf.curve.coefficient(11) == Rational(1, 2));
}

TEST_CASE("normal form on random curves") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> d(-9, 9);
  for (auto [n, m] : std::vector<std::pair<int, int>>{{3, 10}, {3, 11}, {4, 9}, {2, 9}}) {
    for (int trial = 0; trial < 3; ++trial) {
      std::map<int, Rational> coeffs{{m, Rational(d(rng) == 0 ? 1 : 2)}};
      for (int i = m + 1; i < PlaneCurveGerm::default_accuracy(n, m); ++i) coeffs[i] = Rational(d(rng));
      if (const auto s = find_s_invariant(n, m)) coeffs[*s] = Rational(3);
      const auto c = curve(n, coeffs);
      const auto nf = normal_form(c);
      CHECK_MESSAGE(is_short_form(nf.curve), c.to_string());
      CHECK(normal_form(nf.curve).curve == nf.curve);
      CHECK(conormal_semigroup(nf.curve) == gamma(n, m).semigroup);
      if (const auto s = find_s_invariant(n, m)) CHECK_FALSE(nf.curve.coefficient(*s).is_zero());
    }
  }
}

TEST_CASE("free indices and moduli points") {
  CHECK(free_indices(3, 10) == std::vector<int>{11});
  CHECK(free_indices(2, 7).empty());
  CHECK(free_indices(4, 9) == std::vector<int>{11});
  for (auto [n, m] : std::vector<std::pair<int, int>>{{3, 10}, {3, 11}, {4, 9}, {4, 11}, {5, 12}})
    CHECK(static_cast<int>(free_indices(n, m).size()) == moduli_dimension(n, m));

  auto p = moduli_point(curve(3, {{10, 1}, {11, 2}}));
  REQUIRE(p.coordinates.size() == 1);
  CHECK(p.coordinates.at(11) == Cyclotomic(Rational(2)));
  CHECK(moduli_point(curve(2, {{7, 1}})).coordinates.empty());
  p = moduli_point(curve(4, {{9, 1}, {11, 1}, {10, 1}}));
  REQUIRE(p.coordinates.size() == 1);
  CHECK(p.coordinates.contains(11));
}

TEST_CASE("orbit equivalence") {
  const ModuliPoint one{3, 10, {{11, Cyclotomic(Rational(1))}}};
  const ModuliPoint zeta{3, 10, {{11, Cyclotomic::root_of_unity(3, 1)}}};
  const ModuliPoint two{3, 10, {{11, Cyclotomic(Rational(2))}}};
  CHECK(orbit_equivalent(one, one) == std::optional<int>(0));
  CHECK(orbit_equivalent(one, zeta) == std::optional<int>(1));
  CHECK_FALSE(orbit_equivalent(one, two).has_value());
  CHECK_THROWS_AS(orbit_equivalent(one, ModuliPoint{4, 9, {}}), DomainError);
  const auto rep = canonical_representative(zeta);
  CHECK(rep == canonical_representative(one));
  CHECK(orbit_equivalent(rep, one).has_value());
  for (int k = 0; k < 3; ++k) CHECK(canonical_representative(act_root_of_unity(two, k)) == canonical_representative(two));
}

TEST_CASE("root of unity action on curves") {
  const auto c = curve(3, {{10, 1}, {11, 2}});
  const auto t = act_root_of_unity(c, 1);
  CHECK(t.coefficient(10) == Cyclotomic(Rational(1)));
  CHECK(t.coefficient(11) == Cyclotomic::root_of_unity(3, 1) * Cyclotomic(Rational(2)));
  CHECK(is_short_form(t));
  CHECK(conormal_semigroup(t) == gamma(3, 10).semigroup);
}

TEST_CASE("moduli point is contact invariant") {
  std::mt19937_64 rng(8);
  const Weights w{3, 10};
  const auto c = curve(3, {{10, 1}, {11, 1}, {13, 2}, {14, -1}, {16, 1}}, 40);
  const auto before = moduli_point(c);
  for (int trial = 0; trial < 3; ++trial) {
    const auto alpha = random_germ(rng, w, 7, 30, false);
    const auto beta0 = random_germ(rng, w, 14, 30, true);
    const auto f = from_alpha_beta0(alpha, beta0, 30);
    const auto img = act_on_curve(f, c);
    CHECK(conormal_semigroup(img) == conormal_semigroup(c));
    CHECK(orbit_equivalent(before, moduli_point(img)).has_value());
  }
}
