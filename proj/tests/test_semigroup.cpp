#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"
#include "legendrian/errors.hpp"
#include "legendrian/semigroup.hpp"

using namespace legendrian;

namespace {

// Gaps of ⟨gens⟩ by dynamic programming up to a generous limit.
std::vector<int> brute_gaps(std::vector<int> gens, int limit = 400) {
  std::vector<bool> in(limit, false);
  in[0] = true;
  for (int k = 1; k < limit; ++k)
    for (int g : gens)
      if (g <= k && in[k - g]) in[k] = true;
  std::vector<int> gaps;
  for (int k = 0; k < limit; ++k)
    if (!in[k]) gaps.push_back(k);
  return gaps;
}

int brute_count(int i, int n, int m) {
  int c = 0;
  for (int a = 0; a * n <= i; ++a)
    for (int b = 0; a * n + b * m <= i; ++b)
      for (int l = 0; a * n + b * m + l * (m - n) <= i; ++l)
        if (a * n + b * m + l * (m - n) == i) ++c;
  return c;
}

}  // namespace

TEST_CASE("two generator semigroups") {
  const auto s23 = two_generator_semigroup(2, 3);
  CHECK(s23.conductor() == 2);
  CHECK(s23.gaps() == std::vector<int>{1});
  const auto s310 = two_generator_semigroup(3, 10);
  CHECK(s310.conductor() == 18);
  CHECK(s310.gaps() == std::vector<int>{1, 2, 4, 5, 7, 8, 11, 14, 17});
  CHECK(two_generator_semigroup(3, 4).gaps() == std::vector<int>{1, 2, 5});
  CHECK_THROWS_AS(two_generator_semigroup(4, 10), DomainError);
  for (int n = 2; n < 8; ++n)
    for (int m = n + 1; m < 30; ++m) {
      if (std::gcd(n, m) != 1) continue;
      const auto s = two_generator_semigroup(n, m);
      CHECK(s.conductor() == (n - 1) * (m - 1));
      CHECK(s.gaps() == brute_gaps({n, m}));
    }
}

TEST_CASE("monomial counts") {
  CHECK(monomial_count(0, 3, 10) == 1);
  CHECK(monomial_count(10, 3, 10) == 2);
  CHECK(monomial_count(14, 3, 10) == 1);
  for (int i = 0; i < 60; ++i) CHECK(monomial_count(i, 4, 11) == brute_count(i, 4, 11));
}

TEST_CASE("gamma fixtures") {
  CHECK(gamma(3, 7).semigroup == NumericalSemigroup::generated_by({3, 4}));
  CHECK(gamma(3, 8).semigroup == NumericalSemigroup::generated_by({3, 5}));
  CHECK(gamma(3, 10).semigroup.gaps() == std::vector<int>{1, 2, 4, 5, 8});
  CHECK(gamma(3, 10).semigroup == NumericalSemigroup::generated_by({3, 7, 11}));
  CHECK(gamma(4, 9).semigroup.gaps() == std::vector<int>{1, 2, 3, 6, 7});
  CHECK(gamma(4, 9).semigroup == NumericalSemigroup::generated_by({4, 5, 11}));
  CHECK_THROWS_AS(gamma(4, 10), DomainError);
  CHECK_THROWS_AS(gamma(3, 5), DomainError);

  const auto table = gamma(3, 10).table;
  CHECK(table.base_conductor == 18);
  std::vector<int> processed;
  for (const auto& e : table.entries) processed.push_back(e.i);
  CHECK(processed == std::vector<int>{17, 16, 14, 13, 10, 7});
  CHECK(table.entries[4].sharp == 2);
  CHECK(table.entries[4].omega == 11);
  CHECK(table.entries[4].tau == std::vector<int>{10, 11});
}

TEST_CASE("s invariant and moduli dimension") {
  CHECK(s_invariant(3, 10) == 11);
  CHECK(s_invariant(4, 9) == 11);
  CHECK_THROWS_WITH_AS(s_invariant(2, 7), doctest::Contains("no s-invariant"), DomainError);
  CHECK_FALSE(find_s_invariant(3, 7).has_value());
  CHECK_FALSE(find_s_invariant(3, 8).has_value());
  CHECK(moduli_dimension(2, 7) == 0);
  CHECK(moduli_dimension(3, 10) == 1);
  CHECK(moduli_dimension(3, 7) == 0);
}

TEST_CASE("gamma structural properties") {
  for (int n = 2; n <= 6; ++n)
    for (int m = 2 * n + 1; m <= 40; ++m) {
      if (std::gcd(n, m) != 1) continue;
      const auto r = gamma(n, m);
      const auto& g = r.semigroup;
      CHECK(g.contains(n));
      CHECK(g.contains(m - n));
      CHECK(g.contains(m));
      CHECK(g.conductor() <= (n - 1) * (m - 1));
      CHECK(g.is_closed());
      const auto base = NumericalSemigroup::generated_by({n, m - n});
      for (int k = 0; k < (n - 1) * (m - 1); ++k)
        if (base.contains(k)) CHECK(g.contains(k));
      int previous = (n - 1) * (m - 1);
      for (const auto& e : r.table.entries) {
        CHECK(e.sharp >= 1);
        // The sharper ω ≤ i+n-2 fails (see the (3,11) case below); equality at i+n-1 forces
        // every integer from i on into the semigroup.
        CHECK(e.omega <= e.i + n - 1);
        if (e.omega == e.i + n - 1)
          for (int k = e.i; k < e.i + 2 * n; ++k) CHECK(g.contains(k));
        CHECK(e.i < previous);
        CHECK(base.contains(e.i));
        previous = e.i;
        std::vector<int> tau;
        for (int k = e.i; k <= e.omega; ++k)
          if (k % n != 0) tau.push_back(k);
        CHECK(e.tau == tau);
      }
      REQUIRE_FALSE(r.table.entries.empty());
      CHECK(r.table.entries.back().i == m - n);
      CHECK(gamma(n, m).table == r.table);
    }
}

TEST_CASE("omega reaches i+n-1 at (3,11)") {
  // Valuation 11 carries two monomials (y and x p); the nonmembers from 11 on are 11 and 13.
  const auto r = gamma(3, 11);
  const auto it = std::find_if(r.table.entries.begin(), r.table.entries.end(),
                               [](const TrajectoryEntry& e) { return e.i == 11; });
  REQUIRE(it != r.table.entries.end());
  CHECK(it->sharp == 2);
  CHECK(it->omega == 13);
  CHECK(it->tau == std::vector<int>{11, 13});
  CHECK(r.semigroup.conductor() <= 11);
}

TEST_CASE("gamma for n = 2") {
  for (int m = 5; m <= 25; m += 2) CHECK(gamma(2, m).semigroup == NumericalSemigroup::generated_by({2, m - 2}));
}

TEST_CASE("semigroup helpers") {
  const auto s = NumericalSemigroup::generated_by({3, 7, 11});
  CHECK(s.minimal_generators() == std::vector<int>{3, 7, 11});
  CHECK(s.contains(0));
  CHECK_FALSE(s.contains(-1));
  CHECK(NumericalSemigroup::from_members(10, {0, 3, 6, 7, 9}).conductor() == 9);
}
