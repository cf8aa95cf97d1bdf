#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "legendrian/contact.hpp"
#include "legendrian/curve.hpp"
#include "legendrian/cyclotomic.hpp"
#include "legendrian/semigroup.hpp"

namespace legendrian {

/// a_m = 1 and the only semigroup exponents carrying coefficients are m and s(n, m).
template <class F>
bool is_short_form(const PlaneCurve<F>& c) {
  if (!(c.coefficient(c.m()) == F(1))) return false;
  if (c.m() < 2 * c.n() + 1) return c.coefficients().size() == 1;
  const NumericalSemigroup g = gamma(c.n(), c.m()).semigroup;
  const std::optional<int> s = find_s_invariant(c.n(), c.m());
  for (const auto& [i, a] : c.coefficients()) {
    if (i == c.m() || (s && i == *s)) continue;
    if (g.contains(i)) return false;
  }
  return true;
}

struct ReductionStep {
  int target = 0;
  ContactMap map;
  std::size_t snapshot = 0;  ///< hash of the curve after the step
};

struct ReductionLog {
  std::vector<ReductionStep> steps;
};

struct NormalForm {
  PlaneCurveGerm curve;
  ReductionLog log;
};

/// Legendrian short form of a generic curve: a_m is scaled to 1, then semigroup exponents
/// other than m and s are removed smallest first, and the result is truncated at
/// max((n-1)(m-1), m+1). Throws NonGenericCurve when the conormal semigroup is not Γ(n, m).
NormalForm normal_form(const PlaneCurveGerm& c);

/// ({m+1, ..., c-1} \ Γ(n,m)) ∪ {s(n,m)}, increasing.
std::vector<int> free_indices(int n, int m);

struct ModuliPoint {
  int n = 0;
  int m = 0;
  std::map<int, Cyclotomic> coordinates;
  friend bool operator==(const ModuliPoint&, const ModuliPoint&) = default;
};

ModuliPoint moduli_point(const PlaneCurveGerm& c);

/// θ = ζ_n^k acting by a_i -> θ^{i-m} a_i.
ModuliPoint act_root_of_unity(const ModuliPoint& p, int k);
template <class F>
PlaneCurve<Cyclotomic> act_root_of_unity(const PlaneCurve<F>& c, int k) {
  typename PlaneCurve<Cyclotomic>::Coefficients out;
  for (const auto& [i, a] : c.coefficients()) {
    out.emplace(i, Cyclotomic::root_of_unity(c.n(), static_cast<long>(k) * (i - c.m())) * Cyclotomic(a));
  }
  return PlaneCurve<Cyclotomic>(c.n(), out, c.accuracy());
}

/// The k in {0, ..., n-1} with p2 = ζ^k · p1, if any.
std::optional<int> orbit_equivalent(const ModuliPoint& p1, const ModuliPoint& p2);

/// The W_n-transform of p that is smallest under coordinatewise cyclotomic comparison.
ModuliPoint canonical_representative(const ModuliPoint& p);

}  // namespace legendrian
