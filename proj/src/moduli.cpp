#include "legendrian/moduli.hpp"

#include <functional>

#include "legendrian/errors.hpp"
#include "legendrian/oracle.hpp"

namespace legendrian {

namespace {

std::size_t snapshot(const PlaneCurveGerm& c) { return std::hash<std::string>{}(c.to_string()); }

}  // namespace

NormalForm normal_form(const PlaneCurveGerm& input) {
  const int n = input.n(), m = input.m();
  require_generic_type(n, m);
  const NumericalSemigroup g = gamma(n, m).semigroup;
  const int sigma = PlaneCurveGerm::default_accuracy(n, m);
  if (input.accuracy() < sigma) {
    throw InsufficientPrecision("normal_form: curve known below " + std::to_string(input.accuracy()) +
                                ", need " + std::to_string(sigma));
  }
  PlaneCurveGerm cur = input.truncated(sigma);
  const NumericalSemigroup actual = conormal_semigroup(cur);
  if (!(actual == g)) {
    throw NonGenericCurve("non-generic curve: conormal semigroup " + actual.to_string() +
                          " differs from Γ(" + std::to_string(n) + "," + std::to_string(m) + ") = " +
                          g.to_string());
  }
  const std::optional<int> s = find_s_invariant(n, m);

  NormalForm out{cur, {}};
  const Rational am = cur.coefficient(m);
  if (!(am == Rational(1))) {
    const ContactMap h = homothety(1, am.inverse(), cur.weights(), sigma);
    cur = act_on_curve(h, cur);
    out.log.steps.push_back({m, h, snapshot(cur)});
  }

  while (true) {
    int k = -1;
    for (const auto& [i, a] : cur.coefficients()) {
      if (i > m && i != s.value_or(-1) && g.contains(i)) {
        k = i;
        break;
      }
    }
    if (k < 0) break;
    const Rational lambda = -cur.coefficient(k);
    ContactMap phi = [&] {
      try {
        return forget_transform(cur, k, lambda, true);
      } catch (const DomainError&) {
        return forget_transform(cur, k, lambda, false);
      }
    }();
    PlaneCurveGerm next = act_on_curve(phi, cur);
    bool ok = next.accuracy() == sigma && next.coefficient(k).is_zero();
    for (int i = 0; i < k && ok; ++i) ok = next.coefficient(i) == cur.coefficient(i);
    if (!ok) {
      throw Error("reduction stalled at exponent " + std::to_string(k) + ": " + cur.to_string() +
                  " -> " + next.to_string());
    }
    cur = std::move(next);
    out.log.steps.push_back({k, std::move(phi), snapshot(cur)});
  }
  out.curve = std::move(cur);
  return out;
}

std::vector<int> free_indices(int n, int m) {
  require_generic_type(n, m);
  const NumericalSemigroup g = gamma(n, m).semigroup;
  std::vector<int> out;
  for (int gap : g.gaps()) {
    if (gap > m) out.push_back(gap);
  }
  if (const auto s = find_s_invariant(n, m)) {
    out.push_back(*s);
    std::sort(out.begin(), out.end());
  }
  return out;
}

ModuliPoint moduli_point(const PlaneCurveGerm& c) {
  const NormalForm nf = normal_form(c);
  ModuliPoint p{c.n(), c.m(), {}};
  for (int i : free_indices(c.n(), c.m())) p.coordinates.emplace(i, Cyclotomic(nf.curve.coefficient(i)));
  return p;
}

ModuliPoint act_root_of_unity(const ModuliPoint& p, int k) {
  ModuliPoint q{p.n, p.m, {}};
  for (const auto& [i, a] : p.coordinates) {
    q.coordinates.emplace(i, Cyclotomic::root_of_unity(p.n, static_cast<long>(k) * (i - p.m)) * a);
  }
  return q;
}

std::optional<int> orbit_equivalent(const ModuliPoint& p1, const ModuliPoint& p2) {
  if (p1.n != p2.n || p1.m != p2.m) throw DomainError("orbit_equivalent: points of different types");
  for (int k = 0; k < p1.n; ++k) {
    const ModuliPoint q = act_root_of_unity(p1, k);
    bool same = q.coordinates.size() == p2.coordinates.size();
    for (const auto& [i, a] : q.coordinates) {
      if (!same) break;
      auto it = p2.coordinates.find(i);
      same = it != p2.coordinates.end() && it->second == a;
    }
    if (same) return k;
  }
  return std::nullopt;
}

ModuliPoint canonical_representative(const ModuliPoint& p) {
  ModuliPoint best = p;
  for (int k = 1; k < p.n; ++k) {
    const ModuliPoint q = act_root_of_unity(p, k);
    int cmp = 0;
    for (const auto& [i, a] : q.coordinates) {
      cmp = compare(a, best.coordinates.at(i));
      if (cmp != 0) break;
    }
    if (cmp < 0) best = q;
  }
  return best;
}

}  // namespace legendrian
