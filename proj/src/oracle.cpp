#include "legendrian/oracle.hpp"

#include <algorithm>
#include <optional>

#include "legendrian/errors.hpp"

namespace legendrian {

namespace {

template <class F>
std::vector<Series<F>> powers(const Series<F>& s, int top, int bound) {
  std::vector<Series<F>> out{Series<F>::one(bound)};
  for (int e = 1; e <= top; ++e) out.push_back((out.back() * s).truncated(bound));
  return out;
}

template <class F>
std::vector<F> dense(const Series<F>& s, int bound) {
  std::vector<F> out(bound, F(0));
  for (int k = 0; k < bound && k < s.accuracy(); ++k) out[k] = s[k];
  if (s.accuracy() < bound) throw InsufficientPrecision("monomial row: expansion too short");
  return out;
}

// Residual of `v` after elimination against `rows`, with the combination used.
template <class F>
std::pair<std::vector<F>, std::map<int, F>> reduce(const std::map<int, std::vector<F>>& rows,
                                                  const std::map<int, std::map<int, F>>& combos,
                                                  std::vector<F> v) {
  std::map<int, F> combo;
  for (const auto& [pivot, row] : rows) {
    if (is_zero(v[pivot])) continue;
    const F factor = v[pivot];
    for (std::size_t k = pivot; k < v.size(); ++k) {
      if (!is_zero(row[k])) v[k] -= factor * row[k];
    }
    for (const auto& [tag, coeff] : combos.at(pivot)) {
      combo[tag] -= factor * coeff;
      if (is_zero(combo[tag])) combo.erase(tag);
    }
  }
  return {std::move(v), std::move(combo)};
}

}  // namespace

template <class F>
int Echelon<F>::insert(std::vector<F> row, int tag) {
  if (static_cast<int>(row.size()) != columns_) throw DomainError("Echelon: wrong row length");
  auto [v, combo] = reduce(rows_, combos_, std::move(row));
  // v = row + Σ combo·(stored rows): record v in terms of inserted rows.
  combo[tag] += F(1);
  int pivot = -1;
  for (int k = 0; k < columns_; ++k) {
    if (!is_zero(v[k])) {
      pivot = k;
      break;
    }
  }
  if (pivot < 0) return -1;
  const F inv = F(1) / v[pivot];
  for (int k = pivot; k < columns_; ++k) v[k] = inv * v[k];
  for (auto& [t, c] : combo) c = inv * c;
  std::erase_if(combo, [](const auto& kv) { return is_zero(kv.second); });
  rows_.emplace(pivot, std::move(v));
  combos_.emplace(pivot, std::move(combo));
  return pivot;
}

template <class F>
std::vector<int> Echelon<F>::pivots() const {
  std::vector<int> out;
  for (const auto& [p, r] : rows_) out.push_back(p);
  return out;
}

template <class F>
std::vector<MonomialRow<F>> monomial_rows(const PlaneCurve<F>& c, int bound, Execution mode) {
  const Weights w = c.weights();
  const std::vector<Monomial> index = w.monomials_below(bound);
  const ConormalTriple<F> tri = conormal_exact(c, bound);
  std::vector<MonomialRow<F>> rows(index.size());

  if (mode == Execution::Serial) {
    for (std::size_t r = 0; r < index.size(); ++r) {
      const Series<F> e = Germ<F>::monomial(w, index[r], F(1), bound).evaluate(tri.X, tri.Y, tri.P);
      rows[r] = MonomialRow<F>{index[r], w.of(index[r]), dense(e.truncated(bound), bound)};
    }
    return rows;
  }

  int max_j = 0, max_l = 0;
  for (const auto& J : index) {
    max_j = std::max(max_j, J.j);
    max_l = std::max(max_l, J.l);
  }
  const auto py = powers(tri.Y, max_j, bound);
  const auto pp = powers(tri.P, max_l, bound);
  const long count = static_cast<long>(index.size());
  parallel_for(count, Execution::Parallel, [&](long r) {
    const Monomial& J = index[r];
    const Series<F> yp = (py[J.j] * pp[J.l]).truncated(bound - J.i * c.n());
    std::vector<F> coeffs(bound, F(0));
    for (int k = 0; k + J.i * c.n() < bound; ++k) coeffs[k + J.i * c.n()] = yp[k];
    rows[r] = MonomialRow<F>{J, w.of(J), std::move(coeffs)};
  });
  return rows;
}

template <class F>
NumericalSemigroup conormal_semigroup(const PlaneCurve<F>& c, Execution mode) {
  const int bound = c.conductor();
  if (c.accuracy() < bound) {
    throw InsufficientPrecision("conormal_semigroup: curve accuracy " + std::to_string(c.accuracy()) +
                                " below the conductor " + std::to_string(bound));
  }
  if (bound <= 0) return NumericalSemigroup::from_members(0, {});
  auto rows = monomial_rows(c, bound, mode);
  std::stable_sort(rows.begin(), rows.end(),
                   [](const auto& a, const auto& b) { return a.valuation < b.valuation; });
  Echelon<F> ech(bound);
  int tag = 0;
  for (auto& row : rows) ech.insert(std::move(row.coefficients), tag++);
  return NumericalSemigroup::from_members(bound, ech.pivots());
}

namespace {

// Coefficients c_J (one per chosen row) with Σ c_J row_J = t^w on columns [0, w], if the
// chosen rows are independent and such a combination exists.
std::optional<std::vector<Rational>> solve_subset(const std::vector<const std::vector<Rational>*>& chosen,
                                                  int w) {
  Echelon<Rational> ech(w + 1);
  for (std::size_t k = 0; k < chosen.size(); ++k) {
    std::vector<Rational> r(chosen[k]->begin(), chosen[k]->begin() + w + 1);
    if (ech.insert(std::move(r), static_cast<int>(k)) < 0) return std::nullopt;
  }
  std::vector<Rational> target(w + 1, Rational(0));
  target[w] = 1;
  auto [residual, combo] = reduce(ech.rows(), [&] {
    std::map<int, std::map<int, Rational>> m;
    for (int p : ech.pivots()) m.emplace(p, ech.combination(p));
    return m;
  }(), target);
  for (const auto& x : residual) {
    if (!x.is_zero()) return std::nullopt;
  }
  // residual = target - Σ combo... sign: reduce subtracts, so target = -Σ combo·rows.
  std::vector<Rational> out(chosen.size(), Rational(0));
  for (const auto& [tag, coeff] : combo) out[tag] = -coeff;
  for (const auto& x : out) {
    if (x.is_zero()) return std::nullopt;  // a smaller support exists
  }
  return out;
}

constexpr long kSubsetBudget = 20000;

}  // namespace

Germ<Rational> realize_order(const PlaneCurveGerm& c, int w, bool shape_constrained) {
  if (w < 0) throw DomainError("realize_order: negative order");
  const int bound = w + 1;
  const Weights wts = c.weights();
  const int lowest = shape_constrained ? std::max(0, w - c.n() + 1) : 0;
  auto all_rows = monomial_rows(c, bound, Execution::Parallel);

  // Feasibility over all monomials first, to distinguish the two failure modes.
  {
    Echelon<Rational> ech(bound);
    int tag = 0;
    for (const auto& r : all_rows) ech.insert(r.coefficients, tag++);
    const auto p = ech.pivots();
    if (!std::binary_search(p.begin(), p.end(), w)) {
      throw DomainError("order not realizable: " + std::to_string(w) +
                        " is not in the conormal semigroup");
    }
  }

  std::vector<MonomialRow<Rational>> rows;
  for (auto& r : all_rows) {
    if (r.valuation >= lowest) rows.push_back(std::move(r));
  }
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.index < b.index; });

  Echelon<Rational> ech(bound);
  for (std::size_t k = 0; k < rows.size(); ++k) ech.insert(rows[k].coefficients, static_cast<int>(k));
  const auto pivots = ech.pivots();
  if (!std::binary_search(pivots.begin(), pivots.end(), w)) {
    throw DomainError("shape-constrained realization unavailable for order " + std::to_string(w));
  }

  const auto to_germ = [&](const std::vector<std::size_t>& support, const std::vector<Rational>& coeffs) {
    Germ<Rational> b(wts, std::max(c.accuracy(), bound));
    for (std::size_t k = 0; k < support.size(); ++k) b.add_term(rows[support[k]].index, coeffs[k]);
    return b;
  };

  // Exhaustive search by support size, lexicographic within a size.
  long budget = kSubsetBudget;
  const std::size_t M = rows.size();
  for (std::size_t size = 1; size <= M && budget > 0; ++size) {
    std::vector<std::size_t> pick(size);
    for (std::size_t k = 0; k < size; ++k) pick[k] = k;
    while (budget > 0) {
      --budget;
      std::vector<const std::vector<Rational>*> chosen;
      for (std::size_t k : pick) chosen.push_back(&rows[k].coefficients);
      if (auto sol = solve_subset(chosen, w)) return to_germ(pick, *sol);
      // next combination
      int k = static_cast<int>(size) - 1;
      while (k >= 0 && pick[k] == M - size + k) --k;
      if (k < 0) break;
      ++pick[k];
      for (std::size_t r = k + 1; r < size; ++r) pick[r] = pick[r - 1] + 1;
    }
  }

  // Budget exhausted: use the stored pivot row at w, cleared below w.
  std::vector<Rational> target(bound, Rational(0));
  target[w] = 1;
  std::map<int, std::map<int, Rational>> combos;
  for (int p : pivots) combos.emplace(p, ech.combination(p));
  auto [residual, combo] = reduce(ech.rows(), combos, target);
  std::vector<std::size_t> support;
  std::vector<Rational> coeffs;
  for (const auto& [tag, coeff] : combo) {
    support.push_back(static_cast<std::size_t>(tag));
    coeffs.push_back(-coeff);
  }
  return to_germ(support, coeffs);
}

template class Echelon<Rational>;
template class Echelon<Cyclotomic>;
template std::vector<MonomialRow<Rational>> monomial_rows(const PlaneCurve<Rational>&, int, Execution);
template std::vector<MonomialRow<Cyclotomic>> monomial_rows(const PlaneCurve<Cyclotomic>&, int,
                                                            Execution);
template NumericalSemigroup conormal_semigroup(const PlaneCurve<Rational>&, Execution);
template NumericalSemigroup conormal_semigroup(const PlaneCurve<Cyclotomic>&, Execution);

}  // namespace legendrian
