#pragma once

#include <map>
#include <vector>

#include "legendrian/curve.hpp"
#include "legendrian/germ.hpp"
#include "legendrian/parallel.hpp"
#include "legendrian/semigroup.hpp"

namespace legendrian {

/// Expansion of ι*(x^i y^j p^l) modulo t^N.
template <class F>
struct MonomialRow {
  Monomial index;
  int valuation = 0;
  std::vector<F> coefficients;
};

/// Rows for every monomial of weighted valuation < bound, expanded mod t^bound on the
/// conormal of the polynomial curve y = Σ_{i < accuracy} a_i t^i. The serial path
/// evaluates each monomial as a germ; the parallel path multiplies cached powers of the
/// conormal series across OpenMP threads. Both return rows in the same order.
template <class F>
std::vector<MonomialRow<F>> monomial_rows(const PlaneCurve<F>& c, int bound,
                                          Execution mode = Execution::Parallel);

/// Row echelon form with leftmost pivots, built one row at a time. Each stored row is
/// normalized to a leading 1 and remembers its combination of input rows.
template <class F>
class Echelon {
 public:
  explicit Echelon(int columns) : columns_(columns) {}

  /// Reduces `row`; returns its pivot column, or -1 when it lies in the current span.
  int insert(std::vector<F> row, int tag);
  const std::map<int, std::vector<F>>& rows() const { return rows_; }
  /// Combination (tag -> coefficient) of inserted rows that equals the stored pivot row.
  const std::map<int, F>& combination(int pivot) const { return combos_.at(pivot); }
  std::vector<int> pivots() const;

 private:
  int columns_;
  std::map<int, std::vector<F>> rows_;
  std::map<int, std::map<int, F>> combos_;
};

/// Semigroup of the conormal of `c`: orders of ι* of germs, computed below the plane
/// conductor by exact row reduction. Requires accuracy >= (n-1)(m-1).
template <class F>
NumericalSemigroup conormal_semigroup(const PlaneCurve<F>& c, Execution mode = Execution::Parallel);

/// A germ b with ι*(b) = t^w + higher order terms. With `shape_constrained`, only
/// monomials of valuation in [w - n + 1, w] are used. Among all solutions the one with
/// fewest monomials, then lexicographically smallest support, is returned (subject to a
/// search budget, after which a pivot-row solution is used).
Germ<Rational> realize_order(const PlaneCurveGerm& c, int w, bool shape_constrained);

extern template std::vector<MonomialRow<Rational>> monomial_rows(const PlaneCurve<Rational>&, int,
                                                                 Execution);
extern template std::vector<MonomialRow<Cyclotomic>> monomial_rows(const PlaneCurve<Cyclotomic>&,
                                                                   int, Execution);
extern template NumericalSemigroup conormal_semigroup(const PlaneCurve<Rational>&, Execution);
extern template NumericalSemigroup conormal_semigroup(const PlaneCurve<Cyclotomic>&, Execution);

}  // namespace legendrian
