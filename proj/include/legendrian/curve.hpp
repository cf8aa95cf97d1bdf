#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>

#include "legendrian/cyclotomic.hpp"
#include "legendrian/errors.hpp"
#include "legendrian/germ.hpp"
#include "legendrian/rational.hpp"
#include "legendrian/series.hpp"

namespace legendrian {

/// Plane curve germ x = t^n, y = Σ a_i t^i, known for exponents below accuracy().
template <class F>
class PlaneCurve {
 public:
  using Coefficients = std::map<int, F>;

  /// accuracy < 0 selects the default max((n-1)(m-1), m+1).
  PlaneCurve(int n, const Coefficients& coefficients, int accuracy = -1) : n_(n) {
    if (n < 1) throw DomainError("curve: n must be positive");
    for (const auto& [i, a] : coefficients) {
      if (i < 0) throw DomainError("curve: negative exponent");
      if (!is_zero(a)) coeffs_.emplace(i, a);
    }
    if (coeffs_.empty()) throw DomainError("curve: y must have a nonzero coefficient");
    m_ = coeffs_.begin()->first;
    if (m_ <= n_) throw DomainError("curve: need m > n (tangent cone y = 0)");
    if (std::gcd(n_, m_) != 1) {
      throw DomainError("curve: gcd(n, m) = gcd(" + std::to_string(n_) + ", " + std::to_string(m_) +
                        ") is not 1");
    }
    accuracy_ = accuracy < 0 ? default_accuracy(n_, m_) : accuracy;
    if (accuracy_ <= m_) throw DomainError("curve: accuracy must exceed m");
    std::erase_if(coeffs_, [&](const auto& kv) { return kv.first >= accuracy_; });
  }

  static int default_accuracy(int n, int m) { return std::max((n - 1) * (m - 1), m + 1); }

  int n() const { return n_; }
  int m() const { return m_; }
  int accuracy() const { return accuracy_; }
  /// Plane conductor (n-1)(m-1).
  int conductor() const { return (n_ - 1) * (m_ - 1); }
  const Coefficients& coefficients() const { return coeffs_; }

  F coefficient(int i) const {
    if (i >= accuracy_) {
      throw InsufficientPrecision("a_" + std::to_string(i) + " beyond curve accuracy " +
                                  std::to_string(accuracy_));
    }
    auto it = coeffs_.find(i);
    return it == coeffs_.end() ? F(0) : it->second;
  }

  PlaneCurve truncated(int accuracy) const { return PlaneCurve(n_, coeffs_, std::min(accuracy, accuracy_)); }

  Weights weights() const { return Weights{n_, m_}; }

  /// y as a series known to the curve accuracy.
  Series<F> y_series() const { return y_series_exact(accuracy_); }

  /// y viewed as the polynomial Σ_{i < accuracy} a_i t^i, expanded to `bound`.
  Series<F> y_series_exact(int bound) const {
    Series<F> y(bound);
    for (const auto& [i, a] : coeffs_) {
      if (i < bound) y.set(i, a);
    }
    return y;
  }

  std::string to_string() const {
    std::ostringstream out;
    out << "x = t^" << n_ << ", y = ";
    bool first = true;
    for (const auto& [i, a] : coeffs_) {
      if (!first) out << " + ";
      first = false;
      out << "(" << detail::coefficient_text(a) << ")*t^" << i;
    }
    out << " + O(t^" << accuracy_ << ")";
    return out.str();
  }

  friend bool operator==(const PlaneCurve& a, const PlaneCurve& b) {
    return a.n_ == b.n_ && a.accuracy_ == b.accuracy_ && a.coeffs_ == b.coeffs_;
  }

 private:
  int n_ = 1;
  int m_ = 2;
  int accuracy_ = 0;
  Coefficients coeffs_;
};

using PlaneCurveGerm = PlaneCurve<Rational>;

/// The conormal lift (t^n, y(t), p(t)) of a plane curve.
template <class F>
struct ConormalTriple {
  Series<F> X;
  Series<F> Y;
  Series<F> P;
};

/// Conormal with P = dy/dx: X and Y known to the curve accuracy, P to accuracy - n.
template <class F>
ConormalTriple<F> conormal(const PlaneCurve<F>& c) {
  const int N = c.accuracy();
  ConormalTriple<F> tri{Series<F>::monomial(c.n(), F(1), N), c.y_series(), Series<F>(N - c.n())};
  for (const auto& [i, a] : c.coefficients()) {
    if (i - c.n() < N - c.n()) tri.P.set(i - c.n(), F(Rational(i, c.n())) * a);
  }
  return tri;
}

/// Conormal of the polynomial curve y = Σ_{i < accuracy} a_i t^i, with all three series
/// known to `bound`.
template <class F>
ConormalTriple<F> conormal_exact(const PlaneCurve<F>& c, int bound) {
  ConormalTriple<F> tri{Series<F>::monomial(c.n(), F(1), bound), c.y_series_exact(bound),
                        Series<F>(bound)};
  for (const auto& [i, a] : c.coefficients()) {
    if (i - c.n() < bound) tri.P.set(i - c.n(), F(Rational(i, c.n())) * a);
  }
  return tri;
}

template <class F>
bool strong_generic_position(const PlaneCurve<F>& c) {
  return c.m() >= 2 * c.n() + 1;
}

template <class F>
std::pair<int, int> equisingularity_type(const PlaneCurve<F>& c) {
  return {c.n(), c.m()};
}

/// The curve (xs(t), ys(t)) rewritten as x = s^n, y = y(s), where s = t (xs / t^n)^{1/n}.
/// Requires xs = t^n + higher terms. The result carries every coefficient the inputs
/// determine, capped at `target` when target >= 0; asking for more throws.
template <class F>
PlaneCurve<F> reparametrize(const Series<F>& xs, const Series<F>& ys, int n, int target = -1) {
  if (xs.valuation() != n) {
    throw DomainError("reparametrize: x has order " + std::to_string(xs.valuation()) +
                      ", expected " + std::to_string(n));
  }
  if (!(xs[n] == F(1))) throw DomainError("reparametrize: leading coefficient of x must be 1");
  const Series<F> unit = xs.shifted(-n);
  const Series<F> s = nth_root(unit, n).shifted(1);
  const Series<F> t_of_s = reverse(s);
  const Series<F> y = compose(ys, t_of_s);
  int acc = y.accuracy();
  if (target >= 0) {
    if (acc < target) {
      throw InsufficientPrecision("reparametrize: coefficients known below " + std::to_string(acc) +
                                  ", requested " + std::to_string(target));
    }
    acc = target;
  }
  typename PlaneCurve<F>::Coefficients coeffs;
  for (int i = 0; i < acc; ++i) {
    if (!is_zero(y[i])) coeffs.emplace(i, y[i]);
  }
  return PlaneCurve<F>(n, coeffs, acc);
}

}  // namespace legendrian
