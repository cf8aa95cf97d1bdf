#pragma once

#include <algorithm>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "legendrian/errors.hpp"

namespace legendrian {

namespace detail {
// Unqualified so that argument-dependent lookup picks the scalar's own to_string.
template <class R>
std::string coefficient_text(const R& value) {
  return to_string(value);
}
}  // namespace detail

/// Power series in one variable t known modulo t^accuracy.
///
/// Coefficients of t^k are exact for k < accuracy() and unknown beyond. Every operation
/// propagates accuracy pessimistically: a result never exposes a coefficient that is
/// not determined by the known coefficients of its inputs.
template <class R>
class Series {
 public:
  explicit Series(int accuracy = 0) : coeffs_(std::max(accuracy, 0), R(0)) {}

  Series(std::vector<R> coefficients, int accuracy) : coeffs_(std::move(coefficients)) {
    coeffs_.resize(std::max(accuracy, 0), R(0));
  }

  static Series monomial(int exponent, R coefficient, int accuracy) {
    Series s(accuracy);
    if (exponent < 0) throw DomainError("Series: negative exponent");
    if (exponent < accuracy) s.coeffs_[exponent] = std::move(coefficient);
    return s;
  }

  int accuracy() const { return static_cast<int>(coeffs_.size()); }

  /// Index of the first nonzero known coefficient, or accuracy() when none is known.
  int valuation() const {
    for (int k = 0; k < accuracy(); ++k) {
      if (!is_zero(coeffs_[k])) return k;
    }
    return accuracy();
  }

  /// True when every known coefficient vanishes.
  bool is_zero_known() const { return valuation() == accuracy(); }

  const R& operator[](int k) const {
    if (k < 0) throw DomainError("Series: negative exponent");
    if (k >= accuracy()) {
      throw InsufficientPrecision("coefficient of t^" + std::to_string(k) +
                                  " requested, series known mod t^" + std::to_string(accuracy()));
    }
    return coeffs_[k];
  }

  /// Coefficient of t^k, or zero when k is negative.
  R coefficient_or_zero_below(int k) const { return k < 0 ? R(0) : (*this)[k]; }

  std::span<const R> coefficients() const { return coeffs_; }

  void set(int k, R value) {
    if (k < 0 || k >= accuracy()) {
      throw InsufficientPrecision("Series::set outside known range");
    }
    coeffs_[k] = std::move(value);
  }

  Series truncated(int accuracy) const {
    Series s = *this;
    if (accuracy < this->accuracy()) s.coeffs_.resize(std::max(accuracy, 0));
    return s;
  }

  Series derivative() const {
    Series d(std::max(accuracy() - 1, 0));
    for (int k = 1; k < accuracy(); ++k) d.coeffs_[k - 1] = coeffs_[k] * R(k);
    return d;
  }

  /// Multiplication by t^k. Negative k divides, which requires the low coefficients
  /// to vanish.
  Series shifted(int k) const {
    if (k >= 0) {
      std::vector<R> c(k, R(0));
      c.insert(c.end(), coeffs_.begin(), coeffs_.end());
      return Series(std::move(c), accuracy() + k);
    }
    const int d = -k;
    for (int j = 0; j < std::min(d, accuracy()); ++j) {
      if (!is_zero(coeffs_[j])) throw DomainError("Series: division by t^k with nonzero low terms");
    }
    if (d > accuracy()) return Series(0);
    return Series(std::vector<R>(coeffs_.begin() + d, coeffs_.end()), accuracy() - d);
  }

  Series operator-() const {
    Series s = *this;
    for (auto& c : s.coeffs_) c = -c;
    return s;
  }

  friend Series operator+(const Series& a, const Series& b) {
    Series s(std::min(a.accuracy(), b.accuracy()));
    for (int k = 0; k < s.accuracy(); ++k) s.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
    return s;
  }
  friend Series operator-(const Series& a, const Series& b) { return a + (-b); }

  friend Series operator*(const Series& a, const Series& b) {
    const int va = a.valuation();
    const int vb = b.valuation();
    const int acc = std::min(a.accuracy() + vb, b.accuracy() + va);
    Series s(acc);
    for (int i = va; i < a.accuracy() && i < acc; ++i) {
      if (is_zero(a.coeffs_[i])) continue;
      for (int j = vb; j < b.accuracy() && i + j < acc; ++j) {
        if (is_zero(b.coeffs_[j])) continue;
        s.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return s;
  }

  friend Series operator*(const R& c, const Series& a) {
    Series s = a;
    for (auto& x : s.coeffs_) x = c * x;
    return s;
  }

  Series& operator+=(const Series& o) { return *this = *this + o; }
  Series& operator-=(const Series& o) { return *this = *this - o; }
  Series& operator*=(const Series& o) { return *this = *this * o; }

  /// e-th power; the zeroth power is 1 known to this series' accuracy.
  Series pow(int e) const {
    if (e < 0) throw DomainError("Series::pow: negative exponent");
    if (e == 0) return one(accuracy());
    Series result = *this;
    for (int k = 1; k < e; ++k) result = result * *this;
    return result;
  }

  /// Exact equality of the known parts (accuracies must agree).
  friend bool operator==(const Series& a, const Series& b) { return a.coeffs_ == b.coeffs_; }

  /// True when the two series agree on every coefficient both of them know.
  friend bool agree(const Series& a, const Series& b) {
    const int n = std::min(a.accuracy(), b.accuracy());
    for (int k = 0; k < n; ++k) {
      if (!(a.coeffs_[k] == b.coeffs_[k])) return false;
    }
    return true;
  }

  static Series one(int accuracy) { return monomial(0, R(1), accuracy); }

  std::string to_string() const {
    std::ostringstream out;
    bool first = true;
    for (int k = 0; k < accuracy(); ++k) {
      if (is_zero(coeffs_[k])) continue;
      if (!first) out << " + ";
      first = false;
      out << "(" << detail::coefficient_text(coeffs_[k]) << ")";
      if (k > 0) out << "*t^" << k;
    }
    if (first) out << "0";
    out << " + O(t^" << accuracy() << ")";
    return out.str();
  }

 private:
  std::vector<R> coeffs_;
};

/// f∘g. Requires g(0) = 0.
template <class R>
Series<R> compose(const Series<R>& f, const Series<R>& g) {
  if (g.accuracy() == 0) throw InsufficientPrecision("compose: inner series carries no data");
  if (!is_zero(g[0])) throw DomainError("compose: inner series has a nonzero constant term");
  const int v = g.valuation();
  // Unknown terms of f contribute at order >= accuracy(f) * v; a known term f_k g^k is
  // known to accuracy(g) + (k - 1) v.
  long acc = static_cast<long>(f.accuracy()) * v;
  for (int k = 1; k < f.accuracy(); ++k) {
    if (!is_zero(f[k])) {
      acc = std::min(acc, static_cast<long>(g.accuracy()) + static_cast<long>(k - 1) * v);
      break;
    }
  }
  const int bound = static_cast<int>(acc);
  Series<R> result(bound);
  if (bound == 0) return result;
  if (f.accuracy() > 0) result.set(0, f[0]);
  Series<R> power = g.truncated(bound);
  for (int k = 1; k < f.accuracy() && static_cast<long>(k) * v < bound; ++k) {
    if (!is_zero(f[k])) {
      for (int j = 0; j < bound; ++j) {
        if (j < power.accuracy() && !is_zero(power[j])) result.set(j, result[j] + f[k] * power[j]);
      }
    }
    if (static_cast<long>(k + 1) * v < bound) power = (power * g).truncated(bound);
  }
  return result.truncated(bound);
}

/// Multiplicative inverse of a series with invertible constant term.
template <class R>
Series<R> unit_inverse(const Series<R>& f) {
  if (f.accuracy() == 0) throw InsufficientPrecision("unit_inverse: empty series");
  if (is_zero(f[0])) throw DomainError("unit_inverse: constant term is zero");
  const R inv0 = R(1) / f[0];
  Series<R> r(f.accuracy());
  r.set(0, inv0);
  for (int k = 1; k < f.accuracy(); ++k) {
    R s(0);
    for (int j = 1; j <= k; ++j) {
      if (!is_zero(f[j])) s += f[j] * r[k - j];
    }
    r.set(k, -(inv0 * s));
  }
  return r;
}

/// Compositional inverse h of g, with g∘h = h∘g = t. Requires order(g) = 1.
/// Computed by Lagrange inversion: [t^k] h = (1/k) [t^{k-1}] (t / g)^k.
template <class R>
Series<R> reverse(const Series<R>& g) {
  if (g.accuracy() < 2) throw InsufficientPrecision("reverse: need at least the linear term");
  if (!is_zero(g[0]) || is_zero(g[1])) throw DomainError("reverse: series must have order exactly 1");
  const int acc = g.accuracy();
  const Series<R> q = unit_inverse(g.shifted(-1));  // t/g, known mod t^{acc-1}
  Series<R> h(acc);
  Series<R> qk = Series<R>::one(acc - 1);
  for (int k = 1; k < acc; ++k) {
    qk = qk * q;
    h.set(k, qk[k - 1] / R(k));
  }
  return h;
}

/// The n-th root r of f with r(0) = 1. Requires f(0) = 1 exactly, so no root of unity
/// is ever chosen implicitly.
template <class R>
Series<R> nth_root(const Series<R>& f, int n) {
  if (n < 1) throw DomainError("nth_root: n must be positive");
  if (f.accuracy() == 0) throw InsufficientPrecision("nth_root: empty series");
  if (is_zero(f[0])) throw DomainError("nth_root: input is not a unit");
  if (!(f[0] == R(1))) throw DomainError("nth_root: constant term must be 1");
  // r' f = (1/n) f' r, solved coefficientwise.
  const R alpha = R(1) / R(n);
  Series<R> r(f.accuracy());
  r.set(0, R(1));
  for (int k = 1; k < f.accuracy(); ++k) {
    R s(0);
    for (int j = 1; j <= k; ++j) {
      if (is_zero(f[j])) continue;
      s += ((alpha + R(1)) * R(j) - R(k)) * f[j] * r[k - j];
    }
    r.set(k, s / R(k));
  }
  return r;
}

}  // namespace legendrian
