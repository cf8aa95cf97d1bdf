#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "legendrian/errors.hpp"
#include "legendrian/series.hpp"

namespace legendrian {

enum class Var { X, Y, P };

/// Exponent triple of x^i y^j p^l.
struct Monomial {
  int i = 0;
  int j = 0;
  int l = 0;

  int exponent(Var v) const { return v == Var::X ? i : (v == Var::Y ? j : l); }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Curve-type weights: v(x) = n, v(y) = m, v(p) = m - n.
struct Weights {
  int n = 1;
  int m = 2;

  int of(Var v) const { return v == Var::X ? n : (v == Var::Y ? m : m - n); }
  int of(const Monomial& J) const { return J.i * n + J.j * m + J.l * (m - n); }
  friend bool operator==(const Weights&, const Weights&) = default;

  /// Every monomial of weighted valuation < bound, in lexicographic (i, j, l) order.
  std::vector<Monomial> monomials_below(int bound) const {
    std::vector<Monomial> out;
    for (int i = 0; i * n < bound; ++i) {
      for (int j = 0; i * n + j * m < bound; ++j) {
        for (int l = 0; of(Monomial{i, j, l}) < bound; ++l) out.push_back({i, j, l});
      }
    }
    return out;
  }
};

inline std::string to_string(const Monomial& J) {
  std::ostringstream out;
  bool any = false;
  const auto emit = [&](char name, int e) {
    if (e == 0) return;
    if (any) out << ' ';
    any = true;
    out << name;
    if (e > 1) out << '^' << e;
  };
  emit('x', J.i);
  emit('y', J.j);
  emit('p', J.l);
  if (!any) out << '1';
  return out.str();
}

/// Element of the local ring C{x,y,p} (coefficients in R), truncated by weighted
/// valuation: every monomial of valuation < accuracy() is known; the rest is unknown.
template <class R>
class Germ {
 public:
  using Terms = std::map<Monomial, R>;

  Germ() = default;
  Germ(Weights weights, int accuracy) : weights_(weights), accuracy_(std::max(accuracy, 0)) {
    if (weights.n < 1 || weights.m <= weights.n) throw DomainError("Germ: weights need 0 < n < m");
  }

  static Germ monomial(Weights w, Monomial J, R c, int accuracy) {
    Germ g(w, accuracy);
    g.add_term(J, std::move(c));
    return g;
  }
  static Germ constant(Weights w, R c, int accuracy) { return monomial(w, {}, std::move(c), accuracy); }
  static Germ variable(Weights w, Var v, int accuracy) {
    Monomial J;
    (v == Var::X ? J.i : (v == Var::Y ? J.j : J.l)) = 1;
    return monomial(w, J, R(1), accuracy);
  }

  const Weights& weights() const { return weights_; }
  int accuracy() const { return accuracy_; }
  const Terms& terms() const { return terms_; }

  /// Smallest weighted valuation among stored terms, or accuracy() when none.
  int valuation() const {
    int v = accuracy_;
    for (const auto& [J, c] : terms_) v = std::min(v, weights_.of(J));
    return v;
  }

  bool is_zero_known() const { return terms_.empty(); }

  R coefficient(const Monomial& J) const {
    if (weights_.of(J) >= accuracy_) {
      throw InsufficientPrecision("coefficient of " + legendrian::to_string(J) +
                                  " beyond germ accuracy " + std::to_string(accuracy_));
    }
    auto it = terms_.find(J);
    return it == terms_.end() ? R(0) : it->second;
  }

  R constant_term() const { return coefficient(Monomial{}); }

  /// True when the constant term is known to vanish.
  bool in_maximal_ideal() const { return accuracy_ > 0 && is_zero(constant_term()); }

  bool depends_on(Var v) const {
    for (const auto& [J, c] : terms_) {
      if (J.exponent(v) > 0) return true;
    }
    return false;
  }

  /// Adds c·x^i y^j p^l; silently dropped when beyond accuracy.
  void add_term(const Monomial& J, const R& c) {
    if (J.i < 0 || J.j < 0 || J.l < 0) throw DomainError("Germ: negative exponent");
    if (weights_.of(J) >= accuracy_ || is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(J, c);
    if (!inserted) {
      it->second += c;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  Germ truncated(int accuracy) const {
    if (accuracy >= accuracy_) return *this;
    Germ g(weights_, accuracy);
    for (const auto& [J, c] : terms_) g.add_term(J, c);
    return g;
  }

  /// Same polynomial data declared known to a different accuracy. Only meaningful for
  /// germs that are exact polynomials.
  Germ with_accuracy(int accuracy) const {
    Germ g(weights_, accuracy);
    for (const auto& [J, c] : terms_) g.add_term(J, c);
    return g;
  }

  Germ partial(Var v) const {
    Germ d(weights_, accuracy_ - weights_.of(v));
    for (const auto& [J, c] : terms_) {
      const int e = J.exponent(v);
      if (e == 0) continue;
      Monomial K = J;
      (v == Var::X ? K.i : (v == Var::Y ? K.j : K.l)) -= 1;
      d.add_term(K, c * R(e));
    }
    return d;
  }

  /// Antiderivative in p with vanishing p^0 slice.
  Germ integrate_p() const {
    Germ g(weights_, accuracy_ + weights_.of(Var::P));
    for (const auto& [J, c] : terms_) {
      g.add_term(Monomial{J.i, J.j, J.l + 1}, c / R(J.l + 1));
    }
    return g;
  }

  /// The p-free part (coefficient of p^0 as a function of x, y).
  Germ p_free_part() const {
    Germ g(weights_, accuracy_);
    for (const auto& [J, c] : terms_) {
      if (J.l == 0) g.add_term(J, c);
    }
    return g;
  }

  Germ operator-() const {
    Germ g = *this;
    for (auto& [J, c] : g.terms_) c = -c;
    return g;
  }

  friend Germ operator+(const Germ& a, const Germ& b) {
    check_weights(a, b);
    Germ g(a.weights_, std::min(a.accuracy_, b.accuracy_));
    for (const auto& [J, c] : a.terms_) g.add_term(J, c);
    for (const auto& [J, c] : b.terms_) g.add_term(J, c);
    return g;
  }
  friend Germ operator-(const Germ& a, const Germ& b) { return a + (-b); }

  friend Germ operator*(const Germ& a, const Germ& b) {
    check_weights(a, b);
    const int acc = std::min(a.accuracy_ + b.valuation(), b.accuracy_ + a.valuation());
    Germ g(a.weights_, acc);
    for (const auto& [J, c] : a.terms_) {
      const int vj = a.weights_.of(J);
      for (const auto& [K, d] : b.terms_) {
        if (vj + a.weights_.of(K) >= acc) continue;
        g.add_term(Monomial{J.i + K.i, J.j + K.j, J.l + K.l}, c * d);
      }
    }
    return g;
  }

  friend Germ operator*(const R& s, const Germ& a) {
    Germ g(a.weights_, a.accuracy_);
    for (const auto& [J, c] : a.terms_) g.add_term(J, s * c);
    return g;
  }

  Germ& operator+=(const Germ& o) { return *this = *this + o; }
  Germ& operator-=(const Germ& o) { return *this = *this - o; }
  Germ& operator*=(const Germ& o) { return *this = *this * o; }

  /// Inverse of a germ with invertible constant term.
  Germ unit_inverse() const {
    const R u0 = constant_term();
    if (is_zero(u0)) throw DomainError("Germ::unit_inverse: constant term is zero");
    const R inv0 = R(1) / u0;
    Germ rest = *this;
    rest.terms_.erase(Monomial{});
    const Germ ratio = (-inv0) * rest;  // valuation >= n
    Germ result = constant(weights_, inv0, accuracy_);
    Germ power = constant(weights_, R(1), accuracy_);
    while (true) {
      power = (power * ratio).truncated(accuracy_);
      if (power.is_zero_known()) break;
      result += inv0 * power;
    }
    return result.truncated(accuracy_);
  }

  /// Evaluation along a parametrized space curve (x, y, p) = (X, Y, P).
  Series<R> evaluate(const Series<R>& X, const Series<R>& Y, const Series<R>& P) const {
    const auto below = [](const Series<R>& s, int weight) { return s.valuation() < weight && !s.is_zero_known(); };
    if (below(X, weights_.n) || below(Y, weights_.m) || below(P, weights_.m - weights_.n)) {
      throw DomainError("Germ::evaluate: series orders below the germ weights");
    }
    int acc = accuracy_;
    int max_i = 0, max_j = 0, max_l = 0;
    for (const auto& [J, c] : terms_) {
      max_i = std::max(max_i, J.i);
      max_j = std::max(max_j, J.j);
      max_l = std::max(max_l, J.l);
    }
    const auto powers = [&](const Series<R>& s, int top) {
      std::vector<Series<R>> out;
      out.push_back(Series<R>::one(acc));
      for (int e = 1; e <= top; ++e) out.push_back((out.back() * s).truncated(acc));
      return out;
    };
    const auto px = powers(X, max_i);
    const auto py = powers(Y, max_j);
    const auto pp = powers(P, max_l);
    std::vector<Series<R>> parts;
    for (const auto& [J, c] : terms_) {
      Series<R> term = c * ((px[J.i] * py[J.j]).truncated(acc) * pp[J.l]);
      acc = std::min(acc, term.accuracy());
      parts.push_back(std::move(term));
    }
    Series<R> total(acc);
    for (const auto& t : parts) total += t.truncated(acc);
    return total;
  }

  /// g(u, v, w) for germs u, v, w in the maximal ideal. Unknown terms of g (valuation
  /// >= accuracy) land at valuation >= r * accuracy, where r is the smallest ratio
  /// between a substituted germ's valuation and the weight it replaces.
  Germ substitute(const Germ& u, const Germ& v, const Germ& w) const {
    check_weights(*this, u);
    check_weights(*this, v);
    check_weights(*this, w);
    const long vu = u.valuation(), vv = v.valuation(), vw = w.valuation();
    if (vu == 0 || vv == 0 || vw == 0) {
      throw DomainError("Germ::substitute: substituted germs must lie in the maximal ideal");
    }
    const long wn = weights_.n, wm = weights_.m, wp = weights_.m - weights_.n;
    // r = min(vu/wn, vv/wm, vw/wp) as a fraction num/den.
    long num = vu, den = wn;
    const auto take_min = [&](long a, long b) {
      if (a * den < num * b) {
        num = a;
        den = b;
      }
    };
    take_min(vv, wm);
    take_min(vw, wp);
    int acc = static_cast<int>((num * accuracy_ + den - 1) / den);
    int max_i = 0, max_j = 0, max_l = 0;
    for (const auto& [J, c] : terms_) {
      max_i = std::max(max_i, J.i);
      max_j = std::max(max_j, J.j);
      max_l = std::max(max_l, J.l);
    }
    const auto powers = [&](const Germ& s, int top) {
      std::vector<Germ> out;
      out.push_back(constant(weights_, R(1), acc));
      for (int e = 1; e <= top; ++e) out.push_back((out.back() * s).truncated(acc));
      return out;
    };
    const auto pu = powers(u, max_i);
    const auto pv = powers(v, max_j);
    const auto pw = powers(w, max_l);
    std::vector<Germ> parts;
    for (const auto& [J, c] : terms_) {
      Germ term = c * ((pu[J.i] * pv[J.j]).truncated(acc) * pw[J.l]);
      acc = std::min(acc, term.accuracy());
      parts.push_back(std::move(term));
    }
    Germ total(weights_, acc);
    for (const auto& t : parts) total += t.truncated(acc);
    return total;
  }

  /// Exact equality of data and accuracy.
  friend bool operator==(const Germ& a, const Germ& b) {
    return a.weights_ == b.weights_ && a.accuracy_ == b.accuracy_ && a.terms_ == b.terms_;
  }

  /// True when a and b agree on every monomial both of them know.
  friend bool agree(const Germ& a, const Germ& b) {
    const Germ d = a - b;
    return d.is_zero_known();
  }

  std::string to_string() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& [J, c] : terms_) {
      if (!first) out << " + ";
      first = false;
      out << "(" << detail::coefficient_text(c) << ")";
      if (J != Monomial{}) out << " " << legendrian::to_string(J);
    }
    if (first) out << "0";
    out << " + O(v>=" << accuracy_ << ")";
    return out.str();
  }

 private:
  static void check_weights(const Germ& a, const Germ& b) {
    if (!(a.weights_ == b.weights_)) throw DomainError("Germ: mismatched weights");
  }

  Weights weights_;
  int accuracy_ = 0;
  Terms terms_;
};

}  // namespace legendrian
