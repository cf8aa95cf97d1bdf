#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "legendrian/rational.hpp"

namespace legendrian {

/// Euler's totient.
int euler_phi(int n);

/// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
std::vector<long> cyclotomic_polynomial(int n);

/// Element of Q(ζ_n), stored as a polynomial in ζ of degree < φ(n), i.e. reduced
/// modulo the n-th cyclotomic polynomial. Elements of order 1 are plain rationals and
/// combine with any order.
class Cyclotomic {
 public:
  Cyclotomic(long value = 0) : Cyclotomic(Rational(value)) {}  // NOLINT
  Cyclotomic(const Rational& value);                           // NOLINT

  /// ζ_n^k for the fixed primitive root ζ_n = class of the indeterminate.
  static Cyclotomic root_of_unity(int n, long k = 1);
  /// The rational r viewed in Q(ζ_n).
  static Cyclotomic embed(int n, const Rational& r);

  int order() const { return order_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  std::optional<Rational> as_rational() const;
  Cyclotomic inverse() const;
  /// Same element, expressed over Q(ζ_n). `n` must be a multiple of the current order
  /// or the current order must be 1.
  Cyclotomic promoted(int n) const;
  std::string to_string() const;

  Cyclotomic operator-() const;
  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
  Cyclotomic& operator/=(const Cyclotomic& o) { return *this = *this / o; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  /// Lexicographic comparison of coordinate vectors (after promotion to a common order).
  friend int compare(const Cyclotomic& a, const Cyclotomic& b);

 private:
  using Modulus = std::shared_ptr<const std::vector<long>>;
  Cyclotomic(int order, Modulus modulus, std::vector<Rational> coeffs);
  static int common_order(const Cyclotomic& a, const Cyclotomic& b);
  static Cyclotomic reduce(int order, Modulus modulus, std::vector<Rational> poly);
  static Cyclotomic embed_zero(int n);

  int order_ = 1;
  Modulus modulus_;  // null for order 1
  std::vector<Rational> coeffs_;
};

inline bool is_zero(const Cyclotomic& c) { return c.is_zero(); }
inline std::string to_string(const Cyclotomic& c) { return c.to_string(); }

}  // namespace legendrian
