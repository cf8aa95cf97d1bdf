#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "legendrian/rational.hpp"

namespace legendrian {

/// Polynomial with integer coefficients in μ and the coefficient indeterminates.
/// Variable 0 is μ; variable k >= 1 is the (k-1)-th coefficient indeterminate, which
/// callers map to an absolute index a_{offset + k - 1}.
/// Terms are kept sorted by exponent vector with no zero coefficients.
class SymPoly {
 public:
  static constexpr int kMaxVars = 48;
  using Exponents = std::array<std::uint8_t, kMaxVars>;
  using Term = std::pair<Exponents, mpz_class>;

  SymPoly(long constant = 0);  // NOLINT: integers embed implicitly
  explicit SymPoly(const mpz_class& constant);

  static SymPoly variable(int index);
  static SymPoly mu() { return variable(0); }
  /// The k-th coefficient indeterminate (0-based).
  static SymPoly coefficient_variable(int k) { return variable(k + 1); }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree_in(int var) const;
  bool depends_on(int var) const { return degree_in(var) > 0; }

  SymPoly derivative(int var) const;
  SymPoly substitute(int var, const mpz_class& value) const;
  /// Evaluates at μ = mu and coefficient indeterminates = a[0], a[1], ...
  Rational evaluate(std::span<const Rational> a, const Rational& mu) const;

  /// Human readable; coefficient indeterminate k prints as a_{offset + k}.
  std::string to_string(int offset = 0) const;

  SymPoly operator-() const;
  SymPoly& operator+=(const SymPoly& o);
  SymPoly& operator-=(const SymPoly& o) { return *this += -o; }
  SymPoly& operator*=(const SymPoly& o) { return *this = *this * o; }
  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
  friend bool operator==(const SymPoly& a, const SymPoly& b) { return a.terms_ == b.terms_; }

 private:
  static SymPoly from_map_like(std::vector<Term> unsorted);
  std::vector<Term> terms_;
};

inline bool is_zero(const SymPoly& p) { return p.is_zero(); }
inline std::string to_string(const SymPoly& p) { return p.to_string(); }

}  // namespace legendrian
