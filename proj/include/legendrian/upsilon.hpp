#pragma once

#include <map>
#include <vector>

#include "legendrian/germ.hpp"
#include "legendrian/oracle.hpp"
#include "legendrian/series.hpp"
#include "legendrian/sympoly.hpp"

namespace legendrian {

/// Symbolic conormal X = t^n, Y = Σ a_{m+i} t^{m+i}, P = Σ (μ+i) a_{m+i} t^{m-n+i}, all
/// modulo t^c with c = (n-1)(m-1). In SymPoly terms a_k is coefficient variable k - m.
class UpsilonContext {
 public:
  static constexpr int kMaxConductor = 40;
  static constexpr int kMaxDimension = 6;

  UpsilonContext(int n, int m);

  int n() const { return n_; }
  int m() const { return m_; }
  int c() const { return c_; }
  const Series<SymPoly>& X() const { return X_; }
  const Series<SymPoly>& Y() const { return Y_; }
  const Series<SymPoly>& P() const { return P_; }
  int valuation(const Monomial& J) const { return J.i * n_ + J.j * m_ + J.l * (m_ - n_); }

  /// X^i Y^j P^l mod t^c.
  Series<SymPoly> power_product(const Monomial& J) const;

  /// Every J with j + l >= 1 and valuation <= c - 1.
  std::vector<Monomial> index_set() const;

 private:
  int n_, m_, c_;
  Series<SymPoly> X_, Y_, P_;
  std::vector<Series<SymPoly>> ypow_, ppow_;
};

SymPoly upsilon_direct(const UpsilonContext& ctx, const Monomial& J, int k);
SymPoly upsilon_closed(const UpsilonContext& ctx, const Monomial& J, int k);

enum class UpsilonForm { Direct, Closed };

/// Rows indexed like ctx.index_set(), columns k = m, ..., c-1.
std::vector<std::vector<SymPoly>> upsilon_matrix(const UpsilonContext& ctx, UpsilonForm form,
                                                 Execution mode = Execution::Parallel);

enum class DerivativeReading {
  /// ∂Υ_{(i,j,l),k}/∂μ = l Υ_{(i-1,j+1,l-1),k}: the factor is the p-exponent of J.
  PExponentOfJ,
  /// The same identity with the p-exponent of ∂J = (i-1, j+1, l-1) as factor.
  PExponentOfDJ,
};

/// Checks the μ-derivative identity for J = (i, j, l) with i, l >= 1, in both the direct
/// and the closed form.
bool mu_derivative_check(const UpsilonContext& ctx, const Monomial& J, int k,
                         DerivativeReading reading = DerivativeReading::PExponentOfJ);

/// Determinant by cofactor expansion with memoized minors. Size capped at kMaxDimension.
SymPoly determinant(const std::vector<std::vector<SymPoly>>& matrix);

/// λ_{l,k} = Υ_{(q+l, N-l, l), k}.
Monomial family_index(int N, int q, int l);

/// det of the submatrix of Υ on `rows` x `cols` is μ-free and agrees at μ = 0 and μ = m.
bool det_mu_invariance(const UpsilonContext& ctx, const std::vector<Monomial>& rows,
                       const std::vector<int>& cols);

enum class MinorStatus { Zero, NonzeroAtM, VanishesAtM };

/// Minor of λ on rows l = M..N and the given columns, classified at μ = m.
MinorStatus ddd_minor_check(const UpsilonContext& ctx, int M, int N, int q, const std::vector<int>& cols);

/// Exponent vector over a_offset, a_{offset+1}, ...; compared from the highest index down.
struct MonomialOrderKey {
  int offset = 0;
  std::vector<int> exponents;

  static MonomialOrderKey from_a_powers(int offset, const std::map<int, int>& powers);
  friend bool operator==(const MonomialOrderKey& a, const MonomialOrderKey& b);
  friend bool operator<(const MonomialOrderKey& a, const MonomialOrderKey& b);
  std::string to_string() const;
};

/// Largest a-monomial of s (μ-exponents are ignored). Throws on zero input.
MonomialOrderKey leading_monomial(const SymPoly& s, int offset);

}  // namespace legendrian
