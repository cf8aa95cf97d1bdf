#include "legendrian/upsilon.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>

#include "legendrian/errors.hpp"
#include "legendrian/semigroup.hpp"

namespace legendrian {

namespace {

SymPoly a_var(const UpsilonContext& ctx, int index) { return SymPoly::coefficient_variable(index - ctx.m()); }

mpz_class factorial(int k) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

void check_entry(const UpsilonContext& ctx, const Monomial& J, int k) {
  if (J.i < 0 || J.j < 0 || J.l < 0) throw DomainError("upsilon: negative exponent in J");
  if (ctx.valuation(J) > ctx.c() - 1) {
    throw DomainError("upsilon: v(J) = " + std::to_string(ctx.valuation(J)) + " exceeds c - 1 = " +
                      std::to_string(ctx.c() - 1));
  }
  if (k < 0 || k > ctx.c() - 1) {
    throw DomainError("upsilon: column " + std::to_string(k) + " outside [0, c - 1]");
  }
}

}  // namespace

UpsilonContext::UpsilonContext(int n, int m) : n_(n), m_(m), c_((n - 1) * (m - 1)) {
  require_generic_type(n, m);
  if (c_ > kMaxConductor) {
    throw DomainError("cap exceeded: conductor " + std::to_string(c_) + " above " +
                      std::to_string(kMaxConductor));
  }
  X_ = Series<SymPoly>::monomial(n, SymPoly(1), c_);
  Y_ = Series<SymPoly>(c_);
  P_ = Series<SymPoly>(c_);
  for (int s = m; s < c_; ++s) {
    Y_.set(s, a_var(*this, s));
    P_.set(s - n, (SymPoly::mu() + SymPoly(s - m)) * a_var(*this, s));
  }
  ypow_.push_back(Series<SymPoly>::one(c_));
  for (int j = 1; j * m <= c_ - 1; ++j) ypow_.push_back((ypow_.back() * Y_).truncated(c_));
  ppow_.push_back(Series<SymPoly>::one(c_));
  for (int l = 1; l * (m - n) <= c_ - 1; ++l) ppow_.push_back((ppow_.back() * P_).truncated(c_));
}

Series<SymPoly> UpsilonContext::power_product(const Monomial& J) const {
  if (valuation(J) > c_ - 1) return Series<SymPoly>(c_);
  return ((ypow_.at(J.j) * ppow_.at(J.l)).truncated(c_)).shifted(J.i * n_).truncated(c_);
}

std::vector<Monomial> UpsilonContext::index_set() const {
  std::vector<Monomial> out;
  for (const auto& J : Weights{n_, m_}.monomials_below(c_)) {
    if (J.j + J.l >= 1) out.push_back(J);
  }
  return out;
}

SymPoly upsilon_direct(const UpsilonContext& ctx, const Monomial& J, int k) {
  check_entry(ctx, J, k);
  return ctx.power_product(J)[k];
}

SymPoly upsilon_closed(const UpsilonContext& ctx, const Monomial& J, int k) {
  check_entry(ctx, J, k);
  const int total = J.j + J.l;
  const int target = k - (J.i - J.l) * ctx.n();
  const int lo = ctx.m(), hi = ctx.c() - 1;
  const mpz_class jl = factorial(J.j) * factorial(J.l);
  SymPoly result;
  std::vector<int> alpha(hi - lo + 1, 0);

  // Sum over γ ≤ α with |γ| = l of j! l! / ((α-γ)! γ!) a^α Π (μ - m + s)^{γ_s}.
  std::function<void(std::size_t, int, SymPoly, mpz_class)> over_gamma =
      [&](std::size_t pos, int left, SymPoly term, mpz_class denom) {
        if (pos == alpha.size()) {
          if (left == 0) result += SymPoly(mpz_class(jl / denom)) * term;
          return;
        }
        for (int g = 0; g <= std::min(alpha[pos], left); ++g) {
          SymPoly t = term;
          const SymPoly factor = SymPoly::mu() + SymPoly(static_cast<long>(pos));
          for (int e = 0; e < g; ++e) t *= factor;
          over_gamma(pos + 1, left - g, std::move(t), denom * factorial(alpha[pos] - g) * factorial(g));
        }
      };

  // α over indices lo..hi with |α| = total and Σ s α_s = target.
  std::function<void(std::size_t, int, int)> over_alpha = [&](std::size_t pos, int left, int sum) {
    if (pos == alpha.size()) {
      if (left != 0 || sum != 0) return;
      SymPoly mono(1);
      for (std::size_t q = 0; q < alpha.size(); ++q) {
        for (int e = 0; e < alpha[q]; ++e) mono *= a_var(ctx, lo + static_cast<int>(q));
      }
      over_gamma(0, J.l, mono, mpz_class(1));
      return;
    }
    const int s = lo + static_cast<int>(pos);
    for (int e = 0; e <= left && e * s <= sum; ++e) {
      alpha[pos] = e;
      over_alpha(pos + 1, left - e, sum - e * s);
    }
    alpha[pos] = 0;
  };
  if (target >= 0) over_alpha(0, total, target);
  if (total == 0 && target == 0) result = SymPoly(1);
  return result;
}

std::vector<std::vector<SymPoly>> upsilon_matrix(const UpsilonContext& ctx, UpsilonForm form,
                                                 Execution mode) {
  const std::vector<Monomial> index = ctx.index_set();
  const int cols = std::max(0, ctx.c() - ctx.m());
  std::vector<std::vector<SymPoly>> out(index.size(), std::vector<SymPoly>(cols));
  const auto fill = [&](long r) {
    if (form == UpsilonForm::Direct) {
      const Series<SymPoly> s = ctx.power_product(index[r]);
      for (int k = 0; k < cols; ++k) out[r][k] = s[ctx.m() + k];
    } else {
      for (int k = 0; k < cols; ++k) out[r][k] = upsilon_closed(ctx, index[r], ctx.m() + k);
    }
  };
  const long count = static_cast<long>(index.size());
  parallel_for(count, mode, fill);
  return out;
}

bool mu_derivative_check(const UpsilonContext& ctx, const Monomial& J, int k, DerivativeReading reading) {
  if (J.i < 1 || J.l < 1) throw DomainError("mu_derivative_check: need x- and p-exponents >= 1");
  const Monomial dJ{J.i - 1, J.j + 1, J.l - 1};
  const long factor = reading == DerivativeReading::PExponentOfJ ? J.l : dJ.l;
  const SymPoly lhs_direct = upsilon_direct(ctx, J, k).derivative(0);
  const SymPoly rhs_direct = SymPoly(factor) * upsilon_direct(ctx, dJ, k);
  const SymPoly lhs_closed = upsilon_closed(ctx, J, k).derivative(0);
  const SymPoly rhs_closed = SymPoly(factor) * upsilon_closed(ctx, dJ, k);
  return lhs_direct == rhs_direct && lhs_closed == rhs_closed;
}

SymPoly determinant(const std::vector<std::vector<SymPoly>>& a) {
  const int size = static_cast<int>(a.size());
  if (size > UpsilonContext::kMaxDimension) {
    throw DomainError("cap exceeded: determinant dimension " + std::to_string(size) + " above " +
                      std::to_string(UpsilonContext::kMaxDimension));
  }
  for (const auto& row : a) {
    if (static_cast<int>(row.size()) != size) throw DomainError("determinant: matrix is not square");
  }
  if (size == 0) return SymPoly(1);
  // minor[mask] = det of rows size-popcount(mask).. with the columns in mask.
  std::vector<SymPoly> minor(1u << size);
  std::vector<bool> known(1u << size, false);
  minor[0] = SymPoly(1);
  known[0] = true;
  std::function<const SymPoly&(unsigned)> get = [&](unsigned mask) -> const SymPoly& {
    if (known[mask]) return minor[mask];
    const int row = size - __builtin_popcount(mask);
    SymPoly total;
    int sign = 1;
    for (int col = 0; col < size; ++col) {
      if (!(mask & (1u << col))) continue;
      if (!a[row][col].is_zero()) {
        const SymPoly sub = a[row][col] * get(mask & ~(1u << col));
        if (sign > 0) total += sub; else total -= sub;
      }
      sign = -sign;
    }
    minor[mask] = std::move(total);
    known[mask] = true;
    return minor[mask];
  };
  return get((1u << size) - 1);
}

Monomial family_index(int N, int q, int l) { return Monomial{q + l, N - l, l}; }

bool det_mu_invariance(const UpsilonContext& ctx, const std::vector<Monomial>& rows,
                       const std::vector<int>& cols) {
  if (rows.size() != cols.size()) throw DomainError("det_mu_invariance: selection is not square");
  std::vector<std::vector<SymPoly>> m;
  for (const auto& J : rows) {
    std::vector<SymPoly> r;
    for (int k : cols) r.push_back(upsilon_direct(ctx, J, k));
    m.push_back(std::move(r));
  }
  const SymPoly d = determinant(m);
  if (d.depends_on(0)) return false;
  return d.substitute(0, mpz_class(0)) == d.substitute(0, mpz_class(ctx.m()));
}

MinorStatus ddd_minor_check(const UpsilonContext& ctx, int M, int N, int q, const std::vector<int>& cols) {
  if (M < 0 || M > N || q + N < 0 || static_cast<int>(cols.size()) != N - M + 1) {
    throw DomainError("ddd_minor_check: bad dimensions");
  }
  std::vector<std::vector<SymPoly>> m;
  for (int l = M; l <= N; ++l) {
    const Monomial J = family_index(N, q, l);
    if (J.i < 0) throw DomainError("ddd_minor_check: negative x-exponent in the family");
    std::vector<SymPoly> r;
    for (int k : cols) r.push_back(upsilon_direct(ctx, J, k));
    m.push_back(std::move(r));
  }
  const SymPoly d = determinant(m);
  if (d.is_zero()) return MinorStatus::Zero;
  return d.substitute(0, mpz_class(ctx.m())).is_zero() ? MinorStatus::VanishesAtM : MinorStatus::NonzeroAtM;
}

MonomialOrderKey MonomialOrderKey::from_a_powers(int offset, const std::map<int, int>& powers) {
  MonomialOrderKey k{offset, {}};
  for (const auto& [index, e] : powers) {
    if (index < offset) throw DomainError("MonomialOrderKey: index below offset");
    if (static_cast<int>(k.exponents.size()) <= index - offset) k.exponents.resize(index - offset + 1, 0);
    k.exponents[index - offset] += e;
  }
  while (!k.exponents.empty() && k.exponents.back() == 0) k.exponents.pop_back();
  return k;
}

bool operator==(const MonomialOrderKey& a, const MonomialOrderKey& b) {
  return a.offset == b.offset && a.exponents == b.exponents;
}

bool operator<(const MonomialOrderKey& a, const MonomialOrderKey& b) {
  if (a.offset != b.offset) throw DomainError("MonomialOrderKey: different offsets");
  const std::size_t top = std::max(a.exponents.size(), b.exponents.size());
  for (std::size_t q = top; q-- > 0;) {
    const int ea = q < a.exponents.size() ? a.exponents[q] : 0;
    const int eb = q < b.exponents.size() ? b.exponents[q] : 0;
    if (ea != eb) return ea < eb;
  }
  return false;
}

std::string MonomialOrderKey::to_string() const {
  std::ostringstream out;
  bool any = false;
  for (std::size_t q = 0; q < exponents.size(); ++q) {
    if (exponents[q] == 0) continue;
    if (any) out << '*';
    any = true;
    out << 'a' << offset + static_cast<int>(q);
    if (exponents[q] > 1) out << '^' << exponents[q];
  }
  if (!any) out << '1';
  return out.str();
}

MonomialOrderKey leading_monomial(const SymPoly& s, int offset) {
  if (s.is_zero()) throw DomainError("leading_monomial: zero polynomial");
  std::optional<MonomialOrderKey> best;
  for (const auto& [e, c] : s.terms()) {
    std::map<int, int> powers;
    for (int v = 1; v < SymPoly::kMaxVars; ++v) {
      if (e[v]) powers[offset + v - 1] = e[v];
    }
    MonomialOrderKey k = MonomialOrderKey::from_a_powers(offset, powers);
    if (!best || *best < k) best = std::move(k);
  }
  return *best;
}

}  // namespace legendrian
