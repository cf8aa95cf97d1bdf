#include "legendrian/cyclotomic.hpp"

#include <numeric>
#include <sstream>

#include "legendrian/errors.hpp"

namespace legendrian {

int euler_phi(int n) {
  if (n < 1) throw DomainError("euler_phi: n must be positive");
  int result = n;
  int k = n;
  for (int p = 2; p * p <= k; ++p) {
    if (k % p == 0) {
      while (k % p == 0) k /= p;
      result -= result / p;
    }
  }
  if (k > 1) result -= result / k;
  return result;
}

std::vector<long> cyclotomic_polynomial(int n) {
  if (n < 1) throw DomainError("cyclotomic_polynomial: n must be positive");
  // x^n - 1 divided by every Φ_d with d | n, d < n.
  std::vector<long> poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const std::vector<long> divisor = cyclotomic_polynomial(d);
    const int dd = static_cast<int>(divisor.size()) - 1;
    const int dp = static_cast<int>(poly.size()) - 1;
    std::vector<long> quotient(dp - dd + 1, 0);
    for (int k = dp; k >= dd; --k) {
      const long q = poly[k];  // divisor is monic
      quotient[k - dd] = q;
      for (int j = 0; j <= dd; ++j) poly[k - dd + j] -= q * divisor[j];
    }
    poly = std::move(quotient);
  }
  return poly;
}

Cyclotomic::Cyclotomic(const Rational& value) : order_(1), coeffs_{value} {}

Cyclotomic::Cyclotomic(int order, Modulus modulus, std::vector<Rational> coeffs)
    : order_(order), modulus_(std::move(modulus)), coeffs_(std::move(coeffs)) {}

Cyclotomic Cyclotomic::reduce(int order, Modulus modulus, std::vector<Rational> poly) {
  if (order == 1) {
    Rational sum;
    for (const auto& c : poly) sum += c;  // ζ_1 = 1
    return Cyclotomic(sum);
  }
  const auto& phi = *modulus;
  const int deg = static_cast<int>(phi.size()) - 1;
  for (int k = static_cast<int>(poly.size()) - 1; k >= deg; --k) {
    if (poly[k].is_zero()) continue;
    const Rational q = poly[k];
    for (int j = 0; j <= deg; ++j) {
      if (phi[j] != 0) poly[k - deg + j] -= q * Rational(phi[j]);
    }
  }
  poly.resize(deg);
  return Cyclotomic(order, std::move(modulus), std::move(poly));
}

Cyclotomic Cyclotomic::root_of_unity(int n, long k) {
  if (n < 1) throw DomainError("root_of_unity: order must be positive");
  if (n == 1) return Cyclotomic(1);
  auto modulus = std::make_shared<const std::vector<long>>(cyclotomic_polynomial(n));
  const long e = ((k % n) + n) % n;
  std::vector<Rational> poly(e + 1);
  poly[e] = 1;
  return reduce(n, std::move(modulus), std::move(poly));
}

Cyclotomic Cyclotomic::embed(int n, const Rational& r) { return Cyclotomic(r).promoted(n); }

Cyclotomic Cyclotomic::promoted(int n) const {
  if (n == order_) return *this;
  if (n < 1 || n % order_ != 0) {
    throw DomainError("cannot promote Q(zeta_" + std::to_string(order_) + ") to Q(zeta_" +
                      std::to_string(n) + ")");
  }
  Cyclotomic result = embed_zero(n);
  const int step = n / order_;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    Cyclotomic term = root_of_unity(n, static_cast<long>(k) * step);
    for (auto& c : term.coeffs_) c *= coeffs_[k];
    result = result + term;
  }
  return result;
}

Cyclotomic Cyclotomic::embed_zero(int n) {
  if (n == 1) return Cyclotomic(0);
  Cyclotomic z = root_of_unity(n, 0);
  for (auto& c : z.coeffs_) c = 0;
  return z;
}

int Cyclotomic::common_order(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ == b.order_) return a.order_;
  const int l = std::lcm(a.order_, b.order_);
  if (l != a.order_ && l != b.order_) {
    throw DomainError("mixing Q(zeta_" + std::to_string(a.order_) + ") and Q(zeta_" +
                      std::to_string(b.order_) + ")");
  }
  return l;
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

std::optional<Rational> Cyclotomic::as_rational() const {
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    if (!coeffs_[k].is_zero()) return std::nullopt;
  }
  return coeffs_.empty() ? Rational(0) : coeffs_[0];
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  const int n = Cyclotomic::common_order(a, b);
  Cyclotomic r = a.promoted(n);
  const Cyclotomic bb = b.promoted(n);
  for (std::size_t k = 0; k < r.coeffs_.size(); ++k) r.coeffs_[k] += bb.coeffs_[k];
  return r;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  const int n = Cyclotomic::common_order(a, b);
  const Cyclotomic aa = a.promoted(n);
  const Cyclotomic bb = b.promoted(n);
  if (n == 1) return Cyclotomic(aa.coeffs_[0] * bb.coeffs_[0]);
  std::vector<Rational> poly(aa.coeffs_.size() + bb.coeffs_.size() - 1);
  for (std::size_t i = 0; i < aa.coeffs_.size(); ++i) {
    if (aa.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < bb.coeffs_.size(); ++j) {
      if (!bb.coeffs_[j].is_zero()) poly[i + j] += aa.coeffs_[i] * bb.coeffs_[j];
    }
  }
  return Cyclotomic::reduce(n, aa.modulus_, std::move(poly));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero in cyclotomic field");
  if (order_ == 1) return Cyclotomic(coeffs_[0].inverse());
  // Solve (multiplication-by-this) * x = 1 over Q with Gauss-Jordan elimination.
  const int d = static_cast<int>(coeffs_.size());
  std::vector<std::vector<Rational>> a(d, std::vector<Rational>(d + 1));
  for (int col = 0; col < d; ++col) {
    std::vector<Rational> basis(d);
    basis[col] = 1;
    const Cyclotomic prod = *this * Cyclotomic(order_, modulus_, std::move(basis));
    for (int row = 0; row < d; ++row) a[row][col] = prod.coeffs_[row];
  }
  a[0][d] = 1;
  for (int col = 0; col < d; ++col) {
    int piv = col;
    while (piv < d && a[piv][col].is_zero()) ++piv;
    if (piv == d) throw Error("cyclotomic inverse: singular multiplication matrix");
    std::swap(a[piv], a[col]);
    const Rational inv = a[col][col].inverse();
    for (auto& v : a[col]) v *= inv;
    for (int row = 0; row < d; ++row) {
      if (row == col || a[row][col].is_zero()) continue;
      const Rational f = a[row][col];
      for (int k = col; k <= d; ++k) a[row][k] -= f * a[col][k];
    }
  }
  std::vector<Rational> x(d);
  for (int row = 0; row < d; ++row) x[row] = a[row][d];
  return Cyclotomic(order_, modulus_, std::move(x));
}

Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  const int n = Cyclotomic::common_order(a, b);
  return a.promoted(n).coeffs_ == b.promoted(n).coeffs_;
}

int compare(const Cyclotomic& a, const Cyclotomic& b) {
  const int n = Cyclotomic::common_order(a, b);
  const Cyclotomic aa = a.promoted(n);
  const Cyclotomic bb = b.promoted(n);
  for (std::size_t k = 0; k < aa.coeffs_.size(); ++k) {
    if (aa.coeffs_[k] < bb.coeffs_[k]) return -1;
    if (bb.coeffs_[k] < aa.coeffs_[k]) return 1;
  }
  return 0;
}

std::string Cyclotomic::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    const Rational mag = negative ? -c : c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << mag.to_string();
      continue;
    }
    if (mag != Rational(1)) out << mag.to_string() << '*';
    out << "z" << order_;
    if (k > 1) out << '^' << k;
  }
  return first ? "0" : out.str();
}

}  // namespace legendrian
