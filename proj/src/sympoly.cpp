#include "legendrian/sympoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "legendrian/errors.hpp"

namespace legendrian {

namespace {

const SymPoly::Exponents kZeroExponents{};

}  // namespace

SymPoly::SymPoly(long constant) {
  if (constant != 0) terms_.emplace_back(kZeroExponents, mpz_class(constant));
}

SymPoly::SymPoly(const mpz_class& constant) {
  if (constant != 0) terms_.emplace_back(kZeroExponents, constant);
}

SymPoly SymPoly::variable(int index) {
  if (index < 0 || index >= kMaxVars) {
    throw DomainError("SymPoly: variable index out of range (cap " + std::to_string(kMaxVars) +
                      ")");
  }
  SymPoly p;
  Exponents e{};
  e[index] = 1;
  p.terms_.emplace_back(e, mpz_class(1));
  return p;
}

SymPoly SymPoly::from_map_like(std::vector<Term> unsorted) {
  std::sort(unsorted.begin(), unsorted.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  SymPoly p;
  for (auto& t : unsorted) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
    } else {
      p.terms_.push_back(std::move(t));
    }
  }
  std::erase_if(p.terms_, [](const Term& t) { return t.second == 0; });
  return p;
}

int SymPoly::degree_in(int var) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
  return d;
}

SymPoly SymPoly::derivative(int var) const {
  std::vector<Term> out;
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents f = e;
    --f[var];
    out.emplace_back(f, c * e[var]);
  }
  return from_map_like(std::move(out));
}

SymPoly SymPoly::substitute(int var, const mpz_class& value) const {
  std::vector<Term> out;
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    f[var] = 0;
    mpz_class power;
    mpz_pow_ui(power.get_mpz_t(), value.get_mpz_t(), e[var]);
    out.emplace_back(f, c * power);
  }
  return from_map_like(std::move(out));
}

Rational SymPoly::evaluate(std::span<const Rational> a, const Rational& mu) const {
  Rational total;
  for (const auto& [e, c] : terms_) {
    Rational term{c};
    for (int v = 0; v < kMaxVars; ++v) {
      if (e[v] == 0) continue;
      if (v > 0 && static_cast<std::size_t>(v - 1) >= a.size()) {
        throw DomainError("SymPoly::evaluate: missing value for coefficient indeterminate");
      }
      const Rational& base = v == 0 ? mu : a[v - 1];
      for (int k = 0; k < e[v]; ++k) term *= base;
    }
    total += term;
  }
  return total;
}

SymPoly SymPoly::operator-() const {
  SymPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  while (i != terms_.end() || j != o.terms_.end()) {
    if (j == o.terms_.end() || (i != terms_.end() && i->first < j->first)) {
      merged.push_back(std::move(*i++));
    } else if (i == terms_.end() || j->first < i->first) {
      merged.push_back(*j++);
    } else {
      mpz_class c = i->second + j->second;
      if (c != 0) merged.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
  if (a.is_zero() || b.is_zero()) return SymPoly();
  std::map<SymPoly::Exponents, mpz_class> acc;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      SymPoly::Exponents e;
      for (int v = 0; v < SymPoly::kMaxVars; ++v) {
        const int s = ea[v] + eb[v];
        if (s > 255) throw DomainError("SymPoly: exponent overflow");
        e[v] = static_cast<std::uint8_t>(s);
      }
      acc[e] += ca * cb;
    }
  }
  SymPoly r;
  r.terms_.reserve(acc.size());
  for (auto& [e, c] : acc) {
    if (c != 0) r.terms_.emplace_back(e, std::move(c));
  }
  return r;
}

std::string SymPoly::to_string(int offset) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Print highest exponent vectors first so leading-looking terms come early.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    const mpz_class mag = negative ? mpz_class(-c) : c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    bool has_var = false;
    std::ostringstream vars;
    for (int v = 0; v < SymPoly::kMaxVars; ++v) {
      if (e[v] == 0) continue;
      if (has_var) vars << '*';
      has_var = true;
      if (v == 0) {
        vars << "mu";
      } else {
        vars << "a" << (offset + v - 1);
      }
      if (e[v] > 1) vars << '^' << static_cast<int>(e[v]);
    }
    if (!has_var) {
      out << mag.get_str();
    } else {
      if (mag != 1) out << mag.get_str() << '*';
      out << vars.str();
    }
  }
  return out.str();
}

}  // namespace legendrian
