#include "legendrian/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "legendrian/errors.hpp"

namespace legendrian {

NumericalSemigroup NumericalSemigroup::from_members(int conductor,
                                                    const std::vector<int>& members_below) {
  if (conductor < 0) throw DomainError("semigroup: negative conductor");
  std::vector<bool> member(conductor, false);
  if (conductor > 0) member[0] = true;
  for (int k : members_below) {
    if (k < 0) throw DomainError("semigroup: negative member");
    if (k < conductor) member[k] = true;
  }
  // Shrink the conductor past any trailing members.
  int c = conductor;
  while (c > 0 && member[c - 1]) --c;
  NumericalSemigroup s;
  s.conductor_ = c;
  for (int k = 0; k < c; ++k) {
    if (!member[k]) s.gaps_.push_back(k);
  }
  return s;
}

NumericalSemigroup NumericalSemigroup::generated_by(const std::vector<int>& generators) {
  int g = 0;
  for (int x : generators) {
    if (x <= 0) throw DomainError("semigroup: generators must be positive");
    g = std::gcd(g, x);
  }
  if (g != 1) throw DomainError("semigroup: generators must have gcd 1");
  const int smallest = *std::min_element(generators.begin(), generators.end());
  // Membership sieve until `smallest` consecutive members appear.
  std::vector<bool> member{true};
  int run = 1;
  for (int k = 1; run < smallest; ++k) {
    bool in = false;
    for (int x : generators) {
      if (x <= k && member[k - x]) {
        in = true;
        break;
      }
    }
    member.push_back(in);
    run = in ? run + 1 : 0;
  }
  std::vector<int> members;
  for (int k = 0; k < static_cast<int>(member.size()); ++k) {
    if (member[k]) members.push_back(k);
  }
  return from_members(static_cast<int>(member.size()), members);
}

bool NumericalSemigroup::contains(int k) const {
  if (k < 0) return false;
  if (k >= conductor_) return true;
  return !std::binary_search(gaps_.begin(), gaps_.end(), k);
}

std::vector<int> NumericalSemigroup::members_below(int bound) const {
  std::vector<int> out;
  for (int k = 0; k < bound; ++k) {
    if (contains(k)) out.push_back(k);
  }
  return out;
}

std::vector<int> NumericalSemigroup::minimal_generators() const {
  std::vector<int> gens;
  const int multiplicity = [&] {
    for (int k = 1;; ++k) {
      if (contains(k)) return k;
    }
  }();
  for (int k = 1; k < conductor_ + multiplicity; ++k) {
    if (!contains(k)) continue;
    bool decomposable = false;
    for (int a = 1; a <= k / 2 && !decomposable; ++a) {
      decomposable = contains(a) && contains(k - a);
    }
    if (!decomposable) gens.push_back(k);
  }
  return gens;
}

bool NumericalSemigroup::is_closed() const {
  for (int a = 1; a < conductor_; ++a) {
    if (!contains(a)) continue;
    for (int b = a; a + b < conductor_; ++b) {
      if (contains(b) && !contains(a + b)) return false;
    }
  }
  return true;
}

std::string NumericalSemigroup::to_string() const {
  std::ostringstream out;
  out << "<";
  const auto gens = minimal_generators();
  for (std::size_t k = 0; k < gens.size(); ++k) out << (k ? "," : "") << gens[k];
  out << "> conductor " << conductor_ << " gaps {";
  for (std::size_t k = 0; k < gaps_.size(); ++k) out << (k ? "," : "") << gaps_[k];
  out << "}";
  return out.str();
}

NumericalSemigroup two_generator_semigroup(int n, int m) {
  if (n < 2 || m < 2) throw DomainError("two_generator_semigroup: n, m must be >= 2");
  if (std::gcd(n, m) != 1) throw DomainError("two_generator_semigroup: n and m are not coprime");
  return NumericalSemigroup::generated_by({n, m});
}

int monomial_count(int i, int n, int m) {
  if (i < 0) return 0;
  int count = 0;
  const int wp = m - n;
  for (int b = 0; b * m <= i; ++b) {
    for (int c = 0; b * m + c * wp <= i; ++c) {
      if ((i - b * m - c * wp) % n == 0) ++count;
    }
  }
  return count;
}

void require_generic_type(int n, int m) {
  if (n < 2) throw DomainError("(n, m) = (" + std::to_string(n) + ", " + std::to_string(m) +
                               "): n must be >= 2");
  if (std::gcd(n, m) != 1) {
    throw DomainError("(n, m) = (" + std::to_string(n) + ", " + std::to_string(m) +
                      "): n and m are not coprime");
  }
  if (m < 2 * n + 1) {
    throw DomainError("(n, m) = (" + std::to_string(n) + ", " + std::to_string(m) +
                      "): strong generic position needs m >= 2n + 1");
  }
}

GammaResult gamma(int n, int m) {
  require_generic_type(n, m);
  const int c = (n - 1) * (m - 1);
  const NumericalSemigroup base = NumericalSemigroup::generated_by({n, m - n});

  std::vector<bool> member(c, false);
  for (int k = 0; k < c; k += n) member[k] = true;
  const auto non_members_from = [&](int i) {
    std::vector<int> out;
    for (int k = i; k < c; ++k) {
      if (!member[k]) out.push_back(k);
    }
    return out;
  };

  GammaResult result;
  result.table.base_conductor = c;
  int i = c;
  while (i > m - n) {
    // Largest element of ⟨n, m-n⟩ below the last processed one that is not yet a member.
    int next = -1;
    for (int k = std::min(i, c) - 1; k >= m - n; --k) {
      if (base.contains(k) && !member[k]) {
        next = k;
        break;
      }
    }
    if (next < 0) break;
    i = next;
    const auto free = non_members_from(i);
    TrajectoryEntry e;
    e.i = i;
    e.sharp = std::min(monomial_count(i, n, m), static_cast<int>(free.size()));
    e.omega = free[e.sharp - 1];
    for (int k = i; k <= e.omega; ++k) {
      if (k % n != 0) e.tau.push_back(k);
    }
    for (int k : e.tau) member[k] = true;
    result.table.entries.push_back(std::move(e));
  }

  std::vector<int> members;
  for (int k = 0; k < c; ++k) {
    if (member[k]) members.push_back(k);
  }
  result.semigroup = NumericalSemigroup::from_members(c, members);
  return result;
}

std::optional<int> find_s_invariant(int n, int m) {
  const NumericalSemigroup g = gamma(n, m).semigroup;
  const NumericalSemigroup base = NumericalSemigroup::generated_by({n, m - n});
  for (int k = 0; k < std::max(g.conductor(), base.conductor()); ++k) {
    if (g.contains(k) && !base.contains(k)) return k;
  }
  return std::nullopt;
}

int s_invariant(int n, int m) {
  const auto s = find_s_invariant(n, m);
  if (!s) {
    throw DomainError("no s-invariant: Γ(" + std::to_string(n) + "," + std::to_string(m) +
                      ") = <" + std::to_string(n) + "," + std::to_string(m - n) + ">");
  }
  return *s;
}

int moduli_dimension(int n, int m) {
  const NumericalSemigroup g = gamma(n, m).semigroup;
  int count = 0;
  for (int gap : g.gaps()) {
    if (gap >= m) ++count;
  }
  return count + (find_s_invariant(n, m) ? 1 : 0);
}

}  // namespace legendrian
