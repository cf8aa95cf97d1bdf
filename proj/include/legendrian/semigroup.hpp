#pragma once

#include <optional>
#include <string>
#include <vector>

namespace legendrian {

/// Numerical semigroup stored as conductor plus sorted gaps.
class NumericalSemigroup {
 public:
  NumericalSemigroup() = default;
  /// Semigroup whose members below `conductor` are exactly `members_below` (0 implied).
  static NumericalSemigroup from_members(int conductor, const std::vector<int>& members_below);
  /// Smallest set containing 0, closed under addition, generated by `generators`.
  static NumericalSemigroup generated_by(const std::vector<int>& generators);

  int conductor() const { return conductor_; }
  const std::vector<int>& gaps() const { return gaps_; }
  bool contains(int k) const;
  /// Members in [0, bound).
  std::vector<int> members_below(int bound) const;
  std::vector<int> minimal_generators() const;
  bool is_closed() const;
  std::string to_string() const;

  friend bool operator==(const NumericalSemigroup&, const NumericalSemigroup&) = default;

 private:
  int conductor_ = 0;
  std::vector<int> gaps_;
};

/// ⟨n, m⟩ for coprime n, m >= 2.
NumericalSemigroup two_generator_semigroup(int n, int m);

/// Number of monomials x^a y^b p^c with n a + m b + (m - n) c = i.
int monomial_count(int i, int n, int m);

struct TrajectoryEntry {
  int i = 0;
  int sharp = 0;
  int omega = 0;
  std::vector<int> tau;
  friend bool operator==(const TrajectoryEntry&, const TrajectoryEntry&) = default;
};

struct TrajectoryTable {
  int base_conductor = 0;
  std::vector<TrajectoryEntry> entries;
  friend bool operator==(const TrajectoryTable&, const TrajectoryTable&) = default;
};

struct GammaResult {
  NumericalSemigroup semigroup;
  TrajectoryTable table;
};

/// Checks gcd(n, m) = 1 and m >= 2n + 1; throws DomainError otherwise.
void require_generic_type(int n, int m);

/// The generic Legendrian semigroup Γ(n, m) by trajectory descent.
GammaResult gamma(int n, int m);

/// inf(Γ(n,m) \ ⟨n, m-n⟩), or nothing when the two coincide.
std::optional<int> find_s_invariant(int n, int m);
/// As find_s_invariant; throws DomainError("no s-invariant ...") when it does not exist.
int s_invariant(int n, int m);

int moduli_dimension(int n, int m);

}  // namespace legendrian
