#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "legendrian/contact.hpp"
#include "legendrian/curve.hpp"
#include "legendrian/oracle.hpp"
#include "legendrian/upsilon.hpp"

namespace legendrian {

/// One SplitMix64 output; advances `state`.
std::uint64_t splitmix64(std::uint64_t& state);

/// Seed of trial k under master seed S: splitmix64 applied once to S ^ (0x9E3779B97F4A7C15 * (k + 1)).
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

/// mt19937_64 with a portable bounded-integer draw (rejection sampling, no
/// implementation-defined distributions), so reports replay across standard libraries.
class TrialRng {
 public:
  explicit TrialRng(std::uint64_t seed) : engine_(seed) {}
  TrialRng(std::uint64_t seed, std::uint64_t trial) : engine_(trial_seed(seed, trial)) {}

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// x = t^n, y = t^m + Σ_{m < i < σ} a_i t^i with a_i uniform in [-range, range], σ the default accuracy.
PlaneCurveGerm random_generic_curve(int n, int m, std::int64_t range, TrialRng& rng);

/// Φ_{α,β0} in the subgroup J, shaped so that it keeps curves of type (n, m) in the chart:
/// v(α) >= m - n with no x-linear term, β0 free of p with v(β0) >= v(α) + m - n.
ContactMap random_j_map(Weights w, int accuracy, TrialRng& rng, int coefficient_range = 3);

struct TrialOutcome {
  std::uint64_t trial = 0;
  bool pass = false;
  PlaneCurveGerm curve{2, {{3, Rational(1)}}};
  NumericalSemigroup observed;
};

/// Draws `trials` random curves and compares their oracle semigroup with Γ(n, m). Results are
/// ordered by trial index in both execution modes.
std::vector<TrialOutcome> verify_generic_trials(int n, int m, int trials, std::uint64_t seed,
                                                std::int64_t range, Execution mode = Execution::Parallel);

/// A square Υ selection: the initial rows l = 0..r-1 of a family λ_{l,k} and r columns.
struct FamilySelection {
  int N = 0;
  int q = 0;
  std::vector<Monomial> rows;
  std::vector<int> cols;
};

FamilySelection random_family_selection(const UpsilonContext& ctx, TrialRng& rng);

}  // namespace legendrian
