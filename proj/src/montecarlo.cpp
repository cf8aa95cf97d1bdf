#include "legendrian/montecarlo.hpp"

#include <algorithm>
#include <limits>

#include "legendrian/errors.hpp"

namespace legendrian {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  std::uint64_t state = seed ^ (0x9E3779B97F4A7C15ULL * (trial + 1));
  return splitmix64(state);
}

std::int64_t TrialRng::uniform(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw DomainError("TrialRng::uniform: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(engine_());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t draw;
  do {
    draw = engine_();
  } while (draw >= limit);
  return lo + static_cast<std::int64_t>(draw % span);
}

PlaneCurveGerm random_generic_curve(int n, int m, std::int64_t range, TrialRng& rng) {
  require_generic_type(n, m);
  if (range < 0) throw DomainError("random_generic_curve: negative range");
  std::map<int, Rational> coeffs{{m, Rational(1)}};
  for (int i = m + 1; i < PlaneCurveGerm::default_accuracy(n, m); ++i) {
    coeffs[i] = Rational(static_cast<long>(rng.uniform(-range, range)));
  }
  return PlaneCurveGerm(n, coeffs);
}

ContactMap random_j_map(Weights w, int accuracy, TrialRng& rng, int coefficient_range) {
  const int low = w.m - w.n;
  GermQ alpha(w, accuracy);
  for (const auto& J : w.monomials_below(accuracy)) {
    if (w.of(J) < low || J == Monomial{1, 0, 0}) continue;
    if (rng.uniform(0, 9) < 3) alpha.add_term(J, Rational(static_cast<long>(rng.uniform(-coefficient_range, coefficient_range))));
  }
  if (alpha.is_zero_known()) alpha.add_term({0, 0, 1}, Rational(1));
  const int beta_low = alpha.valuation() + low;
  GermQ beta0(w, accuracy);
  for (const auto& J : w.monomials_below(accuracy)) {
    if (w.of(J) < beta_low || J.l > 0) continue;
    if (rng.uniform(0, 9) < 3) beta0.add_term(J, Rational(static_cast<long>(rng.uniform(-coefficient_range, coefficient_range))));
  }
  return from_alpha_beta0(alpha, beta0, accuracy);
}

std::vector<TrialOutcome> verify_generic_trials(int n, int m, int trials, std::uint64_t seed,
                                                std::int64_t range, Execution mode) {
  require_generic_type(n, m);
  if (trials < 0) throw DomainError("verify_generic: negative trial count");
  const NumericalSemigroup expected = gamma(n, m).semigroup;
  std::vector<TrialOutcome> out(trials);
  const auto run = [&](long k) {
    TrialRng rng(seed, static_cast<std::uint64_t>(k));
    TrialOutcome& o = out[k];
    o.trial = static_cast<std::uint64_t>(k);
    o.curve = random_generic_curve(n, m, range, rng);
    o.observed = conormal_semigroup(o.curve, Execution::Serial);
    o.pass = o.observed == expected;
  };
  parallel_for(trials, mode, run);
  return out;
}

FamilySelection random_family_selection(const UpsilonContext& ctx, TrialRng& rng) {
  const int n = ctx.n(), m = ctx.m(), c = ctx.c();
  std::vector<std::pair<int, int>> families;
  for (int N = 1; N * m < c; ++N)
    for (int q = 0; q * n + N * m < c; ++q) families.emplace_back(N, q);
  if (families.empty()) throw DomainError("random_family_selection: no family fits below the conductor");
  const auto [N, q] = families[rng.uniform(0, static_cast<std::int64_t>(families.size()) - 1)];
  std::vector<int> columns;
  for (int k = m; k < c; ++k) columns.push_back(k);
  const int top = std::min({N + 1, static_cast<int>(columns.size()), UpsilonContext::kMaxDimension});
  const int r = static_cast<int>(rng.uniform(1, top));
  FamilySelection sel{N, q, {}, {}};
  for (int l = 0; l < r; ++l) sel.rows.push_back(family_index(N, q, l));
  // Partial Fisher-Yates for r distinct columns, then sorted.
  for (int k = 0; k < r; ++k) {
    const auto pick = rng.uniform(k, static_cast<std::int64_t>(columns.size()) - 1);
    std::swap(columns[k], columns[pick]);
    sel.cols.push_back(columns[k]);
  }
  std::sort(sel.cols.begin(), sel.cols.end());
  return sel;
}

}  // namespace legendrian
