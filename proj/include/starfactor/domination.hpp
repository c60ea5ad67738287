#pragma once

// Property-P_k machinery: exhaustive k-domination checking, the first-moment
// expectation formula with its integer threshold scan, randomized search for
// k-dominated tournaments, and the avoidability cross-check (a k-dominated
// tournament on a multiple of k vertices is spanned by no k stars of any
// sizes).
//
// A k-set U is dominated iff the intersection of the in-neighborhoods of its
// members, minus U itself, is nonempty. The scan walks k-subsets in
// lexicographic order keeping that intersection incrementally; once the
// intersection is swallowed by the chosen prefix every completion is
// undominated, so the lexicographically first completion is the witness.

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "starfactor/combinatorics.hpp"
#include "starfactor/errors.hpp"
#include "starfactor/random.hpp"
#include "starfactor/tournament.hpp"

namespace starfactor {

struct DominationReport {
  int k = 0;
  bool dominated = false;
  std::optional<VertexSet> witness;  // an undominated k-set, present iff !dominated
  std::uint64_t sets_checked = 0;
};

namespace detail {

struct DominationScan {
  const Tournament& t;
  int k, n;
  std::vector<VertexSet> in;
  VertexSet chosen;
  std::uint64_t checked = 0;
  std::optional<VertexSet> witness;

  DominationScan(const Tournament& t_, int k_) : t(t_), k(k_), n(t_.size()), chosen(t_.size()) {
    in.reserve(n);
    for (int v = 0; v < n; ++v) in.push_back(t.in_neighbors(v));
  }

  bool dfs(int min_v, const VertexSet& inter, int depth) {
    for (int v = min_v; v <= n - (k - depth); ++v) {
      VertexSet inter2 = inter & in[v];
      chosen.set(v);
      bool leaf = depth + 1 == k;
      if (leaf) ++checked;
      if ((inter2 - chosen).empty()) {
        // No outside dominator survives for any completion of this prefix;
        // the first completion is the chosen set plus the next k-depth-1 indices.
        if (!leaf) ++checked;
        VertexSet w = chosen;
        for (int fill = v + 1, need = k - depth - 1; need > 0; --need, ++fill) w.set(fill);
        witness = w;
        return true;
      }
      if (!leaf && dfs(v + 1, inter2, depth + 1)) return true;
      chosen.reset(v);
    }
    return false;
  }
};

}  // namespace detail

inline DominationReport is_k_dominated(const Tournament& t, int k) {
  if (k < 1 || k >= t.size())
    throw std::invalid_argument("is_k_dominated: k=" + std::to_string(k) +
                                " out of range [1," + std::to_string(t.size()) + ")");
  detail::DominationScan scan(t, k);
  scan.dfs(0, VertexSet::full(t.size()), 0);
  DominationReport r;
  r.k = k;
  r.dominated = !scan.witness.has_value();
  r.witness = scan.witness;
  r.sets_checked = scan.checked;
  return r;
}

// C(n,k) * (1 - 2^-k)^(n-k), the expected number of undominated k-sets in a
// uniform random n-vertex tournament, evaluated in log space.
inline double expected_undominated(int n, int k) {
  if (n < 1 || k < 1 || k > n)
    throw std::invalid_argument("expected_undominated: need 1 <= k <= n");
  double log_choose = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
  double log_power = (n - k) * std::log1p(-std::ldexp(1.0, -k));
  return std::exp(log_choose + log_power);
}

inline constexpr int kThresholdScanGuard = 16;

// Least n > k with expected_undominated(n, k) < 1, by upward scan with no
// analytic shortcut; the expectation is verified to keep decreasing for the
// next 50 values. The scan length grows like 2^k, hence the guard.
inline int threshold_n(int k, int scan_guard = kThresholdScanGuard) {
  if (k < 1) throw std::invalid_argument("threshold_n: k must be positive");
  if (k > scan_guard)
    throw BudgetError("threshold_n: k=" + std::to_string(k) + " exceeds the scan guard " +
                      std::to_string(scan_guard) + "; raise the guard to proceed");
  int n = k + 1;
  while (expected_undominated(n, k) >= 1.0) ++n;
  double prev = expected_undominated(n, k);
  for (int i = 1; i <= 50; ++i) {
    double cur = expected_undominated(n + i, k);
    if (cur >= prev)
      throw std::logic_error("threshold_n: expectation not strictly decreasing past n=" +
                             std::to_string(n + i - 1));
    prev = cur;
  }
  return n;
}

struct DominationSearch {
  std::optional<Tournament> witness;  // first k-dominated sample, if any
  std::uint64_t trials_run = 0;
  std::uint64_t successes = 0;
  std::optional<std::uint64_t> first_success_seed;
  std::optional<std::uint64_t> first_success_trial;
};

// Samples random tournaments; trial t draws random_tournament(n, seed + t).
// With stop_at_first the scan ends at the first verified witness, otherwise
// all trials run and successes are counted.
inline DominationSearch find_k_dominated(int k, int n, std::uint64_t trials, std::uint64_t seed,
                                         bool stop_at_first = true) {
  if (n < 2 || k < 1 || k >= n)
    throw std::invalid_argument("find_k_dominated: need n >= 2 and 1 <= k < n");
  if (trials < 1) throw std::invalid_argument("find_k_dominated: trials must be positive");
  DominationSearch out;
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    std::uint64_t trial_seed = seed + trial;
    Tournament cand = random_tournament(n, trial_seed);
    out.trials_run = trial + 1;
    if (!is_k_dominated(cand, k).dominated) continue;
    ++out.successes;
    if (!out.witness) {
      out.witness = std::move(cand);
      out.first_success_seed = trial_seed;
      out.first_success_trial = trial;
    }
    if (stop_at_first) break;
  }
  return out;
}

// For a verified k-dominated tournament with k | n: true iff no k centers
// cover the rest, where covering means every non-center is dominated by
// some chosen center and star sizes are unconstrained. This must hold for
// every k-dominated input; a cover would be a counterexample and is
// reported as a fatal diagnostic.
inline bool avoidability_check(const Tournament& t, int k) {
  const int n = t.size();
  if (k < 1 || k >= n)
    throw std::invalid_argument("avoidability_check: k=" + std::to_string(k) + " out of range");
  if (n % k != 0)
    throw std::invalid_argument("avoidability_check: k=" + std::to_string(k) +
                                " does not divide n=" + std::to_string(n));
  if (!is_k_dominated(t, k).dominated)
    throw std::invalid_argument("avoidability_check: tournament is not " + std::to_string(k) +
                                "-dominated");
  detail::for_each_combination(n, k, [&](const std::vector<int>& centers) {
    VertexSet covered(n);
    for (int c : centers) {
      covered.set(c);
      covered |= t.out_neighbors(c);
    }
    if (covered.count() == n) {
      std::string list;
      for (int c : centers) list += (list.empty() ? "" : ",") + std::to_string(c);
      throw std::logic_error("avoidability_check: k-dominated tournament is spanned by centers {" +
                             list + "}; this should be impossible");
    }
    return false;
  });
  return true;
}

}  // namespace starfactor
