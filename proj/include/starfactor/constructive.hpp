#pragma once

// Constructive m-star-factor algorithm. For n a multiple of m with
// n > 4m^2 - 6m it always succeeds; below that bound it still runs and
// reports which stage could not proceed.
//
// Stages, all around a hub x of maximum out-degree:
//   1. x <- vertex of maximum out-degree (ties to lowest index).
//   2. Pack N^-(x) greedily with m-stars; A <- the uncovered residue
//      (at most 2m-3 vertices, by maximality of the packing).
//   3. Scan A in index order; a vertex with at least m-1 untouched
//      out-neighbors in N^+(x) becomes the center of a cross star on its
//      m-1 lowest such neighbors. A' <- what is left of A, a = |A'|.
//   4. B  <- untouched part of N^+(x);
//      B' <- vertices of B dominating all of A'.
//   5. y  <- vertex of B' with at least m-2 successors inside B'
//      (maximum inner out-degree, ties to lowest index);
//      R  <- {y} plus its m-2 lowest successors in B'.
//   6. If a >= m: one star centered at the lowest vertex of B' \ R over the
//      m-1 lowest vertices of A'. Then, if anything of A' remains (or when
//      0 < a < m), one star centered at y over the rest of A', padded with
//      the lowest members of R \ {y} up to m-1 leaves.
//   7. While at least 2m-2 unused vertices of B remain, extract m-stars
//      greedily; exactly m-1 then remain and form the final star under x.
//
// The inequalities that make each stage feasible are evaluated on every
// run (ProofChecks). Above the bound a violated inequality is a fatal
// diagnostic (std::logic_error); below it the run ends in a structured
// stage failure instead.

#include <optional>
#include <stdexcept>
#include <string>

#include "starfactor/star_factor.hpp"

namespace starfactor {

// Success is guaranteed for n > this value.
constexpr long long constructive_success_bound(int m) { return 4LL * m * m - 6LL * m; }

// Smallest multiple of m strictly above the bound: (4m-5)m.
constexpr long long smallest_guaranteed_order(int m) { return (4LL * m - 5) * m; }

struct ProofChecks {
  bool above_bound = false;
  int residue_size = 0;       // |A|
  int uncovered_size = 0;     // a = |A'|
  int pool_size = 0;          // |B|
  int dominator_size = 0;     // |B'|
  bool residue_ok = false;    // |A| <= 2m-3
  bool dominator_lower_ok = false;  // |B'| >= |B| - a(m-2)
  bool dominator_min_ok = false;    // |B'| >= 2m-3
  bool hub_ok = false;              // some y in B' has >= m-2 successors in B'
  int terminal_remaining = -1;      // vertices left for the final star
  bool terminal_ok = false;         // == m-1

  bool all_ok() const {
    return residue_ok && dominator_lower_ok && dominator_min_ok && hub_ok && terminal_ok;
  }
};

struct FactorOutcome {
  std::optional<StarFactor> factor;
  std::string failed_stage;  // empty iff factor present
  std::string detail;
  ProofChecks checks;

  bool ok() const { return factor.has_value(); }
};

inline FactorOutcome find_star_factor_constructive(const Tournament& t, int m) {
  if (m < 2) throw std::invalid_argument("find_star_factor_constructive: m must be at least 2");
  const int n = t.size();
  if (n % m != 0)
    throw std::invalid_argument("find_star_factor_constructive: n=" + std::to_string(n) +
                                " is not a multiple of m=" + std::to_string(m));

  FactorOutcome out;
  ProofChecks& pc = out.checks;
  pc.above_bound = n > constructive_success_bound(m);

  auto bug = [&](const std::string& what) {
    throw std::logic_error("find_star_factor_constructive: " + what +
                           " (n=" + std::to_string(n) + ", m=" + std::to_string(m) + ")");
  };
  auto stage_failure = [&](const std::string& stage, const std::string& detail) {
    if (pc.above_bound) bug("stage '" + stage + "' failed above the success bound: " + detail);
    out.failed_stage = stage;
    out.detail = detail;
    return out;
  };

  std::vector<Star> stars;

  // 1. hub
  int x = 0;
  for (int v = 1; v < n; ++v)
    if (t.out_degree(v) > t.out_degree(x)) x = v;

  // 2. pack the in-neighborhood
  GreedyPack pack_in = greedy_pack(t, t.in_neighbors(x), m);
  stars.insert(stars.end(), pack_in.stars.begin(), pack_in.stars.end());
  VertexSet residue = pack_in.leftover;  // A
  pc.residue_size = residue.count();
  pc.residue_ok = pc.residue_size <= 2 * m - 3;
  if (!pc.residue_ok) bug("greedy residue larger than 2m-3");

  // 3. cross stars: centers in A, leaves in the untouched out-neighborhood.
  // One ascending pass is a fixed point: the pool only shrinks, so a vertex
  // that fails cannot succeed later. Clearing v keeps the iterator valid
  // (it advances past v regardless).
  VertexSet pool = t.out_neighbors(x);
  for (int v : residue) {
    VertexSet avail = t.out_neighbors(v) & pool;
    if (avail.count() >= m - 1) {
      VertexSet leaves = avail.lowest(m - 1);
      pool -= leaves;
      residue.reset(v);
      stars.push_back({v, leaves});
    }
  }
  VertexSet uncovered = residue;  // A'
  const int a = uncovered.count();
  pc.uncovered_size = a;

  // 4. dominators of A' within the untouched pool
  const VertexSet b = pool;
  VertexSet dominators(n);  // B'
  for (int v : b)
    if (t.out_neighbors(v).contains_all(uncovered)) dominators.set(v);
  pc.pool_size = b.count();
  pc.dominator_size = dominators.count();
  pc.dominator_lower_ok = pc.dominator_size >= pc.pool_size - a * (m - 2);
  if (!pc.dominator_lower_ok) bug("dominator count below the edge-counting floor");
  pc.dominator_min_ok = pc.dominator_size >= 2 * m - 3;
  if (pc.above_bound && !pc.dominator_min_ok) bug("fewer than 2m-3 dominators above the bound");

  // 5. hub of the dominator set
  int y = -1, y_deg = -1;
  for (int v : dominators) {
    int d = (t.out_neighbors(v) & dominators).count();
    if (d > y_deg) {
      y_deg = d;
      y = v;
    }
  }
  pc.hub_ok = y >= 0 && y_deg >= m - 2;
  if (pc.above_bound && !pc.hub_ok) bug("no dominator with m-2 successors above the bound");
  VertexSet reserve(n);  // R
  if (pc.hub_ok) {
    reserve.set(y);
    reserve |= (t.out_neighbors(y) & dominators).lowest(m - 2);
  }

  // 6. cover A'
  VertexSet used_from_pool(n);
  if (a > 0) {
    if (dominators.empty()) return stage_failure("dominator-pool", "no vertex of the pool dominates the uncovered residue");
    if (!pc.hub_ok) return stage_failure("hub-selection", "no dominator has m-2 successors among the dominators");
    if (a >= m) {
      VertexSet spare = dominators - reserve;
      if (spare.empty()) return stage_failure("spare-center", "every dominator is reserved");
      int c = spare.first();
      VertexSet leaves = uncovered.lowest(m - 1);
      uncovered -= leaves;
      used_from_pool.set(c);
      stars.push_back({c, leaves});
    }
    if (uncovered.any()) {
      VertexSet leaves = uncovered;
      VertexSet pad = reserve;
      pad.reset(y);
      int need = (m - 1) - leaves.count();
      if (need > pad.count()) bug("reserve too small to pad the hub star");
      VertexSet pads = pad.lowest(need);
      leaves |= pads;
      used_from_pool.set(y);
      used_from_pool |= pads;
      stars.push_back({y, leaves});
    }
  }

  // 7. pack the rest of the pool, then the final star under x
  VertexSet rem = b - used_from_pool;
  while (rem.count() >= 2 * m - 2) {
    int best = -1, best_deg = -1;
    for (int v : rem) {
      int d = (t.out_neighbors(v) & rem).count();
      if (d > best_deg) {
        best_deg = d;
        best = v;
      }
    }
    if (best_deg < m - 1) bug("no m-star in a pool of size >= 2m-2");
    VertexSet leaves = (t.out_neighbors(best) & rem).lowest(m - 1);
    rem.reset(best);
    rem -= leaves;
    stars.push_back({best, leaves});
  }
  pc.terminal_remaining = rem.count();
  pc.terminal_ok = pc.terminal_remaining == m - 1;
  if (!pc.terminal_ok) bug("final star does not see exactly m-1 leftover vertices");
  stars.push_back({x, rem});

  out.factor = StarFactor{m, std::move(stars)};
  return out;
}

}  // namespace starfactor
