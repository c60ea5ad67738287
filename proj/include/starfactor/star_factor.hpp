#pragma once

// Stars and star-factors. A star is one center plus leaves it dominates;
// an m-star-factor partitions the vertex set into n/m disjoint stars with
// m-1 leaves each.

#include <stdexcept>
#include <string>
#include <vector>

#include "starfactor/tournament.hpp"

namespace starfactor {

struct Star {
  int center = -1;
  VertexSet leaves;
};

struct StarFactor {
  int m = 0;
  std::vector<Star> stars;
};

struct FactorCheck {
  bool ok = false;
  std::string reason;  // first violated condition when !ok
  explicit operator bool() const { return ok; }
};

// Checks the full definition against t and names the first violation:
// wrong leaf count, center listed as its own leaf, a "leaf" that is not
// dominated by its center, overlapping stars, or an incomplete cover.
inline FactorCheck verify_star_factor(const Tournament& t, const StarFactor& f) {
  int n = t.size();
  if (f.m < 2 || n % f.m != 0) return {false, "star order " + std::to_string(f.m) + " invalid for n=" + std::to_string(n)};
  if (static_cast<int>(f.stars.size()) != n / f.m)
    return {false, "expected " + std::to_string(n / f.m) + " stars, got " + std::to_string(f.stars.size())};
  VertexSet covered(n);
  for (std::size_t s = 0; s < f.stars.size(); ++s) {
    const Star& st = f.stars[s];
    std::string tag = "star " + std::to_string(s);
    if (st.center < 0 || st.center >= n) return {false, tag + ": center out of range"};
    if (st.leaves.universe() != n) return {false, tag + ": leaf set universe mismatch"};
    if (st.leaves.count() != f.m - 1)
      return {false, tag + ": has " + std::to_string(st.leaves.count()) + " leaves, expected " + std::to_string(f.m - 1)};
    if (st.leaves.test(st.center)) return {false, tag + ": center listed among leaves"};
    for (int leaf : st.leaves)
      if (!t.beats(st.center, leaf))
        return {false, tag + ": missing edge " + std::to_string(st.center) + "->" + std::to_string(leaf)};
    if (covered.test(st.center) || covered.intersects(st.leaves))
      return {false, tag + ": overlaps an earlier star"};
    covered.set(st.center);
    covered |= st.leaves;
  }
  if (covered.count() != n) return {false, "incomplete cover: " + std::to_string(covered.count()) + " of " + std::to_string(n) + " vertices"};
  return {true, ""};
}

struct GreedyPack {
  std::vector<Star> stars;
  VertexSet leftover;
};

// Maximal disjoint m-star packing inside the subtournament induced by
// `within`. Rule: repeatedly take the remaining vertex of maximum inner
// out-degree (ties to the lowest index); if it still dominates at least
// m-1 remaining vertices, form a star on its m-1 lowest-index remaining
// out-neighbors, otherwise stop. On exit no vertex of the leftover can
// center an m-star there, which caps the leftover at 2m-3 vertices.
inline GreedyPack greedy_pack(const Tournament& t, const VertexSet& within, int m) {
  if (m < 2) throw std::invalid_argument("greedy_pack: star order must be at least 2");
  GreedyPack out{{}, within};
  VertexSet& rem = out.leftover;
  while (true) {
    int best = -1, best_deg = -1;
    for (int v : rem) {
      int d = (t.out_neighbors(v) & rem).count();
      if (d > best_deg) {
        best_deg = d;
        best = v;
      }
    }
    if (best < 0 || best_deg < m - 1) return out;
    VertexSet leaves = (t.out_neighbors(best) & rem).lowest(m - 1);
    rem.reset(best);
    rem -= leaves;
    out.stars.push_back({best, leaves});
  }
}

}  // namespace starfactor
