#pragma once

// Exact decision oracles for m-star-factors.
//
// has_star_factor_exact scans center sets in lexicographic order; a fixed
// center set is feasible iff every non-center can be assigned to a center
// that dominates it with every center receiving exactly m-1 leaves, a
// capacitated bipartite assignment decided by augmenting paths. The witness
// is therefore built on the lexicographically least feasible center set.
//
// has_star_factor_bruteforce is the independent second route: a recursive
// partition search that assigns the lowest unassigned vertex to an existing
// star (as a leaf under its center) or opens a new star with that vertex as
// center, or as a leaf under a chosen unassigned dominator.

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "starfactor/combinatorics.hpp"
#include "starfactor/errors.hpp"
#include "starfactor/star_factor.hpp"

namespace starfactor {

struct ExactOracleOptions {
  long long center_set_budget = 10'000'000;  // cap on C(n, n/m)
};

namespace detail {

// Kuhn augmenting paths over per-center slots; slot s belongs to center s/(m-1).
class SlotMatcher {
public:
  SlotMatcher(const Tournament& t, const std::vector<int>& centers, int m)
      : t_(t), centers_(centers), cap_(m - 1) {
    int n = t.size();
    VertexSet center_set(n);
    for (int c : centers) center_set.set(c);
    for (int v = 0; v < n; ++v)
      if (!center_set.test(v)) leaves_.push_back(v);
    slot_owner_.assign(centers.size() * cap_, -1);
  }

  std::optional<StarFactor> run(int m) {
    for (int leaf : leaves_) {
      visited_.assign(slot_owner_.size(), false);
      if (!augment(leaf)) return std::nullopt;
    }
    StarFactor f;
    f.m = m;
    for (std::size_t ci = 0; ci < centers_.size(); ++ci) {
      Star s{centers_[ci], VertexSet(t_.size())};
      for (int j = 0; j < cap_; ++j) s.leaves.set(slot_owner_[ci * cap_ + j]);
      f.stars.push_back(std::move(s));
    }
    return f;
  }

private:
  bool augment(int leaf) {
    for (std::size_t ci = 0; ci < centers_.size(); ++ci) {
      if (!t_.beats(centers_[ci], leaf)) continue;
      for (int j = 0; j < cap_; ++j) {
        std::size_t s = ci * cap_ + j;
        if (visited_[s]) continue;
        visited_[s] = true;
        if (slot_owner_[s] < 0 || augment(slot_owner_[s])) {
          slot_owner_[s] = leaf;
          return true;
        }
      }
    }
    return false;
  }

  const Tournament& t_;
  const std::vector<int>& centers_;
  int cap_;
  std::vector<int> leaves_;
  std::vector<int> slot_owner_;
  std::vector<char> visited_;
};

}  // namespace detail

inline std::optional<StarFactor> has_star_factor_exact(const Tournament& t, int m,
                                                       const ExactOracleOptions& opt = {}) {
  if (m < 2) throw std::invalid_argument("has_star_factor_exact: m must be at least 2");
  const int n = t.size();
  if (n % m != 0)
    throw std::invalid_argument("has_star_factor_exact: n=" + std::to_string(n) +
                                " is not a multiple of m=" + std::to_string(m));
  const int k = n / m;
  long long sets = detail::choose_capped(n, k, opt.center_set_budget);
  if (sets > opt.center_set_budget)
    throw BudgetError("has_star_factor_exact: C(" + std::to_string(n) + "," + std::to_string(k) +
                      ") center sets exceed the budget of " +
                      std::to_string(opt.center_set_budget) + "; raise the budget to proceed");

  std::optional<StarFactor> found;
  detail::for_each_combination(n, k, [&](const std::vector<int>& centers) {
    // Cheap necessary conditions before the matching.
    VertexSet covered(n);
    for (int c : centers) {
      if (t.out_degree(c) < m - 1) return false;
      covered.set(c);
      covered |= t.out_neighbors(c);
    }
    if (covered.count() != n) return false;
    detail::SlotMatcher matcher(t, centers, m);
    if (auto f = matcher.run(m)) {
      found = std::move(f);
      return true;
    }
    return false;
  });
  return found;
}

inline constexpr int kBruteForceOrderGuard = 12;

namespace detail {

struct BruteState {
  int n = 0, m = 0, max_stars = 0;
  std::vector<std::uint32_t> out_mask;
  struct Open {
    int center;
    int size;
  };
  std::vector<Open> open;
  std::uint32_t all = 0;

  bool rec(std::uint32_t assigned) {
    if (assigned == all) return true;
    int v = std::countr_zero(~assigned & all);
    std::uint32_t vbit = std::uint32_t{1} << v;
    // Join an existing star whose center dominates v. Indices, not
    // references: the recursion appends to `open`.
    const std::size_t open_count = open.size();
    for (std::size_t i = 0; i < open_count; ++i) {
      if (open[i].size == m || !((out_mask[open[i].center] >> v) & 1)) continue;
      ++open[i].size;
      if (rec(assigned | vbit)) return true;
      --open[i].size;
    }
    if (static_cast<int>(open.size()) < max_stars) {
      // Open a new star with v as its center.
      open.push_back({v, 1});
      if (rec(assigned | vbit)) return true;
      open.pop_back();
      // Or with v as a leaf under an unassigned dominator.
      std::uint32_t doms = ~assigned & all;
      for (int u = v + 1; u < n; ++u) {
        std::uint32_t ubit = std::uint32_t{1} << u;
        if (!(doms & ubit) || !((out_mask[u] >> v) & 1)) continue;
        open.push_back({u, 2});
        if (rec(assigned | vbit | ubit)) return true;
        open.pop_back();
      }
    }
    return false;
  }
};

}  // namespace detail

inline bool has_star_factor_bruteforce(const Tournament& t, int m,
                                       int order_guard = kBruteForceOrderGuard) {
  if (m < 2) throw std::invalid_argument("has_star_factor_bruteforce: m must be at least 2");
  const int n = t.size();
  if (n % m != 0)
    throw std::invalid_argument("has_star_factor_bruteforce: n=" + std::to_string(n) +
                                " is not a multiple of m=" + std::to_string(m));
  if (n > order_guard)
    throw BudgetError("has_star_factor_bruteforce: n=" + std::to_string(n) +
                      " exceeds the order guard " + std::to_string(order_guard) +
                      "; raise the guard to proceed");
  if (n > 32)
    throw std::invalid_argument("has_star_factor_bruteforce: n=" + std::to_string(n) +
                                " is beyond the 32-vertex mask representation");
  detail::BruteState st;
  st.n = n;
  st.m = m;
  st.max_stars = n / m;
  st.open.reserve(st.max_stars);
  st.all = n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
  st.out_mask.assign(n, 0);
  for (int v = 0; v < n; ++v)
    for (int w : t.out_neighbors(v)) st.out_mask[v] |= std::uint32_t{1} << w;
  return st.rec(0);
}

}  // namespace starfactor
