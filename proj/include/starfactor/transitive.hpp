#pragma once

// Transitive-subtournament extraction and the partition procedure that
// splits a large enough tournament into blocks inducing transitive
// subtournaments of order m.
//
// Throughout, theta_bound(q) = 2^(q-1) is the constructive order that forces
// a transitive subtournament of order q (repeatedly take a vertex of maximum
// out-degree and recurse into its out-neighborhood, which keeps at least half
// of what remains). The partition procedure is instantiated with this bound,
// never with exact values; exact theta is computable only for q <= 4 via the
// class catalogs.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "starfactor/enumeration.hpp"
#include "starfactor/errors.hpp"
#include "starfactor/tournament.hpp"

namespace starfactor {

// Domination order: element i beats every later element.
using TransitiveWitness = std::vector<int>;

inline bool is_transitive_order(const Tournament& t, std::span<const int> seq) {
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (!t.beats(seq[i], seq[j])) return false;
  return true;
}

// Greedy chain: take the vertex of maximum out-degree within the current
// set (ties to the lowest index) and recurse into its out-neighborhood.
// The result has length at least floor(lg |within|) + 1.
inline TransitiveWitness greedy_transitive(const Tournament& t, VertexSet within) {
  TransitiveWitness seq;
  while (within.any()) {
    int best = -1, best_deg = -1;
    for (int v : within) {
      int d = (t.out_neighbors(v) & within).count();
      if (d > best_deg) {
        best_deg = d;
        best = v;
      }
    }
    seq.push_back(best);
    within &= t.out_neighbors(best);
  }
  return seq;
}

inline TransitiveWitness greedy_transitive(const Tournament& t) {
  return greedy_transitive(t, VertexSet::full(t.size()));
}

struct TransitiveSearchOptions {
  std::uint64_t node_budget = 10'000'000;
};

namespace detail {

struct TransitiveSearch {
  const Tournament& t;
  int target;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  std::vector<int> seq;

  bool dfs(const VertexSet& candidates) {
    if (static_cast<int>(seq.size()) == target) return true;
    if (++nodes > budget)
      throw BudgetError("find_transitive_exact: node budget " + std::to_string(budget) +
                        " exceeded; raise the budget to proceed");
    if (static_cast<int>(seq.size()) + candidates.count() < target) return false;
    for (int v : candidates) {
      seq.push_back(v);
      if (dfs(candidates & t.out_neighbors(v))) return true;
      seq.pop_back();
    }
    return false;
  }
};

}  // namespace detail

// Backtracking search for a transitive subtournament of the given order;
// returns the lexicographically first witness (as a domination order) or
// nothing. Candidates for the next element are the vertices dominated by
// everything chosen so far.
inline std::optional<TransitiveWitness> find_transitive_exact(
    const Tournament& t, int order, const TransitiveSearchOptions& opt = {}) {
  if (order < 1 || order > t.size())
    throw std::invalid_argument("find_transitive_exact: order " + std::to_string(order) +
                                " out of range [1," + std::to_string(t.size()) + "]");
  detail::TransitiveSearch search{t, order, opt.node_budget, 0, {}};
  if (search.dfs(VertexSet::full(t.size()))) return search.seq;
  return std::nullopt;
}

// 2^(q-1), the order that forces a transitive subtournament of order q.
inline std::uint64_t theta_bound(int q) {
  if (q < 1 || q > 64)
    throw std::invalid_argument("theta_bound: order " + std::to_string(q) +
                                " outside the representable range");
  return std::uint64_t{1} << (q - 1);
}

// Exact theta for m <= 4: least n such that every n-vertex tournament
// contains a transitive subtournament of order m, by exhaustive class scan.
inline int theta_exact(int m) {
  if (m < 1 || m > 4)
    throw std::invalid_argument("theta_exact: only m <= 4 is within the enumeration range");
  if (m == 1) return 1;
  for (int n = m; n <= kMaxCanonicalOrder; ++n) {
    bool all = true;
    for (const Tournament& rep : enumerate_classes(n).representatives)
      if (!find_transitive_exact(rep, m)) {
        all = false;
        break;
      }
    if (all) return n;
  }
  throw std::logic_error("theta_exact: not settled within the enumeration range");
}

struct TransitivePartition {
  int m = 0;
  std::vector<TransitiveWitness> blocks;  // each in domination order
};

inline bool verify_transitive_partition(const Tournament& t, const TransitivePartition& p) {
  if (p.m < 1) return false;
  VertexSet covered(t.size());
  for (const auto& block : p.blocks) {
    if (static_cast<int>(block.size()) != p.m) return false;
    if (!is_transitive_order(t, block)) return false;
    for (int v : block) {
      if (v < 0 || v >= t.size() || covered.test(v)) return false;
      covered.set(v);
    }
  }
  return covered.count() == t.size();
}

// The exact order this implementation accepts: m * ceil(theta((m-1)*theta(m)) / m)
// with theta instantiated by theta_bound.
inline std::uint64_t partition_required_order(int m) {
  if (m < 2) throw std::invalid_argument("partition_required_order: m must be at least 2");
  std::uint64_t inner = static_cast<std::uint64_t>(m - 1) * theta_bound(m);
  if (inner > 64)
    throw std::invalid_argument("partition_required_order: m=" + std::to_string(m) +
                                " gives an order outside the representable range");
  std::uint64_t forced = theta_bound(static_cast<int>(inner));
  return ((forced + m - 1) / m) * m;
}

// Partition into transitive blocks of order m. Requires n to equal
// partition_required_order(m), where every stage is guaranteed:
//   A. a transitive backbone A of order (m-1)*theta_bound(m), by the greedy
//      chain (exact search as fallback);
//   B. extract greedy transitive m-blocks from T - A while at least
//      theta_bound(m) vertices remain outside A;
//   C. each leftover vertex v takes m-1 successors or m-1 predecessors from
//      the surviving part of A (possible while >= 2(m-1) survive), joining
//      them at the front resp. back of their order;
//   D. the rest of A splits into consecutive m-blocks of its own order.
// Stage infeasibility would contradict the guarantee and throws
// std::logic_error.
inline TransitivePartition lonc_partition(const Tournament& t, int m) {
  const int n = t.size();
  std::uint64_t required = partition_required_order(m);
  if (static_cast<std::uint64_t>(n) != required)
    throw std::invalid_argument("lonc_partition: n=" + std::to_string(n) + " must equal " +
                                std::to_string(required) + " for m=" + std::to_string(m));

  auto stage_broken = [&](const std::string& what) {
    throw std::logic_error("lonc_partition: " + what + " (n=" + std::to_string(n) +
                           ", m=" + std::to_string(m) + "); this contradicts the guarantee");
  };

  TransitivePartition out;
  out.m = m;

  // A. transitive backbone
  const int backbone_order = static_cast<int>((m - 1) * theta_bound(m));
  TransitiveWitness chain = greedy_transitive(t);
  if (static_cast<int>(chain.size()) < backbone_order) {
    auto exact = find_transitive_exact(t, backbone_order);
    if (!exact) stage_broken("no transitive backbone of order " + std::to_string(backbone_order));
    chain = *exact;
  }
  std::vector<int> backbone(chain.begin(), chain.begin() + backbone_order);
  VertexSet backbone_set(n);
  for (int v : backbone) backbone_set.set(v);

  // B. drain the outside down to fewer than theta_bound(m) vertices
  VertexSet outside = VertexSet::full(n) - backbone_set;
  const int drain_floor = static_cast<int>(theta_bound(m));
  while (outside.count() >= drain_floor) {
    TransitiveWitness w = greedy_transitive(t, outside);
    if (static_cast<int>(w.size()) < m) stage_broken("outside pool stopped yielding m-blocks");
    TransitiveWitness block(w.begin(), w.begin() + m);
    for (int v : block) outside.reset(v);
    out.blocks.push_back(std::move(block));
  }

  // C. absorb each leftover vertex with m-1 partners from the backbone
  std::vector<int> surviving = backbone;  // in backbone (domination) order
  for (int v : outside) {
    if (static_cast<int>(surviving.size()) < 2 * (m - 1))
      stage_broken("backbone too small while absorbing leftover vertices");
    std::vector<int> succ, pred;
    for (int u : surviving) (t.beats(v, u) ? succ : pred).push_back(u);
    std::vector<int>& side = static_cast<int>(succ.size()) >= m - 1 ? succ : pred;
    if (static_cast<int>(side.size()) < m - 1) stage_broken("pigeonhole absorption failed");
    std::sort(side.begin(), side.end());
    side.resize(m - 1);
    VertexSet picked(n);
    for (int u : side) picked.set(u);
    TransitiveWitness block;
    if (&side == &succ) block.push_back(v);
    for (int u : surviving)
      if (picked.test(u)) block.push_back(u);
    if (&side == &pred) block.push_back(v);
    std::erase_if(surviving, [&](int u) { return picked.test(u); });
    out.blocks.push_back(std::move(block));
  }

  // D. chunk the rest of the backbone
  if (surviving.size() % m != 0) stage_broken("surviving backbone not divisible into m-blocks");
  for (std::size_t i = 0; i < surviving.size(); i += m)
    out.blocks.emplace_back(surviving.begin() + i, surviving.begin() + i + m);

  return out;
}

}  // namespace starfactor
