#pragma once

// Tournament on n labeled vertices 0..n-1 with row-bitset adjacency:
// beats(i, j) is true iff the edge between i and j is directed i -> j.
// Values are immutable after construction and safe to share across threads;
// every operation in this library is a pure function of its arguments.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "starfactor/vertex_set.hpp"

namespace starfactor {

class Tournament {
public:
  Tournament() = default;

  // beats(i, j) is consulted once per pair i < j; true orients i -> j.
  template <typename Orient>
  static Tournament build(int n, Orient&& beats) {
    if (n < 1) throw std::invalid_argument("Tournament::build: n must be positive");
    Tournament t;
    t.n_ = n;
    t.rows_.assign(n, VertexSet(n));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        if (beats(i, j))
          t.rows_[i].set(j);
        else
          t.rows_[j].set(i);
      }
    return t;
  }

  int size() const { return n_; }

  bool beats(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return rows_[u].test(v);
  }

  const VertexSet& out_neighbors(int v) const {
    check_vertex(v);
    return rows_[v];
  }

  VertexSet in_neighbors(int v) const {
    check_vertex(v);
    VertexSet s = rows_[v].complement();
    s.reset(v);
    return s;
  }

  int out_degree(int v) const {
    check_vertex(v);
    return rows_[v].count();
  }

  int in_degree(int v) const { return n_ - 1 - out_degree(v); }

  VertexSet vertex_set() const { return VertexSet::full(n_); }

  // Checks the structural invariants: irreflexive, complete, antisymmetric,
  // and total out-degree n(n-1)/2. Throws std::logic_error on violation.
  void validate() const {
    long long total = 0;
    for (int i = 0; i < n_; ++i) {
      if (rows_[i].test(i)) throw std::logic_error("tournament: self-loop at " + std::to_string(i));
      total += rows_[i].count();
      for (int j = i + 1; j < n_; ++j)
        if (rows_[i].test(j) == rows_[j].test(i))
          throw std::logic_error("tournament: pair (" + std::to_string(i) + "," +
                                 std::to_string(j) + ") not oriented exactly once");
    }
    if (total != static_cast<long long>(n_) * (n_ - 1) / 2)
      throw std::logic_error("tournament: out-degree sum mismatch");
  }

  bool operator==(const Tournament&) const = default;

private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw std::out_of_range("tournament: vertex " + std::to_string(v) + " out of range [0," +
                              std::to_string(n_) + ")");
  }

  int n_ = 0;
  std::vector<VertexSet> rows_;
};

// Subtournament induced by a vertex set, with index maps both ways.
struct Induced {
  Tournament sub;
  std::vector<int> to_parent;  // sub vertex -> parent vertex
  std::vector<int> to_sub;     // parent vertex -> sub vertex, -1 if outside
};

inline Induced induced(const Tournament& t, const VertexSet& s) {
  if (s.empty()) throw std::invalid_argument("induced: vertex set is empty");
  Induced r;
  r.to_parent = s.to_vector();
  r.to_sub.assign(t.size(), -1);
  for (std::size_t i = 0; i < r.to_parent.size(); ++i) r.to_sub[r.to_parent[i]] = static_cast<int>(i);
  r.sub = Tournament::build(static_cast<int>(r.to_parent.size()), [&](int i, int j) {
    return t.beats(r.to_parent[i], r.to_parent[j]);
  });
  return r;
}

}  // namespace starfactor
