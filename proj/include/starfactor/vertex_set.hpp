#pragma once

// Bitmask set over vertex indices 0..n-1. All set algebra used by the search
// inner loops (intersection, difference, complement, lowest-bit scans) is
// word-parallel; sets carry their universe size so complements are total.

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace starfactor {

class VertexSet {
public:
  VertexSet() = default;
  explicit VertexSet(int universe) : n_(universe), w_(word_count(universe), 0) {}

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (auto& w : s.w_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  static VertexSet of(int universe, std::initializer_list<int> vs) {
    VertexSet s(universe);
    for (int v : vs) s.set(v);
    return s;
  }

  int universe() const { return n_; }

  bool test(int v) const {
    assert(v >= 0 && v < n_);
    return (w_[v >> 6] >> (v & 63)) & 1;
  }

  void set(int v) {
    assert(v >= 0 && v < n_);
    w_[v >> 6] |= std::uint64_t{1} << (v & 63);
  }

  void reset(int v) {
    assert(v >= 0 && v < n_);
    w_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }

  int count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (auto w : w_)
      if (w) return false;
    return true;
  }
  bool any() const { return !empty(); }

  // Lowest member, or -1.
  int first() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return static_cast<int>(i * 64 + std::countr_zero(w_[i]));
    return -1;
  }

  // Lowest member strictly greater than v, or -1.
  int next_after(int v) const {
    int start = v + 1;
    if (start >= n_) return -1;
    std::size_t i = static_cast<std::size_t>(start) >> 6;
    std::uint64_t w = w_[i] & (~std::uint64_t{0} << (start & 63));
    while (true) {
      if (w) return static_cast<int>(i * 64 + std::countr_zero(w));
      if (++i >= w_.size()) return -1;
      w = w_[i];
    }
  }

  VertexSet& operator&=(const VertexSet& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  // Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  VertexSet complement() const {
    VertexSet s(n_);
    for (std::size_t i = 0; i < w_.size(); ++i) s.w_[i] = ~w_[i];
    s.trim();
    return s;
  }

  bool contains_all(const VertexSet& o) const {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (o.w_[i] & ~w_[i]) return false;
    return true;
  }

  bool intersects(const VertexSet& o) const {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  // The k lowest members, as a new set; throws if there are fewer than k.
  VertexSet lowest(int k) const {
    VertexSet s(n_);
    int v = first();
    while (k-- > 0) {
      if (v < 0) throw std::invalid_argument("VertexSet::lowest: not enough members");
      s.set(v);
      v = next_after(v);
    }
    return s;
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for (int v = first(); v >= 0; v = next_after(v)) out.push_back(v);
    return out;
  }

  bool operator==(const VertexSet&) const = default;

  class iterator {
  public:
    iterator(const VertexSet* s, int v) : s_(s), v_(v) {}
    int operator*() const { return v_; }
    iterator& operator++() {
      v_ = s_->next_after(v_);
      return *this;
    }
    bool operator!=(const iterator& o) const { return v_ != o.v_; }

  private:
    const VertexSet* s_;
    int v_;
  };
  iterator begin() const { return iterator(this, first()); }
  iterator end() const { return iterator(this, -1); }

private:
  static std::size_t word_count(int n) { return (static_cast<std::size_t>(n) + 63) / 64; }

  void trim() {
    if (n_ & 63) w_.back() &= (~std::uint64_t{0}) >> (64 - (n_ & 63));
  }

  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace starfactor
