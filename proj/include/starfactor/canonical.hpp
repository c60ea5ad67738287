#pragma once

// Isomorphism-class identifiers for small tournaments (n <= 8).
//
// The code of a labeling p is the upper-triangular bit sequence taken in
// placement order: for each position j = 1..n-1 the bits
// beats(p[0],p[j]), ..., beats(p[j-1],p[j]). CanonicalCode is the
// lexicographically least such sequence over all n! labelings, packed
// MSB-first into bytes, so its length depends only on n and two tournaments
// are isomorphic iff their codes are equal. With this bit order the first
// C(j,2) bits of a code are the code of the induced prefix, which is what
// the extend-and-canonicalize enumeration relies on.
//
// The search is a branch-and-bound over partial labelings: candidates for
// the next position are tried in increasing column order and a branch is
// cut as soon as its determined prefix exceeds the incumbent. Tests check
// the result against the unpruned n! minimum.

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "starfactor/tournament.hpp"

namespace starfactor {

inline constexpr int kMaxCanonicalOrder = 8;

struct CanonicalCode {
  int n = 0;
  std::vector<std::uint8_t> bytes;

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;

  std::string hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    std::string s;
    s.reserve(bytes.size() * 2);
    for (auto b : bytes) {
      s += digits[b >> 4];
      s += digits[b & 15];
    }
    return s;
  }
};

namespace detail {

// Row bitmasks over at most 8 columns.
using Board = std::array<std::uint8_t, 8>;

struct Canon {
  std::uint32_t code = 0;                // code bits, first bit most significant
  std::array<std::uint8_t, 8> perm{};    // position -> original vertex
};

inline Board pack_board(const Tournament& t) {
  Board b{};
  for (int i = 0; i < t.size(); ++i)
    for (int j = 0; j < t.size(); ++j)
      if (i != j && t.beats(i, j)) b[i] |= static_cast<std::uint8_t>(1u << j);
  return b;
}

inline Board apply_perm(const Board& b, const std::array<std::uint8_t, 8>& perm, int n) {
  Board out{};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && ((b[perm[i]] >> perm[j]) & 1)) out[i] |= static_cast<std::uint8_t>(1u << j);
  return out;
}

class MinCodeSearch {
public:
  MinCodeSearch(const Board& b, int n) : b_(b), n_(n), total_bits_(n * (n - 1) / 2) {}

  Canon run() {
    dfs(0, 0, 0);
    Canon c;
    c.code = best_;
    c.perm = best_perm_;
    return c;
  }

private:
  void dfs(int depth, std::uint32_t value, int bits) {
    if (depth == n_) {
      if (!found_ || value < best_) {
        best_ = value;
        best_perm_ = perm_;
        found_ = true;
      }
      return;
    }
    // Column bits of each unused vertex against the placed prefix.
    std::array<std::pair<std::uint32_t, int>, 8> cand;
    int cnt = 0;
    for (int v = 0; v < n_; ++v) {
      if (used_ & (1u << v)) continue;
      std::uint32_t col = 0;
      for (int i = 0; i < depth; ++i) col = (col << 1) | ((b_[perm_[i]] >> v) & 1);
      cand[cnt++] = {col, v};
    }
    std::sort(cand.begin(), cand.begin() + cnt);
    for (int c = 0; c < cnt; ++c) {
      std::uint32_t next = (value << depth) | cand[c].first;
      int next_bits = bits + depth;
      if (found_ && next > (best_ >> (total_bits_ - next_bits))) break;  // sorted: rest worse
      int v = cand[c].second;
      perm_[depth] = static_cast<std::uint8_t>(v);
      used_ |= 1u << v;
      dfs(depth + 1, next, next_bits);
      used_ &= ~(1u << v);
    }
  }

  const Board& b_;
  int n_;
  int total_bits_;
  std::uint32_t used_ = 0;
  std::array<std::uint8_t, 8> perm_{};
  bool found_ = false;
  std::uint32_t best_ = 0;
  std::array<std::uint8_t, 8> best_perm_{};
};

inline Canon min_code(const Board& b, int n) { return MinCodeSearch(b, n).run(); }

inline CanonicalCode code_from_bits(std::uint32_t code, int n) {
  CanonicalCode out;
  out.n = n;
  int total = n * (n - 1) / 2;
  out.bytes.assign((total + 7) / 8, 0);
  for (int t = 0; t < total; ++t)
    if ((code >> (total - 1 - t)) & 1) out.bytes[t >> 3] |= static_cast<std::uint8_t>(0x80u >> (t & 7));
  return out;
}

inline void check_order(const Tournament& t) {
  if (t.size() > kMaxCanonicalOrder)
    throw std::invalid_argument("canonical_code: order " + std::to_string(t.size()) +
                                " exceeds the supported bound " +
                                std::to_string(kMaxCanonicalOrder));
}

}  // namespace detail

inline CanonicalCode canonical_code(const Tournament& t) {
  detail::check_order(t);
  auto canon = detail::min_code(detail::pack_board(t), t.size());
  return detail::code_from_bits(canon.code, t.size());
}

// The minimal representative itself: relabeling of t whose identity code is canonical.
inline Tournament canonical_form(const Tournament& t) {
  detail::check_order(t);
  auto canon = detail::min_code(detail::pack_board(t), t.size());
  return Tournament::build(t.size(),
                           [&](int i, int j) { return t.beats(canon.perm[i], canon.perm[j]); });
}

inline bool is_isomorphic(const Tournament& a, const Tournament& b) {
  if (a.size() != b.size()) return false;
  return canonical_code(a) == canonical_code(b);
}

}  // namespace starfactor
