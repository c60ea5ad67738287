#pragma once

// Named tournament constructions. Vertex labelings are fixed so serialized
// fixtures stay stable test assets:
//   t6(): vertices (x1,x2,x3,y1,y2,y3) = (0..5); 3-cycles x1->x2->x3->x1 and
//         y3->y2, y2->y1, y1->y3; the three edges x_i->y_i; all six y_i->x_j
//         with i != j. Out-degrees: every x_i has 2, every y_i has 3.
//   t7(): t6 plus u = 6 with X = {x1,x2,x3} -> u -> Y = {y1,y2,y3}; regular
//         of out-degree 3.
//   t8(): t7 plus v = 7 with X -> v -> Y ∪ {u}; out-degrees 3 on Y ∪ {u}
//         and 4 on X ∪ {v}.
//   qr7(): 7 vertices, i -> j iff (j - i) mod 7 ∈ {1, 2, 4} (quadratic
//          residues); doubly regular, used as a 2-dominated fixture.

#include "starfactor/tournament.hpp"

namespace starfactor {

// i -> j iff i < j; vertex 0 is the source.
inline Tournament transitive_tournament(int n) {
  return Tournament::build(n, [](int, int) { return true; });
}

// 0 -> 1 -> 2 -> 0.
inline Tournament cyclic_triple() {
  return Tournament::build(3, [](int i, int j) { return !(i == 0 && j == 2); });
}

inline Tournament t6() {
  static constexpr const char* rows[6] = {
      "010100",  // x1 beats x2, y1
      "001010",  // x2 beats x3, y2
      "100001",  // x3 beats x1, y3
      "011001",  // y1 beats x2, x3, y3
      "101100",  // y2 beats x1, x3, y1
      "110010",  // y3 beats x1, x2, y2
  };
  return Tournament::build(6, [&](int i, int j) { return rows[i][j] == '1'; });
}

inline Tournament t7() {
  // u loses to X = {0,1,2}, beats Y = {3,4,5}.
  const Tournament base = t6();
  return Tournament::build(7, [&](int i, int j) {
    if (j < 6) return base.beats(i, j);
    return i < 3;  // x_i -> u; u -> y_i
  });
}

inline Tournament t8() {
  const Tournament base = t7();
  return Tournament::build(8, [&](int i, int j) {
    if (j < 7) return base.beats(i, j);
    return i < 3;  // x_i -> v; v -> Y and v -> u
  });
}

// New vertex n with out-degree 0 (everyone beats it).
inline Tournament add_sink(const Tournament& t) {
  int n = t.size();
  return Tournament::build(n + 1, [&](int i, int j) { return j < n ? t.beats(i, j) : true; });
}

inline Tournament qr7() {
  return Tournament::build(7, [](int i, int j) {
    int d = (j - i) % 7;
    return d == 1 || d == 2 || d == 4;
  });
}

}  // namespace starfactor
