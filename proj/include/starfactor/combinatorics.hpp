#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace starfactor::detail {

// C(n, k), capped: returns cap + 1 as soon as the value would exceed cap.
inline long long choose_capped(int n, int k, long long cap) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;  // exact: product of i consecutive ints divides by i!
    if (r > cap) return cap + 1;
  }
  return r;
}

// Visits the k-subsets of {0..n-1} in lexicographic order (as sorted tuples).
// fn receives the current subset and stops the scan by returning true.
template <typename Fn>
bool for_each_combination(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return false;
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i;
  while (true) {
    if (fn(static_cast<const std::vector<int>&>(c))) return true;
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i) --i;
    if (i < 0) return false;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

}  // namespace starfactor::detail
