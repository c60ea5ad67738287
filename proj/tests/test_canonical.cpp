#include <algorithm>
#include <array>
#include <numeric>

#include <catch2/catch_amalgamated.hpp>

#include "starfactor/canonical.hpp"
#include "starfactor/constructions.hpp"
#include "starfactor/random.hpp"

using namespace starfactor;

namespace {

// Unpruned oracle: minimum code over all n! labelings, same bit order as the
// library (per placed position j, the bits against positions 0..j-1), packed
// the same way. Kept independent of the pruned search it checks.
CanonicalCode min_code_bruteforce(const Tournament& t) {
  const int n = t.size();
  const int total = n * (n - 1) / 2;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint32_t best = ~std::uint32_t{0};
  do {
    std::uint32_t code = 0;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) code = (code << 1) | (t.beats(perm[i], perm[j]) ? 1 : 0);
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  CanonicalCode out;
  out.n = n;
  out.bytes.assign((total + 7) / 8, 0);
  for (int b = 0; b < total; ++b)
    if ((best >> (total - 1 - b)) & 1) out.bytes[b >> 3] |= static_cast<std::uint8_t>(0x80u >> (b & 7));
  return out;
}

Tournament relabel(const Tournament& t, const std::vector<int>& perm) {
  return Tournament::build(t.size(), [&](int i, int j) { return t.beats(perm[i], perm[j]); });
}

}  // namespace

TEST_CASE("pruned canonical code equals the unpruned minimum for n <= 5") {
  // all 64 four-vertex tournaments, exhaustively
  for (std::uint32_t word = 0; word < 64; ++word) {
    Tournament t = Tournament::build(4, [&](int i, int j) {
      int idx = i == 0 ? j - 1 : (i == 1 ? j + 1 : 5);
      return (word >> idx) & 1;
    });
    CHECK(canonical_code(t) == min_code_bruteforce(t));
  }
  for (int n = 2; n <= 5; ++n)
    for (int s = 0; s < 40; ++s) {
      Tournament t = random_tournament(n, 31 * n + s);
      CHECK(canonical_code(t) == min_code_bruteforce(t));
    }
  // plus fixtures with real symmetry, qr7 being the worst case at n=7
  CHECK(canonical_code(cyclic_triple()) == min_code_bruteforce(cyclic_triple()));
  CHECK(canonical_code(transitive_tournament(5)) == min_code_bruteforce(transitive_tournament(5)));
  CHECK(canonical_code(qr7()) == min_code_bruteforce(qr7()));
  CHECK(canonical_code(t7()) == min_code_bruteforce(t7()));
}

TEST_CASE("codes are class functions: 500 relabelings agree") {
  std::mt19937_64 gen(7);
  for (int n = 2; n <= 7; ++n) {
    Tournament t = random_tournament(n, 424242 + n);
    CanonicalCode code = canonical_code(t);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int trial = 0; trial < 500; ++trial) {
      std::shuffle(perm.begin(), perm.end(), gen);
      CHECK(canonical_code(relabel(t, perm)) == code);
    }
  }
}

TEST_CASE("small fixtures") {
  SECTION("relabelings of the cyclic triple agree") {
    CHECK(canonical_code(cyclic_triple()) == canonical_code(relabel(cyclic_triple(), {2, 0, 1})));
  }
  SECTION("cyclic and transitive triples differ") {
    CHECK(canonical_code(cyclic_triple()) != canonical_code(transitive_tournament(3)));
  }
  SECTION("t7 under the swap (0 6)(1 5)") {
    CHECK(canonical_code(t7()) == canonical_code(relabel(t7(), {6, 5, 2, 3, 4, 1, 0})));
  }
  SECTION("orders above the bound are rejected") {
    CHECK_THROWS_AS(canonical_code(random_tournament(9, 1)), std::invalid_argument);
  }
}

TEST_CASE("canonical form is a relabeling with the canonical identity code") {
  for (int s = 0; s < 20; ++s) {
    Tournament t = random_tournament(6, 900 + s);
    Tournament canon = canonical_form(t);
    canon.validate();
    CHECK(is_isomorphic(t, canon));
    CHECK(canonical_code(canon) == canonical_code(t));
    // identity labeling of the canonical form realizes the code
    const int n = canon.size();
    std::uint32_t ident = 0;
    const int total = n * (n - 1) / 2;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) ident = (ident << 1) | (canon.beats(i, j) ? 1 : 0);
    CanonicalCode expect;
    expect.n = n;
    expect.bytes.assign((total + 7) / 8, 0);
    for (int b = 0; b < total; ++b)
      if ((ident >> (total - 1 - b)) & 1)
        expect.bytes[b >> 3] |= static_cast<std::uint8_t>(0x80u >> (b & 7));
    CHECK(expect == canonical_code(t));
  }
}

TEST_CASE("isomorphism equality") {
  CHECK(is_isomorphic(qr7(), qr7()));
  CHECK(!is_isomorphic(qr7(), transitive_tournament(7)));
  CHECK(!is_isomorphic(cyclic_triple(), transitive_tournament(4)));
}
