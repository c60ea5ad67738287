#include <cmath>

#include <catch2/catch_amalgamated.hpp>

#include "starfactor/constructions.hpp"
#include "starfactor/random.hpp"
#include "starfactor/star_factor.hpp"
#include "starfactor/transitive.hpp"

using namespace starfactor;

TEST_CASE("greedy chains") {
  SECTION("transitive tournament yields the full order") {
    TransitiveWitness w = greedy_transitive(transitive_tournament(9));
    CHECK(w.size() == 9);
    CHECK(is_transitive_order(transitive_tournament(9), w));
  }
  SECTION("cyclic triple yields length 2") {
    CHECK(greedy_transitive(cyclic_triple()).size() == 2);
  }
  SECTION("random n=128 reaches length 8") {
    for (int s = 0; s < 25; ++s) {
      Tournament t = random_tournament(128, 8800 + s);
      TransitiveWitness w = greedy_transitive(t);
      CHECK(w.size() >= 8);
      CHECK(is_transitive_order(t, w));
    }
  }
  SECTION("the floor(lg n)+1 guarantee on assorted sizes") {
    for (int n : {8, 16, 32, 64}) {
      for (int s = 0; s < 25; ++s) {
        Tournament t = random_tournament(n, 17 * n + s);
        CHECK(static_cast<int>(greedy_transitive(t).size()) >=
              static_cast<int>(std::floor(std::log2(n))) + 1);
      }
    }
  }
}

TEST_CASE("exact search") {
  SECTION("every 4-vertex class contains a transitive triple") {
    for (const Tournament& rep : enumerate_classes(4).representatives) {
      auto w = find_transitive_exact(rep, 3);
      REQUIRE(w);
      CHECK(is_transitive_order(rep, *w));
    }
  }
  SECTION("the cyclic triple has no transitive triple") {
    CHECK(!find_transitive_exact(cyclic_triple(), 3));
  }
  SECTION("t7: a found order-4 witness must verify; order 3 exists") {
    auto w4 = find_transitive_exact(t7(), 4);
    if (w4) CHECK(is_transitive_order(t7(), *w4));
    auto w3 = find_transitive_exact(t7(), 3);
    REQUIRE(w3);
    CHECK(is_transitive_order(t7(), *w3));
  }
  SECTION("budget guard") {
    TransitiveSearchOptions tight;
    tight.node_budget = 2;
    CHECK_THROWS_AS(find_transitive_exact(random_tournament(32, 1), 10, tight), BudgetError);
  }
  SECTION("order bounds") {
    CHECK_THROWS_AS(find_transitive_exact(cyclic_triple(), 4), std::invalid_argument);
    CHECK_THROWS_AS(find_transitive_exact(cyclic_triple(), 0), std::invalid_argument);
  }
}

TEST_CASE("exact theta values within the enumeration range") {
  CHECK(theta_exact(1) == 1);
  CHECK(theta_exact(2) == 2);
  CHECK(theta_exact(3) == 4);
  CHECK_THROWS_AS(theta_exact(5), std::invalid_argument);
}

TEST_CASE("partition required orders") {
  CHECK(partition_required_order(2) == 2);
  CHECK(partition_required_order(3) == 129);
  CHECK(partition_required_order(4) == 8'388'608);
  CHECK_THROWS_AS(partition_required_order(6), std::invalid_argument);
}

TEST_CASE("partition procedure") {
  SECTION("m=2 on two vertices: the single dominated pair") {
    Tournament t = Tournament::build(2, [](int, int) { return false; });  // 1 -> 0
    TransitivePartition p = lonc_partition(t, 2);
    REQUIRE(p.blocks.size() == 1);
    CHECK(p.blocks[0] == TransitiveWitness{1, 0});
    CHECK(verify_transitive_partition(t, p));
  }
  SECTION("m=3 at n=129: 43 verified triples") {
    Tournament t = random_tournament(129, 31);
    TransitivePartition p = lonc_partition(t, 3);
    CHECK(p.blocks.size() == 43);
    CHECK(verify_transitive_partition(t, p));
    // each block converts to a star under its first element
    StarFactor f{3, {}};
    for (const auto& block : p.blocks) {
      Star s{block[0], VertexSet(129)};
      for (std::size_t i = 1; i < block.size(); ++i) s.leaves.set(block[i]);
      f.stars.push_back(std::move(s));
    }
    CHECK(verify_star_factor(t, f).ok);
  }
  SECTION("off-contract sizes are rejected") {
    CHECK_THROWS_AS(lonc_partition(random_tournament(126, 1), 3), std::invalid_argument);
    CHECK_THROWS_AS(lonc_partition(random_tournament(129, 1), 2), std::invalid_argument);
  }
}
