// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria. The n=8 census is the long pole and runs behind a flag:
//   acceptance             criteria 1-9 (census up to n=7)
//   acceptance --with-n8   additionally the n=8 census and its sweeps
//   acceptance --only-n8   just the n=8 part

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "starfactor/starfactor.hpp"

using namespace starfactor;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int g_failures = 0;

void run_criterion(const std::string& label, const std::function<Outcome()>& body) {
  auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.pass = false;
    out.detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!out.pass) ++g_failures;
  std::printf("%s  %s (%s; %.2fs)\n", out.pass ? "PASS" : "FAIL", label.c_str(),
              out.detail.c_str(), secs);
  std::fflush(stdout);
}

long double expected_exact_rational(int n, int k) {
  using boost::multiprecision::cpp_int;
  cpp_int choose = 1;
  for (int i = 1; i <= k; ++i) choose = choose * (n - k + i) / i;
  cpp_int numer = choose * boost::multiprecision::pow(cpp_int((1 << k) - 1), n - k);
  cpp_int denom = boost::multiprecision::pow(cpp_int(2), k * (n - k));
  return numer.convert_to<long double>() / denom.convert_to<long double>();
}

std::size_t census_raw(int n) {
  std::set<CanonicalCode> codes;
  const int bits = n * (n - 1) / 2;
  for (std::uint32_t word = 0; word < (std::uint32_t{1} << bits); ++word) {
    Tournament t = Tournament::build(n, [&](int i, int j) {
      int idx = 0;
      for (int a = 0; a < i; ++a) idx += n - 1 - a;
      idx += j - i - 1;
      return (word >> idx) & 1;
    });
    codes.insert(canonical_code(t));
  }
  return codes.size();
}

bool contains_disjoint_stars(const Tournament& t, int big, int small) {
  for (int c1 = 0; c1 < t.size(); ++c1)
    for (int c2 = 0; c2 < t.size(); ++c2) {
      if (c1 == c2) continue;
      VertexSet o1 = t.out_neighbors(c1);
      VertexSet o2 = t.out_neighbors(c2);
      o1.reset(c2);
      o2.reset(c1);
      if (o1.count() >= big - 1 && o2.count() >= small - 1 &&
          (o1 | o2).count() >= big + small - 2)
        return true;
    }
  return false;
}

Outcome criterion1() {
  ClassCatalog six = enumerate_classes(6);
  auto has_2s3 = [](const Tournament& t) { return has_star_factor_exact(t, 3).has_value(); };
  std::vector<int> fail6 = sweep(six, has_2s3);
  if (!fail6.empty()) return {false, std::to_string(fail6.size()) + " six-vertex classes lack a 2S3"};

  ClassCatalog three = enumerate_classes(3);
  std::vector<int> fail3 =
      sweep(three, [](const Tournament& t) { return has_star_factor_exact(t, 3).has_value(); });
  if (fail3.size() != 1) return {false, "expected exactly one 3-vertex class without S3"};
  if (!is_isomorphic(three.representatives[fail3[0]], cyclic_triple()))
    return {false, "the failing 3-vertex class is not the cyclic triple"};
  return {true, "56/56 classes have a 2S3; cyclic triple is the unique S3-free class"};
}

Outcome criterion2() {
  if (has_star_factor_exact(t8(), 4)) return {false, "t8 unexpectedly has a 2S4"};
  if (has_star_factor_exact(add_sink(t7()), 4))
    return {false, "t7 plus a sink unexpectedly has a 2S4"};
  if (contains_disjoint_stars(t7(), 4, 3)) return {false, "t7 unexpectedly contains S4+S3"};
  return {true, "no 2S4 in t8 or sink-extended t7; no S4+S3 in t7"};
}

Outcome criterion3() {
  const int kTrials = 1000;
  for (int m = 2; m <= 6; ++m) {
    const int n = static_cast<int>(smallest_guaranteed_order(m));
    for (int trial = 0; trial < kTrials; ++trial) {
      Tournament t = random_tournament(n, 300'000ull + m * 10'000ull + trial);
      FactorOutcome out = find_star_factor_constructive(t, m);  // throws on check failure here
      if (!out.ok())
        return {false, "m=" + std::to_string(m) + " failed at trial " + std::to_string(trial) +
                           " (stage " + out.failed_stage + ")"};
      if (!out.checks.above_bound || !out.checks.all_ok())
        return {false, "m=" + std::to_string(m) + " proof checks violated at trial " +
                           std::to_string(trial)};
      FactorCheck v = verify_star_factor(t, *out.factor);
      if (!v.ok)
        return {false, "m=" + std::to_string(m) + " verifier rejected trial " +
                           std::to_string(trial) + ": " + v.reason};
    }
  }
  return {true, "1000/1000 successes for each m in {2..6} at n in {6,21,44,75,114}, all verified, zero check violations"};
}

Outcome criterion4() {
  for (int n = 2; n <= 6; ++n) {
    ClassCatalog cat = enumerate_classes(n);
    for (int m : {2, 3}) {
      if (n % m != 0) continue;
      for (std::size_t i = 0; i < cat.representatives.size(); ++i) {
        const Tournament& rep = cat.representatives[i];
        bool exact = has_star_factor_exact(rep, m).has_value();
        bool brute = has_star_factor_bruteforce(rep, m);
        if (exact != brute)
          return {false, "oracles disagree on class " + std::to_string(i) + " at n=" +
                             std::to_string(n) + ", m=" + std::to_string(m)};
      }
    }
  }
  for (int s = 0; s < 500; ++s) {
    Tournament t = random_tournament(8, 440'000ull + s);
    if (has_star_factor_exact(t, 4).has_value() != has_star_factor_bruteforce(t, 4))
      return {false, "oracles disagree on random n=8 instance " + std::to_string(s)};
  }
  return {true, "exact and brute-force agree on all small classes and 500 random (n=8, m=4) instances"};
}

Outcome criterion5() {
  for (int n = 1; n <= 30; ++n)
    for (int k = 1; k <= std::min(n, 5); ++k) {
      long double exact = expected_exact_rational(n, k);
      long double got = expected_undominated(n, k);
      if (std::abs(got - exact) > 1e-9L * exact)
        return {false, "expectation off at n=" + std::to_string(n) + ", k=" + std::to_string(k)};
    }
  int t1 = threshold_n(1), t2 = threshold_n(2), t3 = threshold_n(3);
  if (t1 != 3 || t2 != 21 || t3 != 91)
    return {false, "thresholds " + std::to_string(t1) + "," + std::to_string(t2) + "," +
                       std::to_string(t3) + " instead of 3,21,91"};
  return {true, "expectation within 1e-9 of the rational oracle (n<=30, k<=5); thresholds 3/21/91"};
}

Outcome criterion6() {
  const std::uint64_t kBudget = 100'000;
  DominationSearch s = find_k_dominated(2, 22, kBudget, 1);
  if (!s.witness)
    return {false, "no 2-dominated tournament at n=22 within " + std::to_string(kBudget) +
                       " trials"};
  if (!avoidability_check(*s.witness, 2))  // would throw on a counterexample
    return {false, "avoidability check returned false"};
  if (has_star_factor_exact(*s.witness, 11))
    return {false, "the 2-dominated witness has an 11-star-factor"};
  return {true, "witness at seed " + std::to_string(*s.first_success_seed) + " (trial " +
                    std::to_string(*s.first_success_trial) +
                    "); unavoidable by 2 stars and no m=11 factor"};
}

Outcome criterion7_fast() {
  const std::size_t expected[] = {1, 1, 2, 4, 12, 56, 456};
  for (int n = 1; n <= 7; ++n) {
    std::size_t got = enumerate_classes(n).representatives.size();
    if (got != expected[n - 1])
      return {false, "census at n=" + std::to_string(n) + " is " + std::to_string(got) +
                         ", expected " + std::to_string(expected[n - 1])};
  }
  for (int n = 1; n <= 6; ++n)
    if (census_raw(n) != expected[n - 1])
      return {false, "raw-scan census disagrees at n=" + std::to_string(n)};
  return {true, "counts 1,1,2,4,12,56,456 for n=1..7; n<=6 confirmed by the raw scan"};
}

Outcome criterion7_n8() {
  ClassCatalog eight = enumerate_classes(8);
  if (eight.representatives.size() != 6880)
    return {false, "census at n=8 is " + std::to_string(eight.representatives.size()) +
                       ", expected 6880"};
  // order-independence: extending a reversed 7-catalog gives the same codes
  ClassCatalog seven = enumerate_classes(7);
  std::reverse(seven.representatives.begin(), seven.representatives.end());
  ClassCatalog eight_rev = extend_catalog(seven);
  std::set<std::string> a, b;
  for (const auto& c : eight.codes) a.insert(c.hex());
  for (const auto& c : eight_rev.codes) b.insert(c.hex());
  if (a != b) return {false, "n=8 census depends on the parent order"};
  std::vector<int> no_2s4 =
      sweep(eight, [](const Tournament& t) { return has_star_factor_exact(t, 4).has_value(); });
  if (no_2s4.empty()) return {false, "every 8-vertex class has a 2S4"};
  std::set<std::string> failing;
  for (int idx : no_2s4) failing.insert(eight.codes[idx].hex());
  if (!failing.contains(canonical_code(add_sink(t7())).hex()))
    return {false, "sink-extended t7 not among the 2S4-free classes"};
  if (!failing.contains(canonical_code(t8()).hex()))
    return {false, "t8 not among the 2S4-free classes"};
  return {true, "6880 classes; " + std::to_string(no_2s4.size()) +
                    " lack a 2S4, including sink-extended t7 and t8"};
}

Outcome criterion8() {
  const int sizes[] = {8, 16, 32, 64, 128, 256};
  int violations = 0;
  for (int i = 0; i < 10'000; ++i) {
    int n = sizes[i % 6];
    Tournament t = random_tournament(n, 880'000ull + i);
    int bound = static_cast<int>(std::floor(std::log2(static_cast<double>(n)))) + 1;
    TransitiveWitness w = greedy_transitive(t);
    if (static_cast<int>(w.size()) < bound || !is_transitive_order(t, w)) ++violations;
  }
  if (violations > 0)
    return {false, std::to_string(violations) + " greedy-length violations in 10000 samples"};

  for (int seed = 0; seed < 100; ++seed) {
    Tournament t = random_tournament(129, 990'000ull + seed);
    TransitivePartition p = lonc_partition(t, 3);
    if (p.blocks.size() != 43)
      return {false, "partition at seed " + std::to_string(seed) + " has " +
                         std::to_string(p.blocks.size()) + " blocks"};
    if (!verify_transitive_partition(t, p))
      return {false, "invalid partition at seed " + std::to_string(seed)};
    StarFactor f{3, {}};
    for (const auto& block : p.blocks) {
      Star s{block[0], VertexSet(129)};
      for (std::size_t j = 1; j < block.size(); ++j) s.leaves.set(block[j]);
      f.stars.push_back(std::move(s));
    }
    if (!verify_star_factor(t, f).ok)
      return {false, "partition-to-star-factor conversion failed at seed " + std::to_string(seed)};
  }
  return {true, "greedy >= floor(lg n)+1 on 10000 samples (n in {8..256}); 100/100 partitions of 43 triples verified and converted"};
}

Outcome criterion9() {
  // Sampling evidence only. A counterexample would be a publishable finding,
  // not a test failure: it gets serialized and flagged loudly.
  int counterexamples = 0;
  for (int s = 0; s < 10'000; ++s) {
    std::uint64_t seed = 120'000ull + s;
    Tournament t = random_tournament(12, seed);
    if (has_star_factor_exact(t, 4)) continue;
    ++counterexamples;
    std::string path = "f4_counterexample_seed" + std::to_string(seed) + ".txt";
    std::ofstream f(path);
    f << serialize_tournament(t);
    std::printf("FINDING  12-vertex tournament without a 3S4 (seed %llu) written to %s\n",
                static_cast<unsigned long long>(seed), path.c_str());
  }
  if (counterexamples > 0)
    return {true, std::to_string(counterexamples) +
                      " counterexample(s) found and serialized; review before publishing"};
  return {true, "10000/10000 random 12-vertex tournaments admit a 3S4"};
}

}  // namespace

int main(int argc, char** argv) {
  bool with_n8 = false, only_n8 = false;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--with-n8") with_n8 = true;
    else if (arg == "--only-n8") only_n8 = true;
    else {
      std::fprintf(stderr, "usage: acceptance [--with-n8 | --only-n8]\n");
      return 2;
    }
  }

  if (!only_n8) {
    run_criterion("criterion 1: f(3)=6 class sweeps", criterion1);
    run_criterion("criterion 2: f(4)>=12 fixtures", criterion2);
    run_criterion("criterion 3: constructive success above the bound", criterion3);
    run_criterion("criterion 4: oracle equivalence", criterion4);
    run_criterion("criterion 5: expectation machinery", criterion5);
    run_criterion("criterion 6: 2-dominated witness soundness", criterion6);
    run_criterion("criterion 7: census n<=7 with raw-scan confirmation", criterion7_fast);
    run_criterion("criterion 8: transitive machinery", criterion8);
    run_criterion("criterion 9: f(4)=12 sampling evidence", criterion9);
  }
  if (with_n8 || only_n8)
    run_criterion("criterion 7 (n=8): census 6880 and 2S4 sweep", criterion7_n8);

  if (g_failures > 0) std::printf("%d criterion(s) FAILED\n", g_failures);
  return g_failures;
}
