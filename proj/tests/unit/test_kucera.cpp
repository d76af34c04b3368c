#include <doctest.h>

#include "cantor/error.hpp"
#include "cantor/kucera.hpp"
#include "cantor/random.hpp"
#include "../support/oracles.hpp"

using namespace cantor;

TEST_CASE("rho examples") {
  CHECK(rho(Dyadic(1, 2), 0) == Dyadic(1, 3));
  CHECK(rho(Dyadic(1, 2), 1) == Dyadic(1, 5));
  CHECK(rho(Dyadic(1, 1), 3) == Dyadic(1, 8));
  CHECK_THROWS_AS(rho(Dyadic(0), 1), Error);
  CHECK_THROWS_AS(rho(Dyadic(-1, 1), 1), Error);
  // Summed over all strings up to length 20 the thresholds stay below eps.
  Dyadic total;
  for (int len = 0; len <= 20; ++len) total += rho(Dyadic(1, 2), len).scaled(len);
  CHECK(total < Dyadic(1, 2));
  CHECK(Dyadic(1, 2) - total == Dyadic::pow2(-23));
}

TEST_CASE("prune examples") {
  const auto full = ClopenTree::full(4);
  const auto r = prune(full, Dyadic(1, 2));
  CHECK(r.tree == full);
  CHECK(r.report.pruned.empty());

  const auto single = ClopenTree::fromLeaves(3, std::vector<BitString>{BitString::parse("000")});
  try {
    prune(single, Dyadic(1, 1));
    FAIL("expected EmptyAfterPruning");
  } catch (const EmptyAfterPruning& e) {
    CHECK(e.code() == ErrorCode::EmptyAfterPruning);
    CHECK(e.report().inputMeasure == Dyadic(1, 3));
    CHECK(e.report().outputMeasure == Dyadic(0));
  }

  const auto three = ClopenTree::fromLeaves(
      2, std::vector<BitString>{BitString::parse("00"), BitString::parse("01"), BitString::parse("10")});
  CHECK(prune(three, Dyadic(1, 2)).tree == three);
}

TEST_CASE("prune matches the one-cut-at-a-time reference") {
  Rng rng(2024);
  const Dyadic epsilons[] = {Dyadic(1, 1), Dyadic(1, 2), Dyadic(1, 3), Dyadic(3, 4)};
  for (int trial = 0; trial < 150; ++trial) {
    const int depth = static_cast<int>(rng.below(8));
    // Sparse trees so that pruning actually bites.
    auto t = genUniformTree(depth, rng);
    if (rng.bit()) t = t.intersect(genUniformTree(depth, rng));
    const Dyadic eps = epsilons[rng.below(4)];
    const auto ref = oracle::prune(oracle::fromClopen(t), oracle::toRational(eps));
    try {
      const auto r = prune(t, eps);
      REQUIRE(oracle::fromClopen(r.tree).leaves == ref.leaves);
      CHECK(r.tree.measure() > t.measure() - eps);
      CHECK(satisfiesThreshold(r.tree, eps));
      CHECK(oracle::thresholdHolds(ref, oracle::toRational(eps)));
      CHECK(r.tree.isSubsetOf(t));
      CHECK(prune(r.tree, eps).tree == r.tree);
      // Pruned cylinders are maximal and pairwise incomparable.
      for (std::size_t i = 0; i < r.report.pruned.size(); ++i) {
        CHECK_FALSE(r.tree.contains(r.report.pruned[i]));
        for (std::size_t j = i + 1; j < r.report.pruned.size(); ++j) {
          CHECK_FALSE(r.report.pruned[i].comparableWith(r.report.pruned[j]));
        }
      }
      // Removed mass is covered by the thresholds of the cuts.
      Dyadic budget;
      for (const auto& event : r.report.events) {
        CHECK(event.removed <= rho(eps, event.node));
        budget += rho(eps, event.node);
      }
      CHECK(t.measure() - r.tree.measure() <= budget);
      CHECK(budget < eps);
    } catch (const EmptyAfterPruning&) {
      CHECK(ref.leaves.empty());
    }
  }
}

TEST_CASE("satisfiesThreshold agrees with the full scan") {
  Rng rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const auto t = genUniformTree(static_cast<int>(rng.below(7)), rng);
    const Dyadic eps(1, static_cast<std::uint32_t>(rng.below(4)));
    CHECK(satisfiesThreshold(t, eps) ==
          oracle::thresholdHolds(oracle::fromClopen(t), oracle::toRational(eps)));
  }
}
