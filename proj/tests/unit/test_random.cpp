#include <doctest.h>

#include "cantor/error.hpp"
#include "cantor/random.hpp"

using namespace cantor;

TEST_CASE("generator examples") {
  const GenSpec spec{10, Dyadic(3, 2), 42};
  const auto a = genRandomPositiveTree(spec);
  CHECK(a == genRandomPositiveTree(spec));
  CHECK(a.measure() >= Dyadic(3, 2));
  CHECK(a.measure() - Dyadic::pow2(-10) < Dyadic(3, 2));
  CHECK(genRandomPositiveTree({7, Dyadic(1), 5}) == ClopenTree::full(7));
  CHECK(genRandomPositiveTree({0, Dyadic(1, 4), 5}) == ClopenTree::full(0));
  CHECK_THROWS_AS(genRandomPositiveTree({4, Dyadic(0), 1}), Error);
  CHECK_THROWS_AS(genRandomPositiveTree({4, Dyadic(3, 1), 1}), Error);
  CHECK_THROWS_AS(genRandomPositiveTree({-1, Dyadic(1), 1}), Error);
}

TEST_CASE("generator keeps the fewest leaves reaching the target") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed);
    const int depth = static_cast<int>(rng.below(13));
    const Dyadic target(static_cast<std::int64_t>(1 + rng.below(64)), 6);
    const auto t = genRandomPositiveTree({depth, target, seed});
    CHECK(t.measure() >= target);
    CHECK(t.measure() - Dyadic::pow2(-depth) < target);
  }
}

TEST_CASE("different seeds differ") {
  CHECK(genRandomPositiveTree({10, Dyadic(1, 1), 1}) != genRandomPositiveTree({10, Dyadic(1, 1), 2}));
}

TEST_CASE("below stays in range and covers it") {
  Rng rng(3);
  std::vector<int> seen(7);
  for (int i = 0; i < 7000; ++i) {
    const auto v = rng.below(7);
    REQUIRE(v < 7);
    ++seen[v];
  }
  for (int c : seen) CHECK(c > 800);
}
