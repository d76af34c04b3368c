#include <doctest.h>

#include "cantor/adversary.hpp"
#include "cantor/embedding.hpp"
#include "cantor/error.hpp"
#include "cantor/random.hpp"
#include "../support/generators.hpp"
#include "../support/oracles.hpp"

using namespace cantor;

namespace {

const HaltingTable kTable({5, std::nullopt, 3});

oracle::Table plain(const HaltingTable& h) { return h.entries(); }

ErrorCode codeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("modulus examples") {
  CHECK(modulus(kTable, 0) == 0);
  CHECK(modulus(kTable, 1) == 5);
  CHECK(modulus(kTable, 3) == 5);
  CHECK(codeOf([] { modulus(kTable, 4); }) == ErrorCode::OutOfTable);
}

TEST_CASE("inC examples") {
  CHECK(inC(kTable, BitString::parse("000000")));
  CHECK_FALSE(inC(kTable, BitString::parse("110000")));
  CHECK(inC(kTable, BitString::parse("100001")));
}

TEST_CASE("adversarialTree examples") {
  const HaltingTable divergent({std::nullopt, std::nullopt, std::nullopt});
  CHECK(adversarialTree(divergent, 5) == ClopenTree::full(5));
  const auto t = adversarialTree(kTable, 6);
  CHECK(t.contains(BitString::parse("000000")));
  CHECK(t.contains(BitString::parse("100001")));
  CHECK_FALSE(t.contains(BitString::parse("110000")));
  std::uint64_t count = 0;
  for (std::uint64_t v = 0; v < 64; ++v) count += oracle::inC(plain(kTable), oracle::bits(v, 6)) ? 1 : 0;
  CHECK(t.leafCount() == count);
  CHECK(codeOf([] { adversarialTree(kTable, 0); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("decodeHalting examples") {
  const auto s = BitString::parse("100001000001000001");
  CHECK(decodeHalting(s, 3, kTable) == kTable);
  const HaltingTable divergent({std::nullopt, std::nullopt});
  CHECK(decodeHalting(BitString::parse("111"), 2, divergent) == divergent);
  CHECK(codeOf([] { decodeHalting(BitString::parse("100001"), 3, kTable); }) ==
        ErrorCode::InsufficientOnes);
  CHECK(codeOf([] { decodeHalting(BitString::parse("1100001"), 1, kTable); }) == ErrorCode::NotInC);
  CHECK(codeOf([] { decodeHalting(BitString::parse("1111"), 4, kTable); }) == ErrorCode::OutOfTable);
}

TEST_CASE("random tables: tree, membership and decoding agree with the reference") {
  Rng rng(404);
  for (int trial = 0; trial < 40; ++trial) {
    const auto h = testgen::randomTable(rng, 8, 12);
    const int depth = 1 + static_cast<int>(rng.below(12));
    const auto t = adversarialTree(h, depth);
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << depth); ++v) {
      const auto s = oracle::bits(v, depth);
      REQUIRE(t.hasLeaf(v) == oracle::inC(plain(h), s));
      const auto b = BitString(v, depth);
      REQUIRE(inC(h, b) == oracle::inC(plain(h), s));
      if (inC(h, b) && b.ones() > h.size()) {
        CHECK(decodeHalting(b, h.size(), h) == h);
        CHECK(decodeHalting(b, h.size(), h).entries() == oracle::decode(s, h.size(), plain(h)));
      }
    }
    for (int x = 1; x <= h.size(); ++x) CHECK(modulus(h, x) >= modulus(h, x - 1));
    if (depth > 1) CHECK(t.measure() <= adversarialTree(h, depth - 1).measure());
  }
}

TEST_CASE("embedding search into C agrees with brute force") {
  Rng rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const auto h = testgen::randomTable(rng, 3, 4);
    const int depth = 2 + static_cast<int>(rng.below(5));
    const int k = 1 + static_cast<int>(rng.below(3));
    const auto t = adversarialTree(h, depth);
    const auto allowed = [&](const BitString& s) { return t.contains(s); };
    const auto e = findEmbedding(depth, allowed, k);
    const bool expected = oracle::embeddable(
        [&](const std::string& s) { return oracle::inC(plain(h), s); }, depth, k);
    REQUIRE(e.has_value() == expected);
    if (e) {
      CHECK(isPerfectEmbedding(*e));
      for (const auto& img : e->images()) CHECK(allowed(img));
    }
  }
}
