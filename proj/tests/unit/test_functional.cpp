#include <doctest.h>

#include "cantor/error.hpp"
#include "cantor/functional.hpp"
#include "cantor/random.hpp"
#include "../support/oracles.hpp"

using namespace cantor;

namespace {

FiniteTree randomFinite(Rng& rng, int maxLength) {
  std::vector<BitString> nodes{BitString()};
  const auto full = FiniteTree::fullBinary(maxLength + 1);
  for (const auto& s : full.nodes()) {
    if (s.length() > 0 && rng.bit()) nodes.push_back(s);
  }
  // Keep only nodes whose prefixes survived.
  std::vector<BitString> kept;
  for (const auto& s : nodes) {
    bool ok = true;
    for (int len = 0; len < s.length() && ok; ++len) {
      ok = std::find(nodes.begin(), nodes.end(), s.prefix(len)) != nodes.end();
    }
    if (ok) kept.push_back(s);
  }
  return FiniteTree(kept);
}

}  // namespace

TEST_CASE("registry") {
  const auto ids = builtinFunctionalIds();
  CHECK(ids.size() == 6);
  for (const auto& id : ids) {
    const auto phi = builtinFunctional(id);
    CHECK(phi->id() == id);
    CHECK(functionalFromJson(phi->toJson())->id() == id);
  }
  CHECK_THROWS_AS(builtinFunctional("nope"), Error);
}

TEST_CASE("built-ins match their definitions") {
  Rng rng(55);
  for (int trial = 0; trial < 300; ++trial) {
    const auto e = randomFinite(rng, static_cast<int>(rng.below(5)));
    const auto nodes = oracle::fromFinite(e);
    for (const auto& id : builtinFunctionalIds()) {
      const auto phi = builtinFunctional(id);
      for (std::uint32_t x = 0; x < 6; ++x) CHECK(phi->evaluate(e, x) == oracle::evaluate(id, nodes, x));
    }
  }
}

TEST_CASE("use discipline: trees agreeing below the use give the same output") {
  Rng rng(56);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = randomFinite(rng, 4);
    const auto b = randomFinite(rng, 4);
    for (const auto& id : builtinFunctionalIds()) {
      const auto phi = builtinFunctional(id);
      for (std::uint32_t x = 0; x < phi->inputs(); ++x) {
        const int u = phi->use(x);
        // Graft b's nodes of length >= u onto a's nodes below u.
        std::vector<BitString> mixed;
        for (const auto& s : a.nodes()) {
          if (s.length() < u) mixed.push_back(s);
        }
        for (const auto& s : b.nodes()) {
          if (s.length() >= u) mixed.push_back(s);
        }
        const auto c = FiniteTree::closureOf(mixed);
        bool agree = true;
        const auto below = FiniteTree::fullBinary(u);
        for (const auto& s : below.nodes()) agree = agree && (a.contains(s) == c.contains(s));
        if (agree && (a.norm() >= u) == (c.norm() >= u)) CHECK(phi->evaluate(a, x) == phi->evaluate(c, x));
      }
    }
  }
}

TEST_CASE("oracle queries past the use are refused") {
  const auto t = FiniteTree::fullBinary(3);
  const Oracle o(t, 2);
  CHECK(o(BitString::parse("1")));
  CHECK_THROWS_AS(o(BitString::parse("00")), Error);
}

TEST_CASE("decision tables") {
  const auto record = parseJson(R"({"format":"decision-table/v1","id":"either-child",
      "queries":["0","1"],"outputs":["0111","u001"]})");
  const auto phi = functionalFromJson(record);
  CHECK(phi->id() == "either-child");
  CHECK(phi->inputs() == 2);
  CHECK(phi->use(0) == 2);
  const FiniteTree root(std::vector<BitString>{BitString()});
  const auto left = FiniteTree::closureOf(std::vector<BitString>{BitString::parse("0")});
  const auto both = FiniteTree::fullBinary(2);
  CHECK_FALSE(phi->evaluate(root, 0));  // norm 1 < use 2
  CHECK(phi->evaluate(left, 0) == true);
  CHECK(phi->evaluate(left, 1) == false);
  CHECK(phi->evaluate(both, 1) == true);
  CHECK(phi->evaluate(FiniteTree::closureOf(std::vector<BitString>{BitString::parse("00")}), 1) ==
        false);
  CHECK(functionalFromJson(phi->toJson())->toJson() == phi->toJson());
  CHECK_THROWS_AS(functionalFromJson(parseJson(R"({"format":"decision-table/v1","id":"x",
      "queries":["0"],"outputs":["01u"]})")),
                  Error);
}

TEST_CASE("target sequences") {
  const auto x = TargetSequence::parse("0110");
  CHECK(x.size() == 4);
  CHECK(x[1]);
  CHECK_FALSE(x[3]);
  CHECK(x.str() == "0110");
  CHECK_THROWS_AS(TargetSequence::parse("01a"), Error);
}
