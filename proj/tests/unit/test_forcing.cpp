#include <doctest.h>

#include "cantor/error.hpp"
#include "cantor/forcing.hpp"
#include "cantor/random.hpp"
#include "../support/generators.hpp"
#include "../support/oracles.hpp"

using namespace cantor;

namespace {

FiniteTree tree(std::initializer_list<const char*> nodes) {
  std::vector<BitString> v;
  for (const char* s : nodes) v.push_back(BitString::parse(s));
  return FiniteTree(v);
}

ClopenTree leaves(int depth, std::initializer_list<const char*> strings) {
  std::vector<BitString> v;
  for (const char* s : strings) v.push_back(BitString::parse(s));
  return ClopenTree::fromLeaves(depth, v);
}

ErrorCode codeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

std::vector<bool> boolsOf(const TargetSequence& x) {
  std::vector<bool> out;
  for (std::size_t i = 0; i < x.size(); ++i) out.push_back(x[i]);
  return out;
}

const FiniteTree kRoot = tree({""});

}  // namespace

TEST_CASE("isCondition examples") {
  const auto full = ClopenTree::full(3);
  CHECK(isCondition(kRoot, full, full));
  CHECK(isCondition(tree({"", "0", "1"}), full, full));
  CHECK_FALSE(isCondition(tree({"", "0"}), full, full));
  CHECK_FALSE(isCondition(kRoot, leaves(2, {"00", "01", "10"}), full));
  CHECK(isCondition(kRoot, leaves(3, {"000", "001", "010", "011", "100", "101", "110"}), full));
}

TEST_CASE("densityExtend examples") {
  CHECK(densityExtend(ClopenTree::full(3), BitString(), Dyadic(3, 2)) == BitString());
  CHECK(densityExtend(leaves(2, {"00", "01", "10"}), BitString(), Dyadic(3, 2)) == BitString::parse("0"));
  CHECK(codeOf([] { densityExtend(leaves(2, {"00"}), BitString::parse("1"), Dyadic(1, 1)); }) ==
        ErrorCode::EmptyCylinder);
  CHECK(codeOf([] { densityExtend(ClopenTree::full(2), BitString(), Dyadic(1)); }) ==
        ErrorCode::InvalidArgument);
}

TEST_CASE("splittingExtend examples") {
  const auto full = ClopenTree::full(3);
  const auto a = splittingExtend({kRoot, full, full});
  CHECK(a.stem == tree({"", "0", "1"}));
  CHECK(a.reservoir == full);

  const auto missing = leaves(3, {"000", "001", "010", "011", "100", "101", "110"});
  const auto b = splittingExtend({kRoot, missing, full});
  CHECK(b.stem == tree({"", "0", "1", "10"}));
  CHECK(b.stem.fullBinaryHeight() == 2);
  CHECK(isCondition(b));

  CHECK(codeOf([&] { splittingExtend({tree({"", "0"}), full, full}); }) == ErrorCode::InvalidCondition);
}

TEST_CASE("eSplitSearch examples") {
  const auto full = ClopenTree::full(3);
  const auto probe = builtinFunctional("probe-zeros");
  const auto zeros = TargetSequence::parse("0000");
  const auto w = eSplitSearch({kRoot, full, full}, *probe, zeros, 3);
  REQUIRE(w);
  CHECK(w->input == 0);
  CHECK(w->base == tree({"", "0", "1"}));
  CHECK(w->extension == w->base);
  CHECK(probe->evaluate(w->extension, w->input) == true);

  CHECK_FALSE(eSplitSearch({kRoot, full, full}, *builtinFunctional("undefined"), zeros, 4));

  // Removing the cylinder 00 leaves measure exactly 3/4, so ({λ}, T) is
  // not a condition to begin with.
  const auto pruned = leaves(3, {"010", "011", "100", "101", "110", "111"});
  CHECK(codeOf([&] { eSplitSearch({kRoot, pruned, full}, *probe, zeros, 4); }) ==
        ErrorCode::InvalidCondition);

  // With only 000 removed, 00 survives and the probe still fires at input 1.
  const auto thinner = leaves(3, {"001", "010", "011", "100", "101", "110", "111"});
  const auto q = eSplitSearch({kRoot, thinner, full}, *probe, TargetSequence::parse("1000"), 4);
  REQUIRE(q);
  CHECK(q->input == 1);
  CHECK(q->base.contains(BitString::parse("00")));
}

TEST_CASE("uClassCheck examples") {
  const auto full = ClopenTree::full(3);
  const auto probe = builtinFunctional("probe-zeros");
  CHECK(uClassCheck(full, kRoot, *builtinFunctional("const1"), 3));
  CHECK_FALSE(uClassCheck(full, kRoot, *probe, 3));
  CHECK(uClassCheck(full, kRoot, *probe, 1));
  const auto d = findDisagreement(full, kRoot, *probe, 3);
  REQUIRE(d);
  CHECK(d->input == 0);
  CHECK(probe->evaluate(d->first, d->input) == false);
  CHECK(probe->evaluate(d->second, d->input) == true);
}

TEST_CASE("forcingStep examples") {
  const auto full = ClopenTree::full(3);
  const auto zeros = TargetSequence::parse("0000");
  const auto ones = TargetSequence::parse("1111");
  CHECK(std::holds_alternative<SplitStep>(
      forcingStep({kRoot, full, full}, *builtinFunctional("probe-zeros"), zeros, 3)));
  const auto c = forcingStep({kRoot, full, full}, *builtinFunctional("const1"), ones, 3);
  REQUIRE(std::holds_alternative<ConstantStep>(c));
  CHECK(std::get<ConstantStep>(c).proofDepth == 3);
  CHECK(std::get<ConstantStep>(c).reservoir == full);
  CHECK(codeOf([&] { forcingStep({tree({"", "0"}), full, full}, *builtinFunctional("const1"), ones, 3); }) ==
        ErrorCode::InvalidCondition);
  CHECK(codeOf([&] {
          forcingStep({kRoot, full, full}, *builtinFunctional("const1"), TargetSequence::parse("1"), 3);
        }) == ErrorCode::InvalidArgument);
}

TEST_CASE("densityExtend is minimal and agrees with the scan") {
  Rng rng(71);
  for (int trial = 0; trial < 300; ++trial) {
    const int depth = 1 + static_cast<int>(rng.below(6));
    const auto t = genUniformTree(depth, rng);
    const auto ref = oracle::fromClopen(t);
    const Dyadic thr = rng.bit() ? Dyadic(3, 2) : Dyadic(1, 1);
    for (const auto& s : oracle::allStrings(depth)) {
      const auto b = BitString::parse(s);
      if (!t.contains(b)) {
        CHECK_THROWS_AS(densityExtend(t, b, thr), Error);
        continue;
      }
      const auto got = densityExtend(t, b, thr);
      CHECK(got.str() == oracle::densityExtend(ref, s, oracle::toRational(thr)));
      CHECK(t.denserThan(got, thr));
    }
  }
}

TEST_CASE("a cylinder above 3/4 density has two positive children") {
  Rng rng(72);
  for (int trial = 0; trial < 300; ++trial) {
    const int depth = 1 + static_cast<int>(rng.below(7));
    const auto t = genUniformTree(depth, rng);
    for (const auto& s : oracle::allStrings(depth - 1)) {
      const auto b = BitString::parse(s);
      if (!t.denserThan(b, Dyadic(3, 2))) continue;
      for (bool bit : {false, true}) {
        CHECK(t.measureUnder(b.child(bit)) >= t.measureUnder(b) - Dyadic(1, b.length() + 1));
      }
      CHECK(t.measureUnder(b.child(false)) > Dyadic(0));
      CHECK(t.measureUnder(b.child(true)) > Dyadic(0));
    }
  }
}

TEST_CASE("endExtensions matches the subset scan") {
  Rng rng(73);
  for (int trial = 0; trial < 60; ++trial) {
    const auto c = testgen::randomCondition(rng, 5, 1);
    const auto s = c.reservoir.intersect(c.ambient);
    const int lmax = 1 + static_cast<int>(rng.below(4));
    const auto got = endExtensions(s, c.stem, lmax);
    const auto want = oracle::endExtensionsWithin(oracle::fromClopen(s), oracle::fromFinite(c.stem), lmax);
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(oracle::fromFinite(got[i]) == want[i]);
  }
}

TEST_CASE("splittingExtend keeps conditions and grows the shape by one") {
  Rng rng(74);
  for (int trial = 0; trial < 200; ++trial) {
    const auto c = testgen::randomCondition(rng, 8, 2);
    const auto n = c.stem.fullBinaryHeight();
    REQUIRE(n);
    const auto next = splittingExtend(c);
    CHECK(isCondition(next));
    CHECK(next.stem.fullBinaryHeight() == *n + 1);
    CHECK(isEndExtension(next.stem, c.stem));
    CHECK(next.reservoir == c.reservoir);
    CHECK(oracle::isCondition(oracle::fromFinite(next.stem), oracle::fromClopen(next.reservoir),
                              oracle::fromClopen(next.ambient)));
  }
}

TEST_CASE("forcingStep agrees with the exhaustive classifier") {
  Rng rng(75);
  for (int trial = 0; trial < 40; ++trial) {
    const auto c = testgen::randomCondition(rng, 5, 1);
    std::vector<bool> bits;
    for (int i = 0; i < 4; ++i) bits.push_back(rng.bit());
    const TargetSequence x(bits);
    const int lmax = 1 + static_cast<int>(rng.below(4));
    for (const auto& id : builtinFunctionalIds()) {
      const auto phi = builtinFunctional(id);
      const auto got = forcingStep(c, *phi, x, lmax);
      const auto want = oracle::classify(oracle::fromFinite(c.stem), oracle::fromClopen(c.reservoir),
                                         oracle::fromClopen(c.ambient), id, boolsOf(x), lmax);
      switch (want.branch) {
        case oracle::Branch::Split: {
          REQUIRE(std::holds_alternative<SplitStep>(got));
          const auto& step = std::get<SplitStep>(got);
          CHECK(step.input == want.input);
          CHECK(oracle::fromFinite(step.extension) == want.extension);
          CHECK(phi->evaluate(step.extension, step.input) == !x[step.input]);
          CHECK(isCondition(step.extension, c.reservoir, c.ambient));
          break;
        }
        case oracle::Branch::Undecided:
          REQUIRE(std::holds_alternative<UndecidedStep>(got));
          CHECK(std::get<UndecidedStep>(got).witness.input == want.input);
          break;
        case oracle::Branch::Constant:
          REQUIRE(std::holds_alternative<ConstantStep>(got));
          CHECK(std::get<ConstantStep>(got).proofDepth == lmax);
          break;
      }
    }
  }
}
