#include "generators.hpp"

#include "cantor/embedding.hpp"
#include "cantor/records.hpp"

namespace testgen {

using cantor::Dyadic;

cantor::Condition randomCondition(cantor::Rng& rng, int maxDepth, int maxSplits) {
  static const Dyadic kTargets[] = {Dyadic(13, 4), Dyadic(7, 3), Dyadic(15, 4), Dyadic(1)};
  for (;;) {
    const int depth = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(maxDepth - 1)));
    const auto reservoir =
        cantor::genRandomPositiveTree({depth, kTargets[rng.below(4)], rng.next()});
    const auto ambient = rng.below(3) == 0
                             ? cantor::ClopenTree::full(depth)
                             : cantor::genRandomPositiveTree({depth, kTargets[rng.below(4)], rng.next()});
    cantor::Condition c{cantor::FiniteTree::fullBinary(1), reservoir, ambient};
    if (!cantor::isCondition(c)) continue;
    const auto splits = rng.below(static_cast<std::uint64_t>(maxSplits) + 1);
    for (std::uint64_t i = 0; i < splits; ++i) c = cantor::splittingExtend(c);
    return c;
  }
}

cantor::HaltingTable randomTable(cantor::Rng& rng, int maxEntries, std::uint64_t maxHalt) {
  const auto size = 1 + rng.below(static_cast<std::uint64_t>(maxEntries));
  std::vector<cantor::HaltingTable::HaltTime> entries;
  for (std::uint64_t e = 0; e < size; ++e) {
    if (rng.below(3) == 0) {
      entries.emplace_back();
    } else {
      entries.emplace_back(rng.below(maxHalt + 1));
    }
  }
  return cantor::HaltingTable(std::move(entries));
}

std::vector<CertificateRequest> sampleRequests(cantor::Rng& rng) {
  using cantor::Json;
  const int depth = 4 + static_cast<int>(rng.below(5));
  const auto tree = cantor::genRandomPositiveTree({depth, Dyadic(13, 4), rng.next()});
  const Json treeJson = cantor::treeToJson(tree);
  const auto nine = cantor::genRandomPositiveTree({9, Dyadic(7, 3), rng.next()});

  const cantor::HaltingTable table({2, std::nullopt, 4});
  const Json tableJson = cantor::tableToJson(table);

  const auto condition = randomCondition(rng, 5, 1);
  const Json conditionJson = cantor::conditionToJson(condition);

  const auto salt = rng.next();
  const auto coloring = cantor::Coloring::fromFunction(5, 2, [&](const cantor::BitString& s) {
    return static_cast<int>((s.length() + salt) % 2);
  });

  std::vector<CertificateRequest> out;
  out.push_back({"gen", Json::object(),
                 {{"depth", depth}, {"target", "3/2^2"}, {"seed", rng.below(1000)}}});
  out.push_back({"prune", {{"tree", treeJson}}, {{"epsilon", "1/2^1"}}});
  out.push_back({"extract", {{"tree", cantor::treeToJson(nine)}}, {{"epsilon", "1/2^1"}}});
  out.push_back({"density", {{"tree", treeJson}},
                 {{"epsilon", "1/2^2"}, {"delta", tree.measure().scaled(-1).str()}}});
  out.push_back({"adversary-encode", {{"table", tableJson}}, {{"depth", 8}}});
  out.push_back({"adversary-decode", {{"table", tableJson}},
                 {{"string", "00101000010001"}, {"entries", 3}}});
  out.push_back({"force-step",
                 {{"condition", conditionJson}, {"functional", {{"builtin", "probe-zeros"}}}},
                 {{"target", "0000"}, {"lmax", 3}}});
  out.push_back({"force-extend", {{"condition", conditionJson}}, Json::object()});
  out.push_back({"tt1", {{"coloring", cantor::coloringToJson(coloring)}}, {{"k", 2}}});
  return out;
}

}  // namespace testgen
