#include "cantor/kucera.hpp"

#include <algorithm>

namespace cantor {

Dyadic rho(const Dyadic& eps, int length) {
  if (!eps.isPositive()) {
    throw Error(ErrorCode::InvalidEpsilon, "epsilon must be positive, got " + eps.str());
  }
  return eps.scaled(-2 * length - 1);
}

PruneResult prune(const ClopenTree& tree, const Dyadic& eps) {
  PruneReport report;
  report.epsilon = eps;
  report.inputMeasure = tree.measure();

  std::vector<Dyadic> thresholds;
  for (int len = 0; len <= tree.depth(); ++len) thresholds.push_back(rho(eps, len));

  ClopenTree current = tree;
  for (bool changed = true; changed;) {
    changed = false;
    for (int len = 0; len <= current.depth(); ++len) {
      for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) {
        const BitString node(v, len);
        const std::uint64_t count = current.countUnder(node);
        if (count == 0) continue;
        const Dyadic mass = cylinderMass(count, current.depth());
        if (mass <= thresholds[static_cast<std::size_t>(len)]) {
          current = current.withoutCylinder(node);
          report.events.push_back({node, mass});
          changed = true;
        }
      }
    }
  }

  std::vector<BitString> cut;
  for (const auto& event : report.events) cut.push_back(event.node);
  std::sort(cut.begin(), cut.end(), lexLess);
  for (const auto& node : cut) {
    if (report.pruned.empty() || !report.pruned.back().isPrefixOf(node)) {
      report.pruned.push_back(node);
    }
  }
  report.outputMeasure = current.measure();
  if (current.isEmpty()) throw EmptyAfterPruning(std::move(report));
  return {std::move(current), std::move(report)};
}

bool satisfiesThreshold(const ClopenTree& tree, const Dyadic& eps) {
  for (int len = 0; len <= tree.depth(); ++len) {
    const Dyadic threshold = rho(eps, len);
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) {
      const std::uint64_t count = tree.countUnder(BitString(v, len));
      if (count != 0 && cylinderMass(count, tree.depth()) <= threshold) return false;
    }
  }
  return true;
}

}  // namespace cantor
