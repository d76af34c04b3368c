#include "cantor/density.hpp"

#include <optional>
#include <string>

#include "cantor/error.hpp"

namespace cantor {

namespace {

void checkEpsilon(const Dyadic& epsilon) {
  if (!epsilon.isPositive() || !(epsilon < Dyadic(1))) {
    throw Error(ErrorCode::InvalidEpsilon, "epsilon must lie in (0, 1), got " + epsilon.str());
  }
}

void checkNonEmpty(const ClopenTree& tree) {
  if (tree.isEmpty()) throw Error(ErrorCode::EmptyTree, "tree has measure 0");
}

std::optional<BitString> leastDenseAt(const ClopenTree& tree, int level, const Dyadic& bound) {
  for (const auto& s : tree.level(level)) {
    if (tree.denserThan(s, bound)) return s;
  }
  return std::nullopt;
}

Dyadic complementMass(const ClopenTree& tree, int level) {
  return Dyadic(1) - cylinderMass(tree.levelCount(level), level);
}

}  // namespace

BitString densityWitnessGreedy(const ClopenTree& tree, const Dyadic& epsilon) {
  checkNonEmpty(tree);
  checkEpsilon(epsilon);
  const Dyadic bound = Dyadic(1) - epsilon;
  for (int len = 0; len <= tree.depth(); ++len) {
    if (auto s = leastDenseAt(tree, len, bound)) return *s;
  }
  throw Error(ErrorCode::EmptyTree, "no dense node found");
}

Dyadic::Integer complementMultiple(const ClopenTree& tree, int level, int n) {
  const Dyadic::Integer missing =
      (Dyadic::Integer(1) << level) - Dyadic::Integer(tree.levelCount(level));
  const Dyadic::Integer cap = Dyadic::Integer(1) << n;
  const Dyadic::Integer j = n >= level ? Dyadic::Integer(missing << (n - level))
                                       : Dyadic::Integer(missing >> (level - n));
  return j < cap ? j : cap;
}

MaximizationTrace densityWitnessMaximizationTrace(const ClopenTree& tree, const Dyadic& epsilon,
                                                  const Dyadic& delta) {
  checkNonEmpty(tree);
  checkEpsilon(epsilon);
  if (!delta.isPositive()) throw Error(ErrorCode::InvalidArgument, "delta must be positive");
  if (!(tree.measure() > delta)) {
    throw Error(ErrorCode::MeasureBelowDelta,
                "measure " + tree.measure().str() + " does not exceed delta " + delta.str());
  }

  MaximizationTrace trace;
  const Dyadic product = epsilon * delta;
  while (!(Dyadic::pow2(-trace.n) < product)) ++trace.n;

  trace.levelsScanned = tree.depth() + 1;
  trace.k = -1;
  for (int l = 0; l <= tree.depth(); ++l) {
    Dyadic::Integer j = complementMultiple(tree, l, trace.n);
    if (j > trace.k) {
      trace.k = std::move(j);
      trace.level = l;
    }
  }

  auto witness = leastDenseAt(tree, trace.level, Dyadic(1) - epsilon);
  if (!witness) {
    // Would contradict the maximality of k; see contradictionBoundHolds.
    throw Error(ErrorCode::InvalidArgument,
                "no dense node at maximizing level " + std::to_string(trace.level));
  }
  trace.witness = *witness;
  return trace;
}

bool contradictionBoundHolds(const ClopenTree& tree, const Dyadic& epsilon, const Dyadic& delta,
                             int level, int n) {
  checkEpsilon(epsilon);
  if (leastDenseAt(tree, level, Dyadic(1) - epsilon)) {
    throw Error(ErrorCode::InvalidArgument,
                "level " + std::to_string(level) + " has a node clearing the bound");
  }
  const Dyadic::Integer k = complementMultiple(tree, level, n);
  const Dyadic kMass(k, static_cast<std::uint32_t>(n));
  const bool massBound = complementMass(tree, tree.depth()) > kMass + epsilon * delta;
  const bool multipleGrows = complementMultiple(tree, tree.depth(), n) >= k + 1;
  return massBound && multipleGrows;
}

}  // namespace cantor
