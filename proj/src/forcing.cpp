#include "cantor/forcing.hpp"

#include <algorithm>
#include <string>

#include "cantor/error.hpp"

namespace cantor {

bool leavesDense(const FiniteTree& stem, const ClopenTree& tree, const Dyadic& density) {
  const auto leaves = stem.leaves();
  return std::all_of(leaves.begin(), leaves.end(),
                     [&](const BitString& s) { return tree.denserThan(s, density); });
}

bool isCondition(const FiniteTree& stem, const ClopenTree& reservoir, const ClopenTree& ambient,
                 const Dyadic& density) {
  return stem.fullBinaryHeight() && leavesDense(stem, reservoir.intersect(ambient), density);
}

BitString densityExtend(const ClopenTree& tree, const BitString& s, const Dyadic& threshold) {
  if (!(threshold < Dyadic(1))) {
    throw Error(ErrorCode::InvalidArgument, "density threshold must be below 1");
  }
  if (!tree.contains(s)) {
    throw Error(ErrorCode::EmptyCylinder, "cylinder '" + s.display() + "' has measure 0");
  }
  const int deepest = std::max(s.length(), tree.depth());
  for (int len = s.length(); len <= deepest; ++len) {
    const int shift = len - s.length();
    for (std::uint64_t v = s.value() << shift; v < (s.value() + 1) << shift; ++v) {
      const BitString candidate(v, len);
      if (tree.denserThan(candidate, threshold)) return candidate;
    }
  }
  // Unreachable: a leaf cylinder has relative density 1.
  throw Error(ErrorCode::EmptyCylinder, "no dense extension of '" + s.display() + "'");
}

FiniteTree densityClose(const FiniteTree& u, const ClopenTree& tree, const Dyadic& threshold) {
  std::vector<BitString> strings = u.nodes();
  for (const auto& leaf : u.leaves()) strings.push_back(densityExtend(tree, leaf, threshold));
  return FiniteTree::closureOf(strings);
}

Condition splittingExtend(const Condition& c, const ForcingParams& params) {
  if (!isCondition(c, params.conditionDensity)) {
    throw Error(ErrorCode::InvalidCondition, "splittingExtend needs a valid condition");
  }
  const ClopenTree both = c.reservoir.intersect(c.ambient);
  std::vector<BitString> strings = c.stem.nodes();
  for (const auto& leaf : c.stem.leaves()) {
    strings.push_back(densityExtend(both, leaf.child(false), params.conditionDensity));
    strings.push_back(densityExtend(both, leaf.child(true), params.conditionDensity));
  }
  return {FiniteTree::closureOf(strings), c.reservoir, c.ambient};
}

namespace {

std::uint64_t saturatingMul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSearchLimit / a) return kSearchLimit + 1;
  return a * b;
}

/// Number of subtrees rooted at `node` inside `tree` with lengths <= maxLength.
std::uint64_t countRooted(const ClopenTree& tree, const BitString& node, int maxLength) {
  if (node.length() >= maxLength) return 1;
  std::uint64_t total = 1;
  for (bool bit : {false, true}) {
    const BitString next = node.child(bit);
    const std::uint64_t branch = tree.contains(next) ? countRooted(tree, next, maxLength) : 0;
    total = saturatingMul(total, branch + 1);
  }
  return total;
}

std::vector<std::vector<BitString>> rootedSubtrees(const ClopenTree& tree, const BitString& node,
                                                   int maxLength) {
  if (node.length() >= maxLength) return {{node}};
  std::vector<std::vector<BitString>> branches[2];
  for (bool bit : {false, true}) {
    auto& options = branches[bit ? 1 : 0];
    options.emplace_back();
    const BitString next = node.child(bit);
    if (tree.contains(next)) {
      for (auto& sub : rootedSubtrees(tree, next, maxLength)) options.push_back(std::move(sub));
    }
  }
  std::vector<std::vector<BitString>> out;
  for (const auto& left : branches[0]) {
    for (const auto& right : branches[1]) {
      std::vector<BitString> nodes{node};
      nodes.insert(nodes.end(), left.begin(), left.end());
      nodes.insert(nodes.end(), right.begin(), right.end());
      out.push_back(std::move(nodes));
    }
  }
  return out;
}

}  // namespace

std::vector<FiniteTree> endExtensions(const ClopenTree& tree, const FiniteTree& stem,
                                      int maxNorm) {
  if (stem.empty() || stem.norm() > maxNorm) return {};
  for (const auto& node : stem.nodes()) {
    if (!tree.contains(node)) return {};
  }
  const auto leaves = stem.leaves();
  const int maxLength = maxNorm - 1;

  std::uint64_t total = 1;
  for (const auto& leaf : leaves) total = saturatingMul(total, countRooted(tree, leaf, maxLength));
  if (total > kSearchLimit) {
    throw Error(ErrorCode::SearchTooLarge,
                "more than " + std::to_string(kSearchLimit) + " end-extensions up to norm " +
                    std::to_string(maxNorm));
  }

  std::vector<std::vector<BitString>> partial{stem.nodes()};
  for (const auto& leaf : leaves) {
    const auto options = rootedSubtrees(tree, leaf, maxLength);
    std::vector<std::vector<BitString>> next;
    next.reserve(partial.size() * options.size());
    for (const auto& base : partial) {
      for (const auto& option : options) {
        std::vector<BitString> nodes = base;
        // option[0] is the leaf itself, already in the stem.
        nodes.insert(nodes.end(), option.begin() + 1, option.end());
        next.push_back(std::move(nodes));
      }
    }
    partial = std::move(next);
  }

  std::vector<FiniteTree> out;
  out.reserve(partial.size());
  for (auto& nodes : partial) out.emplace_back(std::move(nodes));
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<SplitWitness> eSplitSearch(const Condition& c, const TreeFunctional& phi,
                                         const TargetSequence& target, int lmax,
                                         const ForcingParams& params) {
  if (!isCondition(c, params.conditionDensity)) {
    throw Error(ErrorCode::InvalidCondition, "eSplitSearch needs a valid condition");
  }
  const ClopenTree s = c.reservoir.intersect(c.ambient);
  const auto bound = static_cast<std::uint32_t>(
      std::min<std::size_t>(target.size(), phi.inputs()));
  for (const auto& d : endExtensions(s, c.stem, lmax)) {
    if (!d.fullBinaryHeight()) continue;
    for (std::uint32_t n = 0; n < bound; ++n) {
      const auto value = phi.evaluate(d, n);
      if (!value || *value == target[n]) continue;
      FiniteTree e = densityClose(d, s, params.conditionDensity);
      const auto extended = phi.evaluate(e, n);
      if (extended && *extended != target[n]) return SplitWitness{d, std::move(e), n};
    }
  }
  return std::nullopt;
}

std::optional<Disagreement> findDisagreement(const ClopenTree& s, const FiniteTree& stem,
                                             const TreeFunctional& phi, int lmax) {
  const auto candidates = endExtensions(s, stem, lmax);
  for (std::uint32_t x = 0; x < phi.inputs(); ++x) {
    const FiniteTree* zero = nullptr;
    const FiniteTree* one = nullptr;
    for (const auto& e : candidates) {
      const auto value = phi.evaluate(e, x);
      if (!value) continue;
      if (*value && !one) one = &e;
      if (!*value && !zero) zero = &e;
      if (zero && one) return Disagreement{*zero, *one, x};
    }
  }
  return std::nullopt;
}

StepResult forcingStep(const Condition& c, const TreeFunctional& phi,
                       const TargetSequence& target, int lmax, const ForcingParams& params) {
  if (!isCondition(c, params.conditionDensity)) {
    throw Error(ErrorCode::InvalidCondition, "forcingStep needs a valid condition");
  }
  if (target.size() < phi.inputs()) {
    throw Error(ErrorCode::InvalidArgument,
                "target has " + std::to_string(target.size()) + " bits but '" + phi.id() +
                    "' takes " + std::to_string(phi.inputs()) + " inputs");
  }
  if (auto split = eSplitSearch(c, phi, target, lmax, params)) {
    return SplitStep{std::move(split->extension), split->input};
  }
  ClopenTree s = c.reservoir.intersect(c.ambient);
  if (auto witness = findDisagreement(s, c.stem, phi, lmax)) {
    return UndecidedStep{std::move(*witness)};
  }
  // The constant branch only needs the weaker reservoir bound on the leaves of F.
  if (!leavesDense(c.stem, s, params.reservoirDensity)) {
    throw Error(ErrorCode::InvalidCondition, "stem leaves too sparse in the reservoir");
  }
  FiniteTree extension = densityClose(c.stem, s, params.conditionDensity);
  return ConstantStep{std::move(s), lmax, std::move(extension)};
}

}  // namespace cantor
