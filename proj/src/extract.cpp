#include "cantor/extract.hpp"

#include "cantor/digest.hpp"
#include "cantor/error.hpp"
#include "cantor/kucera.hpp"
#include "cantor/serialize.hpp"

namespace cantor {

GrowthSchedule growthSchedule(const Dyadic& eps, int count, int dmax) {
  if (count < 1) throw Error(ErrorCode::InvalidArgument, "schedule count must be >= 1");
  GrowthSchedule out;
  out.values.push_back(0);
  for (int n = 0; n < count; ++n) {
    const int k = out.values.back();
    const Dyadic r = rho(eps, k);
    int l = k + 1;
    while (!(Dyadic::pow2(-l) < r)) ++l;
    if (l > dmax) {
      out.truncated = true;
      break;
    }
    out.values.push_back(l);
  }
  return out;
}

GrowthSchedule splittingSchedule(const Dyadic& pruneEps, int dmax) {
  GrowthSchedule out;
  out.values.push_back(0);
  for (;;) {
    const int k = out.values.back();
    const Dyadic r = rho(pruneEps, k);
    int l = k + 1;
    while (!(Dyadic::pow2(-l) <= r)) ++l;
    if (l > dmax) {
      out.truncated = true;
      return out;
    }
    out.values.push_back(l);
  }
}

Dyadic chooseDelta(const Dyadic& prunedMeasure, const Dyadic& eps) {
  if (!eps.isPositive()) throw Error(ErrorCode::InvalidEpsilon, "epsilon must be positive");
  const Dyadic quarter = eps.scaled(-2);
  if (prunedMeasure <= quarter) {
    throw Error(ErrorCode::MeasureTooSmall,
                "measure " + prunedMeasure.str() + " <= eps/4 = " + quarter.str());
  }
  return prunedMeasure - quarter;
}

FamilyCheck checkFamily(const FiniteTree& u, const ClopenTree& s, const Dyadic& delta,
                        const GrowthSchedule& schedule) {
  FamilyCheck out;
  out.subset = true;
  for (const auto& node : u.nodes()) {
    if (!s.contains(node)) {
      out.subset = false;
      break;
    }
  }

  const int norm = u.norm();
  out.density = true;
  for (int n = 0; n < norm; ++n) {
    if (!(cylinderMass(u.levelCount(n), n) > delta)) {
      out.density = false;
      break;
    }
  }

  out.splitting = true;
  const auto& g = schedule.values;
  for (std::size_t i = 0; i + 1 < g.size() && out.splitting; ++i) {
    if (!(g[i + 1] < norm)) continue;
    const auto below = u.level(g[i + 1]);
    for (const auto& node : u.level(g[i])) {
      int extensions = 0;
      for (const auto& candidate : below) {
        if (node.isPrefixOf(candidate) && ++extensions >= 2) break;
      }
      if (extensions < 2) {
        out.splitting = false;
        break;
      }
    }
  }
  return out;
}

FiniteTree buildUn(const ClopenTree& s, const Dyadic& eps, const GrowthSchedule& schedule,
                   int n) {
  const auto& g = schedule.values;
  if (n < 0 || static_cast<std::size_t>(n) + 1 >= g.size()) {
    throw Error(ErrorCode::ScheduleExceedsDepth,
                "schedule has no value g(" + std::to_string(n + 1) + ")");
  }
  const int top = g[static_cast<std::size_t>(n) + 1];
  if (top > s.depth()) {
    throw Error(ErrorCode::ScheduleExceedsDepth,
                "g(" + std::to_string(n + 1) + ") = " + std::to_string(top) +
                    " exceeds depth " + std::to_string(s.depth()));
  }
  std::vector<BitString> nodes;
  std::vector<BitString> frontier{BitString{}};
  for (int len = 0; len <= top && !frontier.empty(); ++len) {
    const Dyadic threshold = rho(eps, len);
    std::vector<BitString> next;
    for (const auto& node : frontier) {
      const std::uint64_t count = s.countUnder(node);
      if (count == 0 || !(cylinderMass(count, s.depth()) > threshold)) continue;
      nodes.push_back(node);
      if (len < top) {
        next.push_back(node.child(false));
        next.push_back(node.child(true));
      }
    }
    frontier = std::move(next);
  }
  return FiniteTree(std::move(nodes));
}

ClopenTree finalLevelTree(const FiniteTree& u) {
  if (u.empty()) return ClopenTree();
  const int depth = u.norm() - 1;
  const auto leaves = u.level(depth);
  return ClopenTree::fromLeaves(depth, leaves);
}

ExtractionCertificate recheck(const ExtractionCertificate& cert, const ClopenTree& pruned) {
  ExtractionCertificate out = cert;
  out.levelCounts.clear();
  for (int n = 0; n < cert.tree.norm(); ++n) out.levelCounts.push_back(cert.tree.levelCount(n));
  out.family = checkFamily(cert.tree, pruned, cert.params.delta, cert.params.schedule);
  const Dyadic finalMass = finalLevelTree(cert.tree).measure();
  out.finalLevelMass = !cert.tree.empty() && finalMass >= cert.params.delta;
  out.measureGuarantee = finalMass > cert.inputMeasure - cert.params.epsilon;
  return out;
}

Extraction extractPerfect(const ClopenTree& tree, const Dyadic& eps) {
  if (!eps.isPositive()) throw Error(ErrorCode::InvalidEpsilon, "epsilon must be positive");
  if (!(tree.measure() > eps)) {
    throw Error(ErrorCode::MeasureTooSmall,
                "input measure " + tree.measure().str() + " does not exceed eps " + eps.str());
  }
  const Dyadic pruneEps = eps.scaled(-1);
  PruneResult pruned = prune(tree, pruneEps);
  const ClopenTree& s = pruned.tree;

  GrowthSchedule schedule = splittingSchedule(pruneEps, s.depth());
  if (schedule.values.size() < 2) {
    throw Error(ErrorCode::ScheduleTooCoarse,
                "first splitting level exceeds depth " + std::to_string(s.depth()));
  }
  const Dyadic delta = chooseDelta(s.measure(), eps);
  const int n = static_cast<int>(schedule.values.size()) - 2;

  ExtractionCertificate cert;
  cert.params = {eps, delta, schedule};
  cert.inputDigest = sha256Hex(serializeTree(tree));
  cert.inputMeasure = tree.measure();
  cert.prunedMeasure = s.measure();
  cert.index = n;
  cert.selectionRule = kSelectionRule;
  cert.tree = buildUn(s, pruneEps, schedule, n);
  cert = recheck(cert, s);

  FiniteTree u = cert.tree;
  return {std::move(u), std::move(pruned.tree), std::move(cert)};
}

}  // namespace cantor
