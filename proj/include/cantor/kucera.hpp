#pragma once

#include <vector>

#include "cantor/clopen_tree.hpp"
#include "cantor/dyadic.hpp"
#include "cantor/error.hpp"

namespace cantor {

/// The pruning threshold eps * 2^{-2|s|-1}. Summed over all of 2^{<omega}
/// it totals exactly eps. Throws InvalidEpsilon unless eps > 0.
Dyadic rho(const Dyadic& eps, int length);
inline Dyadic rho(const Dyadic& eps, const BitString& s) { return rho(eps, s.length()); }

struct PruneEvent {
  BitString node;
  Dyadic removed;  // mass still below `node` at the moment it was cut
};

struct PruneReport {
  Dyadic epsilon;
  Dyadic inputMeasure;
  Dyadic outputMeasure;
  /// Maximal removed cylinders, pairwise incomparable, lexicographic order.
  std::vector<BitString> pruned;
  /// Every cut in the order it happened. A later cut may sit above an
  /// earlier one once removals cascade upward.
  std::vector<PruneEvent> events;
};

struct PruneResult {
  ClopenTree tree;
  PruneReport report;
};

class EmptyAfterPruning : public Error {
 public:
  explicit EmptyAfterPruning(PruneReport report)
      : Error(ErrorCode::EmptyAfterPruning,
              "every cylinder fell below its threshold (input measure " +
                  report.inputMeasure.str() + ", eps " + report.epsilon.str() + ")"),
        report_(std::move(report)) {}

  const PruneReport& report() const noexcept { return report_; }

 private:
  PruneReport report_;
};

/// Repeatedly cuts every nonempty cylinder T_s (|s| <= depth) with
/// measure <= rho(eps, s), scanning by length then lexicographically,
/// until nothing changes. Throws EmptyAfterPruning if nothing survives.
PruneResult prune(const ClopenTree& tree, const Dyadic& eps);

/// Exhaustive check that every nonempty cylinder s with |s| <= depth has
/// measure > rho(eps, s).
bool satisfiesThreshold(const ClopenTree& tree, const Dyadic& eps);

}  // namespace cantor
