#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cantor/clopen_tree.hpp"
#include "cantor/dyadic.hpp"
#include "cantor/finite_tree.hpp"

namespace cantor {

/// Levels g(0) = 0 < g(1) < ... at which extracted trees must split.
struct GrowthSchedule {
  std::vector<int> values;
  /// Set when the next value would have exceeded the depth limit.
  bool truncated = false;

  friend bool operator==(const GrowthSchedule&, const GrowthSchedule&) = default;
};

/// g(0) = 0 and g(n+1) = least l > g(n) with 2^{-l} < r(n), where
/// r(n) = min{rho(eps, s) : |s| <= g(n)}. Produces up to `count` values past
/// g(0), stopping early (truncated) before any value above dmax.
GrowthSchedule growthSchedule(const Dyadic& eps, int count, int dmax);

/// The schedule extractPerfect uses for a tree pruned with `pruneEps`:
/// g(n+1) = least l > g(n) with 2^{-l} <= min{rho(pruneEps, s) : |s| <= g(n)},
/// so every surviving node at level g(n) carries mass above 2^{-g(n+1)} and
/// must split by level g(n+1). For eps a power of two this coincides with
/// growthSchedule(2 * pruneEps, ...). Runs until the next value exceeds dmax.
GrowthSchedule splittingSchedule(const Dyadic& pruneEps, int dmax);

/// delta = mu(S) - eps/4, which lies strictly inside (mu(S) - eps/2, mu(S)).
/// Throws MeasureTooSmall unless mu(S) > eps/4.
Dyadic chooseDelta(const Dyadic& prunedMeasure, const Dyadic& eps);

struct FamilyCheck {
  bool subset = false;     // every node of U is a node of S
  bool density = false;    // |U cap 2^n| > delta 2^n for n < ||U||
  bool splitting = false;  // nodes at g(i) split by g(i+1) whenever g(i+1) < ||U||

  bool holds() const noexcept { return subset && density && splitting; }
  friend bool operator==(const FamilyCheck&, const FamilyCheck&) = default;
};

/// Membership test for the family of finite trees the extraction walks
/// through. "Two distinct extensions" is read as at least two. Only the
/// schedule pairs present in `schedule` are checked.
FamilyCheck checkFamily(const FiniteTree& u, const ClopenTree& s, const Dyadic& delta,
                        const GrowthSchedule& schedule);
inline bool inF(const FiniteTree& u, const ClopenTree& s, const Dyadic& delta,
                const GrowthSchedule& schedule) {
  return checkFamily(u, s, delta, schedule).holds();
}

/// U_n = {s in S : |s| <= g(n+1), mu(S_s) > rho(eps, s)}, keeping a node only
/// when its parent is kept (identical to the plain filter whenever S has the
/// pruning threshold property). Throws ScheduleExceedsDepth.
FiniteTree buildUn(const ClopenTree& s, const Dyadic& eps, const GrowthSchedule& schedule,
                   int n);

struct ExtractionParams {
  Dyadic epsilon;
  Dyadic delta;
  GrowthSchedule schedule;
};

struct ExtractionCertificate {
  ExtractionParams params;
  std::string inputDigest;
  Dyadic inputMeasure;
  Dyadic prunedMeasure;
  /// Index n of the U_n returned.
  int index = 0;
  std::string selectionRule;
  FiniteTree tree;
  std::vector<std::uint64_t> levelCounts;
  FamilyCheck family;
  /// |U cap 2^{||U||-1}| * 2^{-(||U||-1)} >= delta.
  bool finalLevelMass = false;
  /// The final-level clopen tree has measure > mu(input) - eps.
  bool measureGuarantee = false;

  bool valid() const noexcept { return family.holds() && finalLevelMass && measureGuarantee; }
};

struct Extraction {
  FiniteTree tree;
  ClopenTree pruned;
  ExtractionCertificate certificate;
};

inline constexpr const char* kSelectionRule = "leftmost-maximal: full U_n for the largest n fitting the depth";

/// Prunes with eps/2, builds the schedule and delta, and returns the
/// largest U_n that fits the pruned tree's depth, with its certificate.
/// Throws MeasureTooSmall (mu <= eps), EmptyAfterPruning, ScheduleTooCoarse.
Extraction extractPerfect(const ClopenTree& tree, const Dyadic& eps);

/// Recomputes every verification field of `cert` against the pruned tree.
ExtractionCertificate recheck(const ExtractionCertificate& cert, const ClopenTree& pruned);

/// The clopen tree whose leaves are U's deepest level.
ClopenTree finalLevelTree(const FiniteTree& u);

}  // namespace cantor
