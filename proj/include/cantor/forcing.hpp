#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "cantor/clopen_tree.hpp"
#include "cantor/dyadic.hpp"
#include "cantor/finite_tree.hpp"
#include "cantor/functional.hpp"

namespace cantor {

/// Leaf density every condition maintains: 1 - 2^{-2}.
inline const Dyadic kConditionDensity = Dyadic(3, 2);
/// Density the leaves keep inside a shrunken reservoir: 1 - 2^{-1}.
inline const Dyadic kReservoirDensity = Dyadic(1, 1);

/// Upper bound on the number of finite trees a single search may enumerate.
inline constexpr std::uint64_t kSearchLimit = 4'000'000;

/// A forcing condition (F, T) over the ambient tree T-hat.
struct Condition {
  FiniteTree stem;       // F
  ClopenTree reservoir;  // T
  ClopenTree ambient;    // T-hat
};

struct ForcingParams {
  Dyadic conditionDensity = kConditionDensity;
  Dyadic reservoirDensity = kReservoirDensity;
};

/// Every leaf s of `stem` has mu(tree_s) > density * 2^{-|s|}.
bool leavesDense(const FiniteTree& stem, const ClopenTree& tree, const Dyadic& density);

/// F is shaped like some 2^{<n} and every leaf s of F has
/// mu((T cap T-hat)_s) > density * 2^{-|s|}.
bool isCondition(const FiniteTree& stem, const ClopenTree& reservoir, const ClopenTree& ambient,
                 const Dyadic& density = kConditionDensity);
inline bool isCondition(const Condition& c, const Dyadic& density = kConditionDensity) {
  return isCondition(c.stem, c.reservoir, c.ambient, density);
}

/// Length-lex least t extending s with mu(T_t) > threshold * 2^{-|t|}.
/// Throws EmptyCylinder when mu(T_s) = 0, InvalidArgument when threshold >= 1.
BitString densityExtend(const ClopenTree& tree, const BitString& s, const Dyadic& threshold);

/// Closure of U with each leaf replaced by its densityExtend image.
FiniteTree densityClose(const FiniteTree& u, const ClopenTree& tree, const Dyadic& threshold);

/// Splits every leaf s of F into densityExtend(T cap T-hat, s0) and
/// densityExtend(T cap T-hat, s1). Throws InvalidCondition.
Condition splittingExtend(const Condition& c, const ForcingParams& params = {});

/// Every finite subtree of `tree` that end-extends `stem` and has norm at
/// most maxNorm, in canonical order. Throws SearchTooLarge past kSearchLimit.
std::vector<FiniteTree> endExtensions(const ClopenTree& tree, const FiniteTree& stem, int maxNorm);

struct SplitWitness {
  FiniteTree base;       // D, shaped like some 2^{<l}
  FiniteTree extension;  // E: D with density-extended leaves
  std::uint32_t input = 0;
};

/// Least (D, n) in canonical order with D a 2^{<l}-shaped end-extension of
/// F inside T cap T-hat, ||D|| <= lmax, n < min(|X|, inputs), and both
/// Phi(D; n) and Phi(E; n) converging to a value other than X(n).
std::optional<SplitWitness> eSplitSearch(const Condition& c, const TreeFunctional& phi,
                                         const TargetSequence& target, int lmax,
                                         const ForcingParams& params = {});

struct Disagreement {
  FiniteTree first;   // least end-extension with output 0 at `input`
  FiniteTree second;  // least end-extension with output 1 at `input`
  std::uint32_t input = 0;
};

/// Least input x on which two end-extensions of F inside S with norm
/// <= lmax converge to different values.
std::optional<Disagreement> findDisagreement(const ClopenTree& s, const FiniteTree& stem,
                                             const TreeFunctional& phi, int lmax);

/// True iff no such disagreement exists: S has the defining property of
/// the class of trees on which Phi's value is oracle-independent, certified
/// up to norm lmax.
inline bool uClassCheck(const ClopenTree& s, const FiniteTree& stem, const TreeFunctional& phi,
                        int lmax) {
  return !findDisagreement(s, stem, phi, lmax).has_value();
}

struct SplitStep {
  FiniteTree extension;
  std::uint32_t input = 0;
};

struct ConstantStep {
  ClopenTree reservoir;  // S = trim(T cap T-hat)
  int proofDepth = 0;    // norm bound of the exhaustive check
  FiniteTree extension;  // F with leaves density-extended inside S
};

/// Neither branch is certified within lmax: no 2^{<l}-shaped split exists,
/// yet two unshaped end-extensions still disagree.
struct UndecidedStep {
  Disagreement witness;
};

using StepResult = std::variant<SplitStep, ConstantStep, UndecidedStep>;

/// Tries eSplitSearch; failing that, checks S = trim(T cap T-hat) with
/// uClassCheck. Throws InvalidCondition, and InvalidArgument when the target
/// is shorter than the functional's input range.
StepResult forcingStep(const Condition& c, const TreeFunctional& phi,
                       const TargetSequence& target, int lmax, const ForcingParams& params = {});

}  // namespace cantor
