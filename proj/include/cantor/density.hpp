#pragma once

#include "cantor/bit_string.hpp"
#include "cantor/clopen_tree.hpp"
#include "cantor/dyadic.hpp"

namespace cantor {

/// Length-lex least s with mu(T_s) > (1 - eps) * 2^{-|s|}.
/// Throws EmptyTree, InvalidEpsilon.
BitString densityWitnessGreedy(const ClopenTree& tree, const Dyadic& epsilon);

/// Bookkeeping of the k-maximization argument.
struct MaximizationTrace {
  int n = 0;                 // least n with 2^{-n} < eps * delta
  Dyadic::Integer k;         // max over levels of complementMultiple
  int level = 0;             // least level attaining k
  int levelsScanned = 0;     // levels 0..depth; the argument's l is unbounded
  BitString witness;
};

/// min(2^n, floor(|2^l \ T| * 2^{n-l})): the largest j <= 2^n with
/// |2^l \ T| >= j * 2^{l-n}.
Dyadic::Integer complementMultiple(const ClopenTree& tree, int level, int n);

/// Picks n, maximizes k over levels l <= depth, and returns the least node
/// of a maximizing level that clears the density bound.
/// Throws EmptyTree, InvalidEpsilon, MeasureBelowDelta, InvalidArgument (delta <= 0).
MaximizationTrace densityWitnessMaximizationTrace(const ClopenTree& tree, const Dyadic& epsilon,
                                                  const Dyadic& delta);
inline BitString densityWitnessMaximization(const ClopenTree& tree, const Dyadic& epsilon,
                                            const Dyadic& delta) {
  return densityWitnessMaximizationTrace(tree, epsilon, delta).witness;
}

/// The contradiction step: if every node of T at `level` fails the bound,
/// the complement measured at full depth exceeds k * 2^{-n} + eps * delta
/// and its multiple climbs past k. Returns whether both hold; both are
/// guaranteed once mu(T) > delta and 2^{-n} < eps * delta.
/// Throws InvalidArgument if some node at `level` clears the bound.
bool contradictionBoundHolds(const ClopenTree& tree, const Dyadic& epsilon, const Dyadic& delta,
                             int level, int n);

}  // namespace cantor
