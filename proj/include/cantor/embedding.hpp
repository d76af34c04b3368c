#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "cantor/bit_string.hpp"

namespace cantor {

/// A coloring of the nodes of 2^{<=depth} with colors 0..colors-1,
/// stored by heap index (length-lex order).
class Coloring {
 public:
  Coloring(int depth, int colors, std::vector<int> values);
  static Coloring fromFunction(int depth, int colors,
                               const std::function<int(const BitString&)>& color);

  int depth() const noexcept { return depth_; }
  int colors() const noexcept { return colors_; }
  const std::vector<int>& values() const noexcept { return values_; }
  int operator()(const BitString& s) const { return values_[heapIndex(s)]; }

 private:
  int depth_;
  int colors_;
  std::vector<int> values_;
};

/// A map e from 2^{<height} into strings, stored by heap index of the
/// source node. Perfect when e(s0) and e(s1) are incomparable proper
/// extensions of e(s) for every internal s.
class PerfectEmbedding {
 public:
  PerfectEmbedding() = default;
  PerfectEmbedding(int height, std::vector<BitString> images);

  int height() const noexcept { return height_; }
  const std::vector<BitString>& images() const noexcept { return images_; }
  const BitString& operator()(const BitString& source) const { return images_[heapIndex(source)]; }

  /// Images of the length-(height-1) sources, in source order.
  std::vector<BitString> leafImages() const;
  /// (source, image) pairs in source length-lex order.
  std::vector<std::pair<BitString, BitString>> associations() const;

  friend bool operator==(const PerfectEmbedding&, const PerfectEmbedding&) = default;

 private:
  int height_ = 0;
  std::vector<BitString> images_;
};

bool isPerfectEmbedding(const PerfectEmbedding& e);

using NodePredicate = std::function<bool(const BitString&)>;

/// One pass of level-by-level extension: each image takes the length-lex
/// least allowed proper extension as its left child and the least allowed
/// one incomparable with it as its right child. No backtracking.
std::optional<PerfectEmbedding> greedyEmbedding(int depth, const NodePredicate& allowed,
                                                int height);

/// Complete search for a perfect embedding of 2^{<height} into the allowed
/// nodes of 2^{<=depth}. Returns the leftmost one: the root image is the
/// length-lex least feasible node, then each left child is the least
/// feasible extension admitting an incomparable partner, and each right
/// child is the least such partner.
std::optional<PerfectEmbedding> findEmbedding(int depth, const NodePredicate& allowed,
                                              int height);

enum class SearchStrategy { Greedy, Exhaustive };

struct HomogeneousTree {
  int color = 0;
  PerfectEmbedding embedding;
  SearchStrategy strategy = SearchStrategy::Greedy;
};

/// Lowest color i admitting a perfect embedding of 2^{<k} into the nodes of
/// color i, trying the greedy pass before the complete search for each
/// color. Throws NoHomogeneousTree when no color works at this depth.
HomogeneousTree tt1Homog(const Coloring& coloring, int k);

}  // namespace cantor
