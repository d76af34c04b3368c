#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cantor/bit_string.hpp"
#include "cantor/dyadic.hpp"

namespace cantor {

/// A tree in Cantor space at finite resolution: a depth d and a set of
/// length-d leaves, held as a bitset over 2^d (bit i <=> the leaf whose
/// MSB-first value is i).
///
/// The node set is derived. For |sigma| <= d, sigma is a node iff it is a
/// prefix of some leaf; for |sigma| > d, iff its length-d prefix is a leaf.
/// Hence the tree is prefix-closed with no dead branches and its path set
/// is the union of the leaf cylinders, with measure |leaves| * 2^{-d}.
class ClopenTree {
 public:
  /// The empty tree of depth 0.
  ClopenTree() : words_(1, 0) {}

  static ClopenTree full(int depth);
  static ClopenTree empty(int depth);
  static ClopenTree fromLeaves(int depth, std::span<const BitString> leaves);
  /// Takes ownership of a raw bitset; bits at or beyond 2^depth must be 0.
  static ClopenTree fromWords(int depth, std::vector<std::uint64_t> words);

  int depth() const noexcept { return depth_; }
  std::uint64_t leafCount() const noexcept { return leafCount_; }
  bool isEmpty() const noexcept { return leafCount_ == 0; }
  bool hasLeaf(std::uint64_t index) const noexcept {
    return (words_[index >> 6] >> (index & 63)) & 1u;
  }
  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

  bool contains(const BitString& s) const;

  /// Number of depth-d leaves comparable with s, for |s| <= depth.
  std::uint64_t countUnder(const BitString& s) const;

  Dyadic measure() const { return cylinderMass(leafCount_, depth_); }
  /// measure(restrict(T, s)); defined for every s, including |s| > depth.
  Dyadic measureUnder(const BitString& s) const;
  /// measureUnder(s) > threshold * 2^{-|s|}.
  bool denserThan(const BitString& s, const Dyadic& threshold) const;

  /// T_sigma: the leaves comparable with s. Throws DepthExceeded.
  ClopenTree restrict(const BitString& s) const;
  /// T with every leaf below s removed. Throws DepthExceeded.
  ClopenTree withoutCylinder(const BitString& s) const;

  /// |T cap 2^n|; for n > depth this is leafCount * 2^{n-depth}.
  std::uint64_t levelCount(int n) const;
  /// The strings of T of length n, in increasing order (n <= depth).
  std::vector<BitString> level(int n) const;
  std::vector<BitString> leaves() const { return level(depth_); }

  /// Same path set at a finer resolution.
  ClopenTree refined(int depth) const;
  /// Path-set intersection, at the larger of the two depths.
  ClopenTree intersect(const ClopenTree& other) const;
  /// Path-set inclusion.
  bool isSubsetOf(const ClopenTree& other) const;

  friend bool operator==(const ClopenTree&, const ClopenTree&) = default;

 private:
  ClopenTree(int depth, std::vector<std::uint64_t> words);
  bool rangeNonEmpty(std::uint64_t begin, std::uint64_t end) const;
  std::uint64_t rangeCount(std::uint64_t begin, std::uint64_t end) const;

  int depth_ = 0;
  std::vector<std::uint64_t> words_;
  std::uint64_t leafCount_ = 0;
};

/// Least m <= depth with |T cap 2^m| >= 2^k. Throws NoSuchLevel.
int growthRate(const ClopenTree& tree, int k);

}  // namespace cantor
