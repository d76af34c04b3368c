#pragma once

#include <compare>
#include <optional>
#include <span>
#include <vector>

#include "cantor/bit_string.hpp"
#include "cantor/clopen_tree.hpp"

namespace cantor {

/// An explicit finite prefix-closed set of strings, kept sorted in
/// length-lex order. Norm is max{|s| + 1 : s in U}, 0 for the empty tree.
class FiniteTree {
 public:
  FiniteTree() = default;
  /// Throws NotPrefixClosed unless every prefix of every node is present.
  explicit FiniteTree(std::vector<BitString> nodes);

  /// Downward closure of an arbitrary string set.
  static FiniteTree closureOf(std::span<const BitString> strings);
  /// 2^{<n}: all strings of length < n.
  static FiniteTree fullBinary(int n);

  const std::vector<BitString>& nodes() const noexcept { return nodes_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  bool empty() const noexcept { return nodes_.empty(); }
  int norm() const noexcept { return nodes_.empty() ? 0 : nodes_.back().length() + 1; }

  bool contains(const BitString& s) const;
  /// Nodes with no child in the tree, in length-lex order.
  std::vector<BitString> leaves() const;
  std::size_t levelCount(int n) const;
  std::vector<BitString> level(int n) const;
  bool isSubsetOf(const FiniteTree& other) const;

  /// n when the tree is shaped like 2^{<n}: the root splits (unless the
  /// tree is just {λ}), below a split each child may run along a unary
  /// chain before it splits again or ends, and every leaf sits below the
  /// same number of splits. nullopt otherwise.
  std::optional<int> fullBinaryHeight() const;

  friend bool operator==(const FiniteTree&, const FiniteTree&) = default;
  /// Canonical enumeration order: norm, then size, then node sequence.
  friend std::strong_ordering operator<=>(const FiniteTree& a, const FiniteTree& b);

 private:
  std::optional<int> chainHeight(BitString node) const;

  std::vector<BitString> nodes_;
};

/// True iff F is a subset of U and every node of U is in F or extends a
/// leaf of F.
bool isEndExtension(const FiniteTree& u, const FiniteTree& f);

/// Drops every node of U whose cylinder in `ambient` has measure zero.
FiniteTree trim(const FiniteTree& u, const ClopenTree& ambient);

}  // namespace cantor
