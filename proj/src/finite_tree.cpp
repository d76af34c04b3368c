#include "cantor/finite_tree.hpp"

#include <algorithm>

#include "cantor/error.hpp"

namespace cantor {

FiniteTree::FiniteTree(std::vector<BitString> nodes) : nodes_(std::move(nodes)) {
  std::sort(nodes_.begin(), nodes_.end());
  nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());
  for (const auto& node : nodes_) {
    if (!node.empty() && !contains(node.prefix(node.length() - 1))) {
      throw Error(ErrorCode::NotPrefixClosed,
                  "node '" + node.str() + "' is missing its parent");
    }
  }
}

FiniteTree FiniteTree::closureOf(std::span<const BitString> strings) {
  std::vector<BitString> nodes;
  for (const auto& s : strings) {
    for (int n = 0; n <= s.length(); ++n) nodes.push_back(s.prefix(n));
  }
  return FiniteTree(std::move(nodes));
}

FiniteTree FiniteTree::fullBinary(int n) {
  std::vector<BitString> nodes;
  for (int len = 0; len < n; ++len) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) {
      nodes.emplace_back(v, len);
    }
  }
  return FiniteTree(std::move(nodes));
}

bool FiniteTree::contains(const BitString& s) const {
  return std::binary_search(nodes_.begin(), nodes_.end(), s);
}

std::vector<BitString> FiniteTree::leaves() const {
  std::vector<BitString> out;
  for (const auto& node : nodes_) {
    if (node.length() == kMaxDepth ||
        (!contains(node.child(false)) && !contains(node.child(true)))) {
      out.push_back(node);
    }
  }
  return out;
}

std::size_t FiniteTree::levelCount(int n) const {
  return static_cast<std::size_t>(std::count_if(
      nodes_.begin(), nodes_.end(), [n](const BitString& s) { return s.length() == n; }));
}

std::vector<BitString> FiniteTree::level(int n) const {
  std::vector<BitString> out;
  for (const auto& node : nodes_) {
    if (node.length() == n) out.push_back(node);
  }
  return out;
}

bool FiniteTree::isSubsetOf(const FiniteTree& other) const {
  return std::includes(other.nodes_.begin(), other.nodes_.end(), nodes_.begin(),
                       nodes_.end());
}

std::optional<int> FiniteTree::chainHeight(BitString node) const {
  for (;;) {
    if (node.length() == kMaxDepth) return 1;
    const bool left = contains(node.child(false));
    const bool right = contains(node.child(true));
    if (left && right) {
      const auto a = chainHeight(node.child(false));
      const auto b = chainHeight(node.child(true));
      if (!a || !b || *a != *b) return std::nullopt;
      return *a + 1;
    }
    if (!left && !right) return 1;
    node = node.child(right);
  }
}

std::optional<int> FiniteTree::fullBinaryHeight() const {
  if (nodes_.empty()) return std::nullopt;
  const BitString root;
  const bool left = contains(root.child(false));
  const bool right = contains(root.child(true));
  if (left != right) return std::nullopt;
  return chainHeight(root);
}

std::strong_ordering operator<=>(const FiniteTree& a, const FiniteTree& b) {
  if (auto c = a.norm() <=> b.norm(); c != 0) return c;
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.nodes_.begin(), a.nodes_.end(),
                                                b.nodes_.begin(), b.nodes_.end());
}

bool isEndExtension(const FiniteTree& u, const FiniteTree& f) {
  if (!f.isSubsetOf(u)) return false;
  const auto fLeaves = f.leaves();
  for (const auto& node : u.nodes()) {
    if (f.contains(node)) continue;
    bool extendsLeaf = false;
    for (int n = node.length() - 1; n >= 0 && !extendsLeaf; --n) {
      extendsLeaf = std::binary_search(fLeaves.begin(), fLeaves.end(), node.prefix(n));
    }
    if (!extendsLeaf) return false;
  }
  return true;
}

FiniteTree trim(const FiniteTree& u, const ClopenTree& ambient) {
  std::vector<BitString> kept;
  kept.reserve(u.size());
  for (const auto& node : u.nodes()) {
    if (ambient.contains(node)) kept.push_back(node);
  }
  return FiniteTree(std::move(kept));
}

}  // namespace cantor
