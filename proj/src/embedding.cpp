#include "cantor/embedding.hpp"

#include <deque>
#include <string>

#include "cantor/error.hpp"

namespace cantor {

namespace {

std::uint64_t nodeCount(int depth) { return (std::uint64_t{2} << depth) - 1; }

/// Proper extensions of `node` with length <= maxLength, in length-lex order.
template <typename Visit>
bool forEachExtension(const BitString& node, int maxLength, Visit&& visit) {
  for (int len = node.length() + 1; len <= maxLength; ++len) {
    const int shift = len - node.length();
    const std::uint64_t begin = node.value() << shift;
    const std::uint64_t end = (node.value() + 1) << shift;
    for (std::uint64_t v = begin; v < end; ++v) {
      if (visit(BitString(v, len))) return true;
    }
  }
  return false;
}

}  // namespace

Coloring::Coloring(int depth, int colors, std::vector<int> values)
    : depth_(depth), colors_(colors), values_(std::move(values)) {
  if (depth < 0 || depth > kMaxDepth) throw Error(ErrorCode::DepthExceeded, "coloring depth");
  if (colors < 1) throw Error(ErrorCode::InvalidArgument, "a coloring needs at least one color");
  if (values_.size() != nodeCount(depth)) {
    throw Error(ErrorCode::InvalidArgument,
                "coloring of depth " + std::to_string(depth) + " needs " +
                    std::to_string(nodeCount(depth)) + " values");
  }
  for (int v : values_) {
    if (v < 0 || v >= colors) throw Error(ErrorCode::InvalidArgument, "color out of range");
  }
}

Coloring Coloring::fromFunction(int depth, int colors,
                                const std::function<int(const BitString&)>& color) {
  std::vector<int> values;
  for (std::uint64_t i = 0; i < nodeCount(depth); ++i) values.push_back(color(fromHeapIndex(i)));
  return Coloring(depth, colors, std::move(values));
}

PerfectEmbedding::PerfectEmbedding(int height, std::vector<BitString> images)
    : height_(height), images_(std::move(images)) {
  const std::uint64_t expected = height > 0 ? nodeCount(height - 1) : 0;
  if (images_.size() != expected) {
    throw Error(ErrorCode::InvalidArgument, "embedding has the wrong number of images");
  }
}

std::vector<BitString> PerfectEmbedding::leafImages() const {
  std::vector<BitString> out;
  if (height_ == 0) return out;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << (height_ - 1)); ++v) {
    out.push_back((*this)(BitString(v, height_ - 1)));
  }
  return out;
}

std::vector<std::pair<BitString, BitString>> PerfectEmbedding::associations() const {
  std::vector<std::pair<BitString, BitString>> out;
  for (std::uint64_t i = 0; i < images_.size(); ++i) out.emplace_back(fromHeapIndex(i), images_[i]);
  return out;
}

bool isPerfectEmbedding(const PerfectEmbedding& e) {
  if (e.height() < 1) return false;
  for (int len = 0; len + 1 < e.height(); ++len) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) {
      const BitString source(v, len);
      const BitString& parent = e(source);
      const BitString& left = e(source.child(false));
      const BitString& right = e(source.child(true));
      if (!parent.isPrefixOf(left) || left == parent) return false;
      if (!parent.isPrefixOf(right) || right == parent) return false;
      if (left.comparableWith(right)) return false;
    }
  }
  return true;
}

std::optional<PerfectEmbedding> greedyEmbedding(int depth, const NodePredicate& allowed,
                                                int height) {
  if (height < 1 || height - 1 > depth) return std::nullopt;
  std::vector<BitString> images(nodeCount(height - 1));

  // The root needs room for height-1 further levels.
  std::optional<BitString> root;
  for (std::uint64_t i = 0; i < nodeCount(depth - height + 1) && !root; ++i) {
    const BitString candidate = fromHeapIndex(i);
    if (allowed(candidate)) root = candidate;
  }
  if (!root) return std::nullopt;
  images[0] = *root;

  for (int len = 0; len + 1 < height; ++len) {
    // Children of a level-len source still need height-len-2 levels below.
    const int maxLength = depth - (height - len - 2);
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) {
      const BitString source(v, len);
      const BitString parent = images[heapIndex(source)];
      std::optional<BitString> left;
      forEachExtension(parent, maxLength, [&](const BitString& s) {
        if (allowed(s)) left = s;
        return left.has_value();
      });
      if (!left) return std::nullopt;
      std::optional<BitString> right;
      forEachExtension(parent, maxLength, [&](const BitString& s) {
        if (!s.comparableWith(*left) && allowed(s)) right = s;
        return right.has_value();
      });
      if (!right) return std::nullopt;
      images[heapIndex(source.child(false))] = *left;
      images[heapIndex(source.child(true))] = *right;
    }
  }
  return PerfectEmbedding(height, std::move(images));
}

std::optional<PerfectEmbedding> findEmbedding(int depth, const NodePredicate& allowed,
                                              int height) {
  if (height < 1 || depth < 0) return std::nullopt;
  const std::uint64_t total = nodeCount(depth);

  std::vector<char> permitted(total);
  for (std::uint64_t i = 0; i < total; ++i) permitted[i] = allowed(fromHeapIndex(i)) ? 1 : 0;

  // feasible[h][i]: node i can host the image root of a copy of 2^{<h+1}.
  std::vector<std::vector<char>> feasible;
  feasible.push_back(permitted);

  enum Shape : char { kEmpty, kChain, kBranch };
  for (int h = 1; h < height; ++h) {
    const auto& prev = feasible.back();
    // shape[i]: structure of the prev-feasible nodes in the subtree at i.
    std::vector<char> shape(total, kEmpty);
    std::vector<char> next(total, 0);
    for (std::uint64_t i = total; i-- > 0;) {
      const BitString node = fromHeapIndex(i);
      char below = kEmpty;
      if (node.length() < depth) {
        const char l = shape[heapIndex(node.child(false))];
        const char r = shape[heapIndex(node.child(true))];
        if (l == kBranch || r == kBranch || (l != kEmpty && r != kEmpty)) {
          below = kBranch;
        } else {
          below = (l != kEmpty || r != kEmpty) ? kChain : kEmpty;
        }
      }
      next[i] = permitted[i] && below == kBranch;
      shape[i] = below != kEmpty ? below : static_cast<char>(prev[i] ? kChain : kEmpty);
    }
    feasible.push_back(std::move(next));
  }

  const auto& top = feasible.back();
  std::optional<BitString> root;
  for (std::uint64_t i = 0; i < total && !root; ++i) {
    if (top[i]) root = fromHeapIndex(i);
  }
  if (!root) return std::nullopt;

  std::vector<BitString> images(nodeCount(height - 1));
  images[0] = *root;
  for (int len = 0; len + 1 < height; ++len) {
    const auto& candidateLevel = feasible[static_cast<std::size_t>(height - len - 2)];
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) {
      const BitString source(v, len);
      const BitString parent = images[heapIndex(source)];
      std::vector<BitString> candidates;
      forEachExtension(parent, depth, [&](const BitString& s) {
        if (candidateLevel[heapIndex(s)]) candidates.push_back(s);
        return false;
      });
      bool placed = false;
      for (std::size_t a = 0; a < candidates.size() && !placed; ++a) {
        for (std::size_t b = 0; b < candidates.size(); ++b) {
          if (!candidates[a].comparableWith(candidates[b])) {
            images[heapIndex(source.child(false))] = candidates[a];
            images[heapIndex(source.child(true))] = candidates[b];
            placed = true;
            break;
          }
        }
      }
      if (!placed) {
        throw Error(ErrorCode::InvalidArgument, "embedding feasibility table is inconsistent");
      }
    }
  }
  return PerfectEmbedding(height, std::move(images));
}

HomogeneousTree tt1Homog(const Coloring& coloring, int k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be >= 1");
  for (int color = 0; color < coloring.colors(); ++color) {
    const NodePredicate sameColor = [&](const BitString& s) { return coloring(s) == color; };
    if (auto e = greedyEmbedding(coloring.depth(), sameColor, k)) {
      return {color, std::move(*e), SearchStrategy::Greedy};
    }
    if (auto e = findEmbedding(coloring.depth(), sameColor, k)) {
      return {color, std::move(*e), SearchStrategy::Exhaustive};
    }
  }
  throw Error(ErrorCode::NoHomogeneousTree,
              "no color admits a perfect copy of 2^{<" + std::to_string(k) + "} within depth " +
                  std::to_string(coloring.depth()));
}

}  // namespace cantor
