#include "cantor/clopen_tree.hpp"

#include <bit>
#include <string>

#include "cantor/error.hpp"

namespace cantor {

namespace {

std::size_t wordCount(int depth) {
  return depth >= 6 ? (std::size_t{1} << (depth - 6)) : 1;
}

void checkDepth(int depth) {
  if (depth < 0 || depth > kMaxDepth) {
    throw Error(ErrorCode::DepthExceeded,
                "tree depth " + std::to_string(depth) + " outside [0, " +
                    std::to_string(kMaxDepth) + "]");
  }
}

std::uint64_t lowMask(std::uint64_t bits) {
  return bits >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << bits) - 1);
}

}  // namespace

ClopenTree::ClopenTree(int depth, std::vector<std::uint64_t> words)
    : depth_(depth), words_(std::move(words)) {
  for (auto w : words_) leafCount_ += static_cast<std::uint64_t>(std::popcount(w));
}

ClopenTree ClopenTree::full(int depth) {
  checkDepth(depth);
  std::vector<std::uint64_t> words(wordCount(depth), ~std::uint64_t{0});
  if (depth < 6) words[0] = lowMask(std::uint64_t{1} << depth);
  return ClopenTree(depth, std::move(words));
}

ClopenTree ClopenTree::empty(int depth) {
  checkDepth(depth);
  return ClopenTree(depth, std::vector<std::uint64_t>(wordCount(depth), 0));
}

ClopenTree ClopenTree::fromLeaves(int depth, std::span<const BitString> leaves) {
  checkDepth(depth);
  std::vector<std::uint64_t> words(wordCount(depth), 0);
  for (const auto& leaf : leaves) {
    if (leaf.length() != depth) {
      throw Error(ErrorCode::InvalidArgument,
                  "leaf '" + leaf.str() + "' does not have length " +
                      std::to_string(depth));
    }
    words[leaf.value() >> 6] |= std::uint64_t{1} << (leaf.value() & 63);
  }
  return ClopenTree(depth, std::move(words));
}

ClopenTree ClopenTree::fromWords(int depth, std::vector<std::uint64_t> words) {
  checkDepth(depth);
  if (words.size() != wordCount(depth)) {
    throw Error(ErrorCode::InvalidArgument, "bitset size does not match depth");
  }
  if (depth < 6 && (words[0] & ~lowMask(std::uint64_t{1} << depth)) != 0) {
    throw Error(ErrorCode::InvalidArgument, "bits set beyond 2^depth");
  }
  return ClopenTree(depth, std::move(words));
}

bool ClopenTree::rangeNonEmpty(std::uint64_t begin, std::uint64_t end) const {
  while (begin < end) {
    const std::uint64_t word = begin >> 6;
    const std::uint64_t offset = begin & 63;
    const std::uint64_t take = std::min<std::uint64_t>(64 - offset, end - begin);
    if ((words_[word] >> offset) & lowMask(take)) return true;
    begin += take;
  }
  return false;
}

std::uint64_t ClopenTree::rangeCount(std::uint64_t begin, std::uint64_t end) const {
  std::uint64_t count = 0;
  while (begin < end) {
    const std::uint64_t word = begin >> 6;
    const std::uint64_t offset = begin & 63;
    const std::uint64_t take = std::min<std::uint64_t>(64 - offset, end - begin);
    count += static_cast<std::uint64_t>(
        std::popcount((words_[word] >> offset) & lowMask(take)));
    begin += take;
  }
  return count;
}

bool ClopenTree::contains(const BitString& s) const {
  if (s.length() >= depth_) return hasLeaf(s.value() >> (s.length() - depth_));
  const int shift = depth_ - s.length();
  return rangeNonEmpty(s.value() << shift, (s.value() + 1) << shift);
}

std::uint64_t ClopenTree::countUnder(const BitString& s) const {
  if (s.length() > depth_) {
    throw Error(ErrorCode::DepthExceeded,
                "string '" + s.str() + "' is deeper than the tree");
  }
  const int shift = depth_ - s.length();
  return rangeCount(s.value() << shift, (s.value() + 1) << shift);
}

Dyadic ClopenTree::measureUnder(const BitString& s) const {
  if (s.length() > depth_) {
    return contains(s) ? Dyadic::pow2(-s.length()) : Dyadic(0);
  }
  return cylinderMass(countUnder(s), depth_);
}

bool ClopenTree::denserThan(const BitString& s, const Dyadic& threshold) const {
  if (s.length() > depth_) {
    return contains(s) && Dyadic(1) > threshold;
  }
  // count * 2^{-d} > t * 2^{-|s|}  <=>  count * 2^{|s|-d} > t
  return cylinderMass(countUnder(s), depth_ - s.length()) > threshold;
}

ClopenTree ClopenTree::restrict(const BitString& s) const {
  if (s.length() > depth_) {
    throw Error(ErrorCode::DepthExceeded,
                "cannot restrict a depth-" + std::to_string(depth_) +
                    " tree to '" + s.str() + "'");
  }
  const int shift = depth_ - s.length();
  const std::uint64_t begin = s.value() << shift;
  const std::uint64_t end = (s.value() + 1) << shift;
  std::vector<std::uint64_t> words(words_.size(), 0);
  for (std::uint64_t i = begin; i < end;) {
    const std::uint64_t offset = i & 63;
    const std::uint64_t take = std::min<std::uint64_t>(64 - offset, end - i);
    words[i >> 6] |= words_[i >> 6] & (lowMask(take) << offset);
    i += take;
  }
  return ClopenTree(depth_, std::move(words));
}

ClopenTree ClopenTree::withoutCylinder(const BitString& s) const {
  if (s.length() > depth_) {
    throw Error(ErrorCode::DepthExceeded,
                "cannot remove '" + s.str() + "' from a depth-" +
                    std::to_string(depth_) + " tree");
  }
  const int shift = depth_ - s.length();
  const std::uint64_t begin = s.value() << shift;
  const std::uint64_t end = (s.value() + 1) << shift;
  std::vector<std::uint64_t> words = words_;
  for (std::uint64_t i = begin; i < end;) {
    const std::uint64_t offset = i & 63;
    const std::uint64_t take = std::min<std::uint64_t>(64 - offset, end - i);
    words[i >> 6] &= ~(lowMask(take) << offset);
    i += take;
  }
  return ClopenTree(depth_, std::move(words));
}

std::uint64_t ClopenTree::levelCount(int n) const {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative level");
  if (n >= depth_) return leafCount_ << (n - depth_);
  const std::uint64_t block = std::uint64_t{1} << (depth_ - n);
  std::uint64_t count = 0;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
    if (rangeNonEmpty(v * block, (v + 1) * block)) ++count;
  }
  return count;
}

std::vector<BitString> ClopenTree::level(int n) const {
  if (n < 0 || n > depth_) {
    throw Error(ErrorCode::DepthExceeded, "level outside tree depth");
  }
  std::vector<BitString> out;
  const std::uint64_t block = std::uint64_t{1} << (depth_ - n);
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
    if (rangeNonEmpty(v * block, (v + 1) * block)) out.emplace_back(v, n);
  }
  return out;
}

ClopenTree ClopenTree::refined(int depth) const {
  checkDepth(depth);
  if (depth < depth_) {
    throw Error(ErrorCode::InvalidArgument, "refinement cannot reduce depth");
  }
  if (depth == depth_) return *this;
  std::vector<std::uint64_t> words(wordCount(depth), 0);
  const int shift = depth - depth_;
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << depth_); ++i) {
    if (!hasLeaf(i)) continue;
    for (std::uint64_t j = i << shift; j < (i + 1) << shift;) {
      const std::uint64_t offset = j & 63;
      const std::uint64_t take = std::min<std::uint64_t>(64 - offset, ((i + 1) << shift) - j);
      words[j >> 6] |= lowMask(take) << offset;
      j += take;
    }
  }
  return ClopenTree(depth, std::move(words));
}

ClopenTree ClopenTree::intersect(const ClopenTree& other) const {
  const int depth = std::max(depth_, other.depth_);
  ClopenTree a = refined(depth);
  const ClopenTree b = other.refined(depth);
  for (std::size_t i = 0; i < a.words_.size(); ++i) a.words_[i] &= b.words_[i];
  return ClopenTree(depth, std::move(a.words_));
}

bool ClopenTree::isSubsetOf(const ClopenTree& other) const {
  const int depth = std::max(depth_, other.depth_);
  const ClopenTree a = refined(depth);
  const ClopenTree b = other.refined(depth);
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    if (a.words_[i] & ~b.words_[i]) return false;
  }
  return true;
}

int growthRate(const ClopenTree& tree, int k) {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "negative k");
  if (tree.isEmpty()) throw Error(ErrorCode::NoSuchLevel, "tree is empty");
  if (k < 63) {
    const std::uint64_t need = std::uint64_t{1} << k;
    for (int m = 0; m <= tree.depth(); ++m) {
      if (tree.levelCount(m) >= need) return m;
    }
  }
  throw Error(ErrorCode::NoSuchLevel,
              "no level up to depth " + std::to_string(tree.depth()) +
                  " holds 2^" + std::to_string(k) + " nodes");
}

}  // namespace cantor
