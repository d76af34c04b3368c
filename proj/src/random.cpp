#include "cantor/random.hpp"

#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "cantor/config.hpp"
#include "cantor/error.hpp"

namespace cantor {

std::uint64_t Rng::below(std::uint64_t bound) {
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit = -bound % bound;
  for (;;) {
    const std::uint64_t r = next();
    if (r >= limit) return r % bound;
  }
}

ClopenTree genRandomPositiveTree(const GenSpec& spec) {
  if (spec.depth < 0 || spec.depth > kMaxDepth) {
    throw Error(ErrorCode::InvalidArgument, "depth " + std::to_string(spec.depth) +
                                                " outside 0.." + std::to_string(kMaxDepth));
  }
  if (!spec.target.isPositive() || spec.target > Dyadic(1)) {
    throw Error(ErrorCode::InvalidArgument, "target must lie in (0, 1], got " + spec.target.str());
  }
  const std::uint64_t size = std::uint64_t{1} << spec.depth;
  // keep = ceil(target * 2^d), the fewest leaves with measure >= target.
  const Dyadic scaled = spec.target.scaled(spec.depth);
  Dyadic::Integer least = scaled.numerator() >> scaled.exponent();
  if (scaled.exponent() != 0) least += 1;
  const auto keep = static_cast<std::uint64_t>(least);

  std::vector<std::uint32_t> order(size);
  std::iota(order.begin(), order.end(), 0u);
  std::vector<std::uint64_t> words((size + 63) / 64, ~std::uint64_t{0});
  if (size < 64) words[0] = (std::uint64_t{1} << size) - 1;

  Rng rng(spec.seed);
  for (std::uint64_t i = 0; i < size - keep; ++i) {
    std::swap(order[i], order[i + rng.below(size - i)]);
    words[order[i] >> 6] &= ~(std::uint64_t{1} << (order[i] & 63));
  }
  return ClopenTree::fromWords(spec.depth, std::move(words));
}

ClopenTree genUniformTree(int depth, Rng& rng) {
  if (depth < 0 || depth > kMaxDepth) {
    throw Error(ErrorCode::InvalidArgument, "depth " + std::to_string(depth) + " outside 0.." +
                                                std::to_string(kMaxDepth));
  }
  const std::uint64_t size = std::uint64_t{1} << depth;
  std::vector<std::uint64_t> words((size + 63) / 64);
  for (auto& w : words) w = rng.next();
  if (size < 64) words[0] &= (std::uint64_t{1} << size) - 1;
  return ClopenTree::fromWords(depth, std::move(words));
}

}  // namespace cantor
