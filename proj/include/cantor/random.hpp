#pragma once

#include <cstdint>
#include <random>

#include "cantor/clopen_tree.hpp"
#include "cantor/dyadic.hpp"

namespace cantor {

/// MT19937-64 with the standard seeding routine. Draws are derived only
/// from raw 64-bit outputs so that sequences are reproducible across
/// standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound) by rejection; bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  bool bit() { return next() >> 63; }

 private:
  std::mt19937_64 engine_;
};

struct GenSpec {
  int depth = 10;
  Dyadic target = Dyadic(1);
  std::uint64_t seed = 0;
};

/// Starts from the full tree of depth d and removes uniformly chosen leaves
/// while measure - 2^{-d} >= target. Throws InvalidArgument unless
/// 0 < target <= 1 and 0 <= d <= kMaxDepth.
ClopenTree genRandomPositiveTree(const GenSpec& spec);

/// Every depth-d leaf kept independently with probability 1/2.
ClopenTree genUniformTree(int depth, Rng& rng);

}  // namespace cantor
