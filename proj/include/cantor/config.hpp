#pragma once

#ifndef CANTOR_MAX_DEPTH
#define CANTOR_MAX_DEPTH 24
#endif

namespace cantor {

/// Largest string length (and clopen-tree depth) accepted anywhere in the
/// library. Override at configure time with -DCANTOR_MAX_DEPTH=<n>.
inline constexpr int kMaxDepth = CANTOR_MAX_DEPTH;

static_assert(kMaxDepth >= 1 && kMaxDepth <= 30,
              "leaf bitsets are held in memory; depth must stay <= 30");

}  // namespace cantor
