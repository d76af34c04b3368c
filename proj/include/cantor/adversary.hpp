#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cantor/bit_string.hpp"
#include "cantor/clopen_tree.hpp"

namespace cantor {

/// A simulated halting problem: entry e holds the step count at which
/// program e halts on input e, or nullopt when it diverges. "Running e for
/// t steps" means comparing the halt time with t.
class HaltingTable {
 public:
  using HaltTime = std::optional<std::uint64_t>;

  HaltingTable() = default;
  explicit HaltingTable(std::vector<HaltTime> entries) : entries_(std::move(entries)) {}

  int size() const noexcept { return static_cast<int>(entries_.size()); }
  const HaltTime& operator[](int e) const { return entries_[static_cast<std::size_t>(e)]; }
  const std::vector<HaltTime>& entries() const noexcept { return entries_; }

  /// The first n entries.
  HaltingTable restricted(int n) const;

  friend bool operator==(const HaltingTable&, const HaltingTable&) = default;

 private:
  std::vector<HaltTime> entries_;
};

/// m(x): least s with every halting e < x halted by step s.
/// Throws OutOfTable when x > size.
std::uint64_t modulus(const HaltingTable& table, int x);

/// Every one-position p(n) of s with n <= size satisfies p(n) >= m(n).
/// One-positions are 0-based: p(0) is the first index holding a 1.
bool inC(const HaltingTable& table, const BitString& s);

/// Clopen truncation of C at depth d: leaves are the length-d strings in C.
/// Built by depth-first extension, cutting a branch as soon as a one lands
/// too early. Throws InvalidArgument when d < 1.
ClopenTree adversarialTree(const HaltingTable& table, int depth);

/// Recovers the first `entries` rows of the table from a member s of C:
/// e halts iff its halt time is <= p(e+1). Throws OutOfTable when
/// entries > size, InsufficientOnes when s has <= entries ones, NotInC when
/// s is not in C.
HaltingTable decodeHalting(const BitString& s, int entries, const HaltingTable& table);

}  // namespace cantor
